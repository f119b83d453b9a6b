"""Exact nested-interval reals with an interactive order learner.

The package provides:

* exact computable reals as nested rational-interval sequences with a
  decidable precision-indexed strict-order predicate (:mod:`.reals`);
* knowledge states, evidence chains, and blame propagation for learned
  order facts (:mod:`.knowledge`);
* least-element learning with restart backtracking (:mod:`.least`);
* plane geometry over exact reals and the certified convex-angle
  construction (:mod:`.geometry`, :mod:`.convex`);
* exact rational oracles and trace replay audits (:mod:`.oracle`);
* a line-oriented document format and a CLI (:mod:`.inputs`, :mod:`.cli`).
"""

from .convex import (
    BoundingCertificate,
    CertificateFailure,
    ConvexAngleResult,
    TooFewPoints,
    convex_angle,
    verify_bounding,
)
from .geometry import (
    DegenerateInput,
    Left,
    NoWitnessFound,
    Point,
    Right,
    SideDecision,
    decide_side,
    orientation_real,
    strictly_below_witness,
    three_points,
)
from .knowledge import (
    Assumed,
    AssumeLeq,
    Decision,
    Falsified,
    KnowledgeState,
    LeqEvidence,
    Refl,
    ReflFalsified,
    Step,
    StrictLt,
    UnsoundWitness,
    blame,
    check_leq,
    claim,
    decide_total,
    empty_state,
    extend,
    is_sound,
)
from .least import (
    Auditor,
    Challenge,
    LeastCandidate,
    LearnOutcome,
    NullAuditor,
    RestartBudgetExceeded,
    ScriptedAuditor,
    evidence_graph,
    learn_least,
    least_candidate,
)
from .oracle import (
    ComputationTree,
    OracleAuditor,
    PathMismatch,
    RationalPoint,
    ReplayVerdict,
    TieDetected,
    enumerate_tree,
    exact_convex_check,
    exact_min_index,
    exact_orientation,
    replay_paths,
    separation_from_gap,
)
from .reals import (
    InvalidNesting,
    Rational,
    RealNum,
    RealRegistry,
    find_strict_witness,
    op_at,
)
from .trace import TraceEvent, TraceLog, read_trace, state_snapshot, write_trace

__version__ = "0.1.0"
