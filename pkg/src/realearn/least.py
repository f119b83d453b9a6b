"""Learning the least element of a finite list of reals.

:func:`least_candidate` runs a single pass over indices ``0..n`` and
returns the least element relative to the current knowledge state,
together with an evidence chain for every comparison it relied on.
With an empty state this is pure guessing: index 0 is proposed and
every comparison is assumed.

:func:`learn_least` wraps the pass in an interactive loop.  An auditor
challenges claims at chosen precisions; a refuted claim is blamed on
the assumption that produced it, the knowledge state is extended with
the discovered counterexample, and the pass restarts from scratch.
Each restart flips exactly one assumed comparison on the current
decision path to a strict one, so progress through the space of
decision paths is strictly left to right and the number of restarts is
bounded by ``2**n - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Protocol, Sequence, Set, Tuple

from .knowledge import (
    Assumed,
    AssumeLeq,
    Falsified,
    KnowledgeState,
    LeqEvidence,
    Refl,
    Step,
    StrictLt,
    blame,
    check_leq,
    decide_total,
    extend,
)
from .trace import TraceEvent, TraceLog, state_snapshot


class RestartBudgetExceeded(RuntimeError):
    """The run needed more restarts than the configured budget."""

    def __init__(self, restarts: int, budget: int):
        self.restarts = restarts
        self.budget = budget
        super().__init__(f"restart {restarts} exceeds budget {budget}")


@dataclass(frozen=True)
class LeastCandidate:
    """A proposed least index plus evidence for each comparison.

    ``evidences[j]`` claims ``r_candidate <= r_j`` for every j in
    ``0..n``; the candidate's own entry is reflexive.
    """

    candidate: int
    evidences: Dict[int, LeqEvidence]


@dataclass(frozen=True)
class Challenge:
    """An auditor's demand: test claim ``candidate <= j`` at ``precision``.

    ``force`` marks the challenge as carrying its own refutation: the
    claim is treated as refuted at ``precision`` even if the local
    check does not observe a counterexample.  This models an outer
    argument that derived the counterexample elsewhere; the resulting
    state extension is still verified against the actual reals.
    """

    j: int
    precision: int
    force: bool = False


class Auditor(Protocol):
    def challenge(self, cand: LeastCandidate) -> Optional[Challenge]:
        """Next challenge against this candidate, or None to accept."""


class NullAuditor:
    """Accepts every candidate immediately."""

    def challenge(self, cand: LeastCandidate) -> Optional[Challenge]:
        return None


class ScriptedAuditor:
    """Plays back a fixed list of challenges, then accepts.

    Challenge order across candidates is the script's responsibility;
    the auditor simply hands out the next entry each time it is asked.
    """

    def __init__(self, script: Iterable[Challenge]):
        self._script = list(script)
        self._next = 0

    def challenge(self, cand: LeastCandidate) -> Optional[Challenge]:
        if self._next >= len(self._script):
            return None
        entry = self._script[self._next]
        self._next += 1
        return entry


def least_candidate(state: KnowledgeState, n: int,
                    trace: Optional[TraceLog] = None) -> LeastCandidate:
    """One deterministic pass proposing the least of ``r_0 .. r_n``.

    Walks i = 1..n keeping a running candidate.  An assumed comparison
    keeps the candidate and records the assumption; a strict answer
    switches the candidate to i and upgrades every existing evidence
    chain by chaining the strict step in front of it.
    """
    candidate = 0
    evidences: Dict[int, LeqEvidence] = {0: Refl(0)}
    for i in range(1, n + 1):
        decision = decide_total(state, candidate, i)
        if isinstance(decision, AssumeLeq):
            if trace is not None:
                trace.emit("decide", step=i, pair=[candidate, i], decision="assume")
            evidences[i] = decision.evidence
        else:
            if trace is not None:
                trace.emit("decide", step=i, pair=[candidate, i],
                           decision="strict", witness=decision.witness)
            evidences = {
                j: Step(decision.witness, ev, i) for j, ev in evidences.items()
            }
            evidences[i] = Refl(i)
            candidate = i
    return LeastCandidate(candidate, evidences)


def evidence_graph(cand: LeastCandidate) -> Tuple[Set[Tuple[int, int, int]],
                                                  Set[Tuple[int, int]]]:
    """Edge view of a candidate's evidence.

    Returns ``(solid, dotted)``: solid edges ``(a, b, w)`` are strict
    facts ``op_at(r_a, r_b, w)``; dotted edges ``(i, j)`` are open
    assumptions ``r_i <= r_j``.
    """
    solid: Set[Tuple[int, int, int]] = set()
    dotted: Set[Tuple[int, int]] = set()
    for ev in cand.evidences.values():
        while isinstance(ev, Step):
            solid.add((ev.subject, ev.rest.subject, ev.witness))
            ev = ev.rest
        if isinstance(ev, Assumed):
            dotted.add((ev.i, ev.j))
    return solid, dotted


@dataclass
class LearnOutcome:
    candidate: LeastCandidate
    state: KnowledgeState
    trace: List[TraceEvent]
    restarts: int


def learn_least(n: int, auditor: Auditor, initial: KnowledgeState,
                max_restarts: int,
                trace: Optional[TraceLog] = None) -> LearnOutcome:
    """Interactive least-element learning with restart backtracking.

    Repeats: propose a candidate from the current state, let the
    auditor challenge claims one at a time; a challenge that checks out
    is simply recorded, a refuted one is blamed on its assumption, the
    state is extended, and the whole pass restarts.  The auditor
    accepting (returning None) ends the run.
    """
    log = trace if trace is not None else TraceLog()
    state = initial
    registry = state.registry
    restarts = 0
    while True:
        cand = least_candidate(state, n, log)
        log.emit("candidate", candidate=cand.candidate,
                 state=state_snapshot(state))
        restarted = False
        while not restarted:
            ch = auditor.challenge(cand)
            if ch is None:
                log.emit("accept", candidate=cand.candidate,
                         restarts=restarts, state=state_snapshot(state))
                return LearnOutcome(cand, state, log.events, restarts)
            ev = cand.evidences[ch.j]
            log.emit("challenge", j=ch.j, precision=ch.precision,
                     claim=[ev.subject, ev.target], forced=ch.force)
            result = check_leq(registry, ev, ch.precision)
            if result is None and ch.force:
                # The challenge carries its own refutation; blame it the
                # same way an observed counterexample would be blamed.
                result = Falsified(*blame(ev, ch.precision))
            if result is None:
                log.emit("check", j=ch.j, precision=ch.precision, outcome="ok")
                continue
            log.emit("falsified", j=ch.j, precision=ch.precision,
                     claim=[ev.subject, ev.target])
            log.emit("blame", pair=list(result.pair), witness=result.witness)
            before = state.size
            state = extend(state, result.pair[0], result.pair[1], result.witness)
            assert state.size == before + 1, "blamed pair was already known"
            log.emit("extend", pair=list(result.pair), witness=result.witness,
                     state=state_snapshot(state))
            restarts += 1
            if restarts > max_restarts:
                raise RestartBudgetExceeded(restarts, max_restarts)
            log.emit("restart", count=restarts)
            restarted = True
