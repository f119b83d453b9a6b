"""Finding a convex angle that bounds a finite point set.

Given points ``P_0 .. P_n`` in general position, the algorithm picks an
apex A and two rays A->B and A->C such that every other point lies
strictly left of A->B and strictly right of A->C.  The apex is the
least-element guess for the y coordinates under the current knowledge
state, so the claim "A is lowest" is never proved: it is assumed per
comparison and refuted on demand.

The scan maintains candidates B and C and classifies each remaining
point d by its sides relative to A->B and A->C:

* left of A->B and right of A->C: d is inside the angle, record both
  witnesses;
* right of both: the angle is too narrow on the B side, d becomes the
  new B and every previously certified point is re-scanned against the
  new ray;
* left of both: symmetric, d becomes the new C;
* right of A->B but left of A->C: d is behind the apex.

In the last case, and when a re-scan finds a point on the wrong side
of a replaced ray, the offending triple forms a left-turning cycle
around A, so A lies strictly inside a triangle of other points and one
of them must be strictly below A.  That point refutes one assumed
y comparison; the knowledge state is extended with the blamed
counterexample and the whole construction restarts.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .geometry import (
    DegenerateInput,
    Left,
    Point,
    Right,
    SideDecision,
    decide_side,
    orientation_real,
    three_points,
)
from .knowledge import KnowledgeState, blame, empty_state, extend
from .least import LeastCandidate, RestartBudgetExceeded, least_candidate
from .reals import RealNum
from .trace import TraceEvent, TraceLog, state_snapshot


class TooFewPoints(ValueError):
    """The construction needs at least three points."""


class CertificateFailure(RuntimeError):
    """A bounding certificate failed to re-derive."""


@dataclass(frozen=True)
class BoundingCertificate:
    """Witnessed bounding condition for apex a and rays a->b, a->c.

    ``left[d]`` witnesses P_d strictly left of a->b and ``right[d]``
    strictly right of a->c, for every point index d outside
    ``{a, b, c}``.  The mutual pair: ``c_left`` witnesses P_c left of
    a->b, ``b_right`` witnesses P_b right of a->c.
    """

    a: int
    b: int
    c: int
    left: Dict[int, int]
    right: Dict[int, int]
    c_left: int
    b_right: int


@dataclass
class ConvexAngleResult:
    a: int
    b: int
    c: int
    certificate: BoundingCertificate
    state: KnowledgeState
    restarts: int
    trace: List[TraceEvent]


class _SideOracle:
    """Caching wrapper over decide_side for one construction run.

    Orientation reals and decisions are cached per index triple, so
    re-scans after candidate replacement do not re-register arithmetic.
    """

    def __init__(self, points: Sequence[Point], k_max: int,
                 trace: Optional[TraceLog]):
        self._points = points
        self._k_max = k_max
        self._trace = trace
        self._orients: Dict[Tuple[int, int, int], RealNum] = {}
        self._decisions: Dict[Tuple[int, int, int], SideDecision] = {}

    def side(self, p: int, q: int, r: int, stage: str) -> SideDecision:
        key = (p, q, r)
        decision = self._decisions.get(key)
        if decision is None:
            orient = self._orients.get(key)
            if orient is None:
                pts = self._points
                orient = orientation_real(pts[p], pts[q], pts[r])
                self._orients[key] = orient
            decision = decide_side(self._points[p], self._points[q],
                                   self._points[r], self._k_max, orient)
            self._decisions[key] = decision
        if self._trace is not None:
            name = "left" if isinstance(decision, Left) else "right"
            self._trace.emit("side", stage=stage, line=[p, q], point=r,
                             side=name, witness=decision.witness)
        return decision


def _check_point_layout(points: Sequence[Point]) -> None:
    for position, point in enumerate(points):
        if point.index != position:
            raise ValueError(
                f"point at position {position} carries index {point.index}")
        if point.y.index != position:
            raise ValueError(
                "y coordinates must be registered at indices 0..n "
                f"(point {position} has y real {point.y.index})")


def convex_angle(points: Sequence[Point], k_max: int = 256,
                 max_restarts: Optional[int] = None,
                 trace: Optional[TraceLog] = None) -> ConvexAngleResult:
    """Construct a witnessed bounding angle for ``points``.

    Points must be listed with dense indices and their y coordinates
    registered at real indices ``0..n``, so that knowledge-state
    entries about y order use point indices directly.
    """
    if len(points) < 3:
        raise TooFewPoints(f"need at least 3 points, got {len(points)}")
    _check_point_layout(points)
    n = len(points) - 1
    budget = max_restarts if max_restarts is not None else 2 ** n
    log = trace if trace is not None else TraceLog()
    registry = points[0].y.registry
    state = empty_state(registry)
    sides = _SideOracle(points, k_max, log)
    restarts = 0

    while True:
        cand = least_candidate(state, n, log)
        a = cand.candidate
        log.emit("select-A", candidate=a, state=state_snapshot(state))

        rest = [i for i in range(n + 1) if i != a]
        b, c = rest[0], rest[1]
        first = sides.side(a, c, b, "init")
        swapped = isinstance(first, Left)
        if swapped:
            b, c = c, b
        mutual_b_right = sides.side(a, c, b, "mutual")
        assert isinstance(mutual_b_right, Right), "B not right of A->C after swap"
        mutual_c_left = sides.side(a, b, c, "mutual")
        assert isinstance(mutual_c_left, Left), "C not left of A->B after swap"
        log.emit("init-BC", b=b, c=c, swapped=swapped,
                 b_right_witness=mutual_b_right.witness,
                 c_left_witness=mutual_c_left.witness)

        left_w: Dict[int, int] = {}
        right_w: Dict[int, int] = {}
        falsification: Optional[Tuple[int, int]] = None

        for d in rest[2:]:
            s1 = sides.side(a, b, d, "scan")
            s2 = sides.side(a, c, d, "scan")
            if isinstance(s1, Left) and isinstance(s2, Right):
                log.emit("scan", d=d, case="keep")
                left_w[d] = s1.witness
                right_w[d] = s2.witness
            elif isinstance(s1, Right) and isinstance(s2, Right):
                log.emit("scan", d=d, case="new-b")
                old_b = b
                b = d
                # The replaced candidate keeps its right-of-A->C witness
                # and sits left of the new ray by orientation antisymmetry.
                moved = sides.side(a, b, old_b, "rescan")
                assert isinstance(moved, Left), "replaced B not left of new ray"
                left_w[old_b] = moved.witness
                right_w[old_b] = mutual_b_right.witness
                mutual_b_right = s2
                renewed = sides.side(a, b, c, "mutual")
                assert isinstance(renewed, Left), "C not left of new A->B"
                mutual_c_left = renewed
                for prior in sorted(left_w):
                    if prior == old_b:
                        continue
                    redo = sides.side(a, b, prior, "rescan")
                    if isinstance(redo, Left):
                        left_w[prior] = redo.witness
                    else:
                        which, w = three_points(points[a], points[d],
                                                points[old_b], points[prior],
                                                k_max)
                        x = (d, old_b, prior)[which]
                        log.emit("three-points", a=a, cycle=[d, old_b, prior],
                                 below=x, witness=w)
                        falsification = (x, w)
                        break
                if falsification is not None:
                    break
            elif isinstance(s1, Left) and isinstance(s2, Left):
                log.emit("scan", d=d, case="new-c")
                old_c = c
                c = d
                moved = sides.side(a, c, old_c, "rescan")
                assert isinstance(moved, Right), "replaced C not right of new ray"
                right_w[old_c] = moved.witness
                left_w[old_c] = mutual_c_left.witness
                mutual_c_left = s1
                renewed = sides.side(a, c, b, "mutual")
                assert isinstance(renewed, Right), "B not right of new A->C"
                mutual_b_right = renewed
                for prior in sorted(right_w):
                    if prior == old_c:
                        continue
                    redo = sides.side(a, c, prior, "rescan")
                    if isinstance(redo, Right):
                        right_w[prior] = redo.witness
                    else:
                        which, w = three_points(points[a], points[prior],
                                                points[old_c], points[d],
                                                k_max)
                        x = (prior, old_c, d)[which]
                        log.emit("three-points", a=a, cycle=[prior, old_c, d],
                                 below=x, witness=w)
                        falsification = (x, w)
                        break
                if falsification is not None:
                    break
            else:
                # d is behind the apex: right of A->B yet left of A->C.
                log.emit("scan", d=d, case="blocked")
                which, w = three_points(points[a], points[d], points[b],
                                        points[c], k_max)
                x = (d, b, c)[which]
                log.emit("three-points", a=a, cycle=[d, b, c],
                         below=x, witness=w)
                falsification = (x, w)
                break

        if falsification is None:
            expected = set(range(n + 1)) - {a, b, c}
            assert set(left_w) == expected and set(right_w) == expected, \
                "certificate does not cover all points"
            certificate = BoundingCertificate(
                a=a, b=b, c=c, left=dict(sorted(left_w.items())),
                right=dict(sorted(right_w.items())),
                c_left=mutual_c_left.witness,
                b_right=mutual_b_right.witness)
            log.emit("accept", a=a, b=b, c=c, restarts=restarts,
                     state=state_snapshot(state))
            return ConvexAngleResult(a, b, c, certificate, state,
                                     restarts, log.events)

        x, w = falsification
        pair, witness = blame(cand.evidences[x], w)
        log.emit("blame", claim=[a, x], pair=list(pair), witness=witness)
        state = extend(state, pair[0], pair[1], witness)
        log.emit("extend", pair=list(pair), witness=witness,
                 state=state_snapshot(state))
        restarts += 1
        if restarts > budget:
            raise RestartBudgetExceeded(restarts, budget)
        log.emit("restart", count=restarts)


def verify_bounding(points: Sequence[Point], a: int, b: int, c: int,
                    k_max: int = 256) -> BoundingCertificate:
    """Independently re-derive the bounding certificate for (a, b, c).

    Runs fresh side decisions for every clause and raises
    :class:`CertificateFailure` on the first clause whose side comes
    out wrong or cannot be witnessed within the budget.  Intended as a
    post-hoc audit of :func:`convex_angle` output.
    """
    indices = {point.index for point in points}
    for name, value in (("a", a), ("b", b), ("c", c)):
        if value not in indices:
            raise CertificateFailure(f"{name} = {value} is not a point index")
    if len({a, b, c}) != 3:
        raise CertificateFailure(f"apex and ray indices overlap: {(a, b, c)}")

    def audit(p: int, q: int, r: int, want_left: bool, clause: str) -> int:
        try:
            decision = decide_side(points[p], points[q], points[r], k_max)
        except DegenerateInput as exc:
            raise CertificateFailure(f"{clause}: {exc}") from exc
        if want_left != isinstance(decision, Left):
            side = "left" if isinstance(decision, Left) else "right"
            raise CertificateFailure(
                f"{clause}: point {r} is {side} of line {p}->{q}")
        return decision.witness

    c_left = audit(a, b, c, True, "mutual pair")
    b_right = audit(a, c, b, False, "mutual pair")
    left: Dict[int, int] = {}
    right: Dict[int, int] = {}
    for d in sorted(indices - {a, b, c}):
        left[d] = audit(a, b, d, True, f"bounding clause for point {d}")
        right[d] = audit(a, c, d, False, f"bounding clause for point {d}")
    return BoundingCertificate(a=a, b=b, c=c, left=left, right=right,
                               c_left=c_left, b_right=b_right)
