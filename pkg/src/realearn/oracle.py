"""Exact rational reference implementations and replay audits.

Everything here works on exact rational data (the known limits of the
registered reals, or plain rational coordinates) and serves as an
independent check on the interval-based machinery: closed-form
orientation signs, the true argmin, the full bounding condition, an
auditor that challenges exactly-false claims, and replay of recorded
runs against the exhaustively enumerated decision tree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .least import Challenge, LeastCandidate
from .reals import RealRegistry, find_strict_witness
from .trace import TraceEvent

TREE_LIMIT = 12


class TieDetected(ValueError):
    """Exact values are not distinct where distinctness is required."""


class PathMismatch(RuntimeError):
    """A recorded decision path does not embed in the decision tree."""


@dataclass(frozen=True)
class RationalPoint:
    x: Fraction
    y: Fraction


def exact_orientation(p: RationalPoint, q: RationalPoint,
                      r: RationalPoint) -> int:
    """Sign of the orientation of r relative to the line p -> q."""
    value = (q.x - p.x) * (r.y - p.y) - (r.x - p.x) * (q.y - p.y)
    if value > 0:
        return 1
    if value < 0:
        return -1
    return 0


def exact_min_index(values: Sequence[Fraction]) -> int:
    """Index of the unique minimum; ties are an input error."""
    smallest = min(values)
    hits = [i for i, v in enumerate(values) if v == smallest]
    if len(hits) > 1:
        raise TieDetected(f"minimum {smallest} attained at indices {hits}")
    return hits[0]


def exact_convex_check(points: Sequence[RationalPoint], a: int, b: int,
                       c: int) -> bool:
    """Full bounding condition for apex a and rays a->b, a->c."""
    if len({a, b, c}) != 3:
        return False
    if not all(0 <= i < len(points) for i in (a, b, c)):
        return False
    if exact_orientation(points[a], points[b], points[c]) != 1:
        return False
    if exact_orientation(points[a], points[c], points[b]) != -1:
        return False
    for d, point in enumerate(points):
        if d in (a, b, c):
            continue
        if exact_orientation(points[a], points[b], point) != 1:
            return False
        if exact_orientation(points[a], points[c], point) != -1:
            return False
    return True


def separation_from_gap(gap: Fraction) -> int:
    """Smallest k with 2**-k < gap; a separation precision for blurred
    reals whose limits differ by exactly ``gap``."""
    if gap <= 0:
        raise ValueError(f"gap must be positive, got {gap}")
    k = 0
    while Fraction(1, 2 ** k) >= gap:
        k += 1
    return k


class OracleAuditor:
    """Challenges exactly-false claims of the current candidate.

    Knows the true rational limit of every registered real.  While the
    candidate is not the true argmin, the auditor picks the lowest
    index whose value lies strictly below the candidate's and
    challenges that claim at a separation precision; once the true
    argmin is proposed it accepts.
    """

    def __init__(self, registry: RealRegistry, true_values: Sequence[Fraction],
                 separation_precision: Optional[Callable[[int, int], int]] = None):
        values = [Fraction(v) for v in true_values]
        if len(set(values)) != len(values):
            raise TieDetected("true values must be distinct")
        self._registry = registry
        self._values = values
        self._separation = separation_precision or self._scan_separation

    def _scan_separation(self, j: int, m: int) -> int:
        gap = self._values[m] - self._values[j]
        budget = separation_from_gap(gap) + 64
        witness = find_strict_witness(self._registry[j], self._registry[m],
                                      budget)
        if witness is None:
            raise RuntimeError(
                f"reals {j} and {m} do not separate within precision {budget}")
        return witness

    def challenge(self, cand: LeastCandidate) -> Optional[Challenge]:
        m = cand.candidate
        below = self._values[m]
        for j, value in enumerate(self._values):
            if value < below:
                return Challenge(j, self._separation(j, m))
        return None


@dataclass
class ComputationTree:
    """Node of the full decision tree over indices 1..n.

    Internal nodes carry the comparison pair ``(candidate, i)``; the
    left child assumes it, the right child answers strictly and makes
    ``i`` the new candidate.  Leaves carry the final candidate.
    """

    candidate: int
    pair: Optional[Tuple[int, int]]
    left: Optional["ComputationTree"]
    right: Optional["ComputationTree"]

    @property
    def is_leaf(self) -> bool:
        return self.pair is None

    def leaves(self) -> List[int]:
        if self.is_leaf:
            return [self.candidate]
        assert self.left is not None and self.right is not None
        return self.left.leaves() + self.right.leaves()


def enumerate_tree(n: int) -> ComputationTree:
    """The full decision tree for learning the least of ``r_0 .. r_n``."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n > TREE_LIMIT:
        raise ValueError(f"tree enumeration capped at n = {TREE_LIMIT}, got {n}")

    def build(candidate: int, i: int) -> ComputationTree:
        if i > n:
            return ComputationTree(candidate, None, None, None)
        return ComputationTree(candidate, (candidate, i),
                               build(candidate, i + 1), build(i, i + 1))

    return build(0, 1)


@dataclass
class RunReplay:
    leaf_ranks: List[int]
    leaf_candidates: List[int]
    restarts: int
    progress_ok: bool
    unique_ok: bool
    bound_ok: bool

    @property
    def ok(self) -> bool:
        return self.progress_ok and self.unique_ok and self.bound_ok


@dataclass
class ReplayVerdict:
    n: int
    runs: List[RunReplay]

    @property
    def ok(self) -> bool:
        return all(run.ok for run in self.runs)


def _extract_paths(events: Sequence[TraceEvent]) -> List[Tuple[List[dict], int]]:
    paths: List[Tuple[List[dict], int]] = []
    pending: List[dict] = []
    for event in events:
        if event.phase == "decide":
            pending.append(event.payload)
        elif event.phase in ("candidate", "select-A"):
            paths.append((pending, event.payload["candidate"]))
            pending = []
    if pending:
        raise PathMismatch("trace ends with decisions but no candidate")
    return paths


def replay_paths(runs: Sequence[Sequence[TraceEvent]],
                 n: Optional[int] = None) -> ReplayVerdict:
    """Re-walk recorded runs through the enumerated decision tree.

    Each candidate computation in a run maps to one root-to-leaf path.
    Verifies that every path embeds in the tree (pairs and final
    candidate agree), that leaf ranks strictly increase across
    restarts, that no path repeats, and that the number of restarts
    stays below ``2**n``.
    """
    if not runs:
        raise ValueError("no runs to replay")
    first_paths = _extract_paths(runs[0])
    if not first_paths:
        raise PathMismatch("run contains no candidate computations")
    if n is None:
        n = len(first_paths[0][0])
    tree = enumerate_tree(n)
    replays: List[RunReplay] = []
    for events in runs:
        paths = _extract_paths(events)
        restarts = sum(1 for e in events if e.phase == "restart")
        ranks: List[int] = []
        leaf_candidates: List[int] = []
        for decides, reported in paths:
            if len(decides) != n:
                raise PathMismatch(
                    f"path length {len(decides)} does not match n = {n}")
            node = tree
            rank = 0
            for depth, payload in enumerate(decides):
                if node.pair is None:
                    raise PathMismatch("path descends past a leaf")
                if tuple(payload["pair"]) != node.pair:
                    raise PathMismatch(
                        f"decision pair {payload['pair']} does not match "
                        f"tree node {node.pair}")
                strict = payload["decision"] == "strict"
                rank = (rank << 1) | int(strict)
                node = node.right if strict else node.left
            if not node.is_leaf or node.candidate != reported:
                raise PathMismatch(
                    f"leaf candidate {node.candidate} does not match "
                    f"reported candidate {reported}")
            ranks.append(rank)
            leaf_candidates.append(reported)
        progress_ok = all(x < y for x, y in zip(ranks, ranks[1:]))
        unique_ok = len(set(ranks)) == len(ranks)
        bound_ok = restarts <= 2 ** n - 1 and restarts == len(ranks) - 1
        replays.append(RunReplay(ranks, leaf_candidates, restarts,
                                 progress_ok, unique_ok, bound_ok))
    return ReplayVerdict(n, replays)
