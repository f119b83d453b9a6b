"""Plane geometry over registered reals.

Points carry exact-real coordinates.  Sidedness relative to a directed
line is decided through the orientation quantity

    orient(P, Q, R) = (x_Q - x_P) * (y_R - y_P) - (x_R - x_P) * (y_Q - y_P)

built with registered real arithmetic: R lies to the left of the line
through P and Q when the orientation is strictly positive, to the
right when strictly negative.  Because strict order of reals is only
semi-decidable, :func:`decide_side` dovetails the two possibilities
over increasing precision and reports the side together with the
precision that witnessed it; exhausting the budget (as happens for
collinear triples) raises :class:`DegenerateInput`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple, Union

from .reals import RealNum, find_strict_witness, op_at


@dataclass(frozen=True)
class Point:
    """A plane point with registered real coordinates."""

    index: int
    x: RealNum
    y: RealNum


@dataclass(frozen=True)
class Left:
    witness: int


@dataclass(frozen=True)
class Right:
    witness: int


SideDecision = Union[Left, Right]


class DegenerateInput(RuntimeError):
    """No side witness within budget: input is (near) degenerate."""


class NoWitnessFound(DegenerateInput):
    """A dovetailed witness search exhausted its precision budget."""


def orientation_real(p: Point, q: Point, r: Point) -> RealNum:
    """Register the orientation of r relative to the line p -> q."""
    reg = p.x.registry
    dx_q = reg.sub(q.x, p.x)
    dy_r = reg.sub(r.y, p.y)
    dx_r = reg.sub(r.x, p.x)
    dy_q = reg.sub(q.y, p.y)
    return reg.sub(reg.mul(dx_q, dy_r), reg.mul(dx_r, dy_q))


def decide_side(p: Point, q: Point, r: Point, k_max: int,
                orientation: Optional[RealNum] = None) -> SideDecision:
    """Which side of the directed line p -> q does r lie on?

    Tests Left before Right at each precision k = 0..k_max, so the
    returned witness is the least precision at which either strict
    comparison of the orientation against zero succeeds.
    """
    orient = orientation if orientation is not None else orientation_real(p, q, r)
    zero = orient.registry.zero()
    for k in range(k_max + 1):
        if op_at(zero, orient, k):
            return Left(k)
        if op_at(orient, zero, k):
            return Right(k)
    raise DegenerateInput(
        f"no side witness for points ({p.index}, {q.index}, {r.index}) "
        f"within precision {k_max}"
    )


def strictly_below_witness(a: Point, b: Point, k_max: int) -> Optional[int]:
    """A precision witnessing y_b strictly below y_a, if one is found."""
    return find_strict_witness(b.y, a.y, k_max)


def three_points(a: Point, q0: Point, q1: Point, q2: Point,
                 k_max: int) -> Tuple[int, int]:
    """Find some q_i strictly below a, given a left-turning cycle.

    Precondition: each q_{i+1} (cyclically) lies left of the line from
    a through q_i, which places a strictly inside the triangle
    q0 q1 q2, so at least one vertex is strictly below a.  The search
    dovetails precision (outer) against the three candidates (inner)
    and returns ``(i, witness)`` for the first hit.
    """
    qs = (q0, q1, q2)
    for k in range(k_max + 1):
        for i, q in enumerate(qs):
            if op_at(q.y, a.y, k):
                return (i, k)
    raise NoWitnessFound(
        f"no point of ({q0.index}, {q1.index}, {q2.index}) observed below "
        f"{a.index} within precision {k_max}"
    )
