"""Line-oriented input documents for the command-line tools.

A document is a sequence of JSON records, one per line.  Real records
come in three kinds::

    {"type": "real", "kind": "rational", "value": "3/2"}
    {"type": "real", "kind": "blurred", "value": "-1/3"}
    {"type": "real", "kind": "table",
     "prefix": [["0/1", "1/1"], ["1/4", "3/4"]], "tail": "1/2"}

Point records pair two real specs with a dense index::

    {"type": "point", "index": 0,
     "x": {"kind": "rational", "value": "0/1"},
     "y": {"kind": "blurred", "value": "2/1"}}

All rationals are exact ``num/den`` strings (or plain integers); float
literals are rejected.  Every constructor has a known rational limit
(the value for rational and blurred reals, the tail for tables), which
the oracle tools rely on.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .geometry import Point
from .least import Challenge
from .oracle import RationalPoint
from .reals import RealNum, RealRegistry


class InputError(ValueError):
    """Malformed input document, script, or result file."""


REAL_KINDS = ("rational", "blurred", "table")


def parse_fraction(value) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise InputError(f"rationals must be exact, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"cannot parse rational {value!r}") from exc
    raise InputError(f"cannot parse rational {value!r}")


def format_fraction(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class RealSpec:
    kind: str
    value: Optional[Fraction] = None
    prefix: Optional[Tuple[Tuple[Fraction, Fraction], ...]] = None
    tail: Optional[Fraction] = None

    @property
    def limit(self) -> Fraction:
        """The exact real number this spec converges to."""
        if self.kind == "table":
            assert self.tail is not None
            return self.tail
        assert self.value is not None
        return self.value

    def build(self, registry: RealRegistry) -> RealNum:
        if self.kind == "rational":
            return registry.from_rational(self.value)
        if self.kind == "blurred":
            return registry.blurred(self.value)
        return registry.from_table(self.prefix or (), self.tail)

    @staticmethod
    def from_obj(obj) -> "RealSpec":
        if isinstance(obj, str) or (isinstance(obj, int)
                                    and not isinstance(obj, bool)):
            # bare "num/den" shorthand for an exact rational
            return RealSpec(kind="rational", value=parse_fraction(obj))
        if not isinstance(obj, dict):
            raise InputError(f"real spec must be an object, got {obj!r}")
        kind = obj.get("kind")
        if kind not in REAL_KINDS:
            raise InputError(f"unknown real kind {kind!r}")
        if kind == "table":
            prefix = obj.get("prefix", [])
            if not isinstance(prefix, list):
                raise InputError("table prefix must be a list of pairs")
            parsed = []
            for entry in prefix:
                if not isinstance(entry, (list, tuple)) or len(entry) != 2:
                    raise InputError(f"bad table interval {entry!r}")
                parsed.append((parse_fraction(entry[0]), parse_fraction(entry[1])))
            if "tail" not in obj:
                raise InputError("table spec needs a tail")
            return RealSpec(kind="table", prefix=tuple(parsed),
                            tail=parse_fraction(obj["tail"]))
        if "value" not in obj:
            raise InputError(f"{kind} spec needs a value")
        return RealSpec(kind=kind, value=parse_fraction(obj["value"]))

    def to_obj(self) -> dict:
        if self.kind == "table":
            return {
                "kind": "table",
                "prefix": [[format_fraction(lo), format_fraction(hi)]
                           for lo, hi in (self.prefix or ())],
                "tail": format_fraction(self.tail),
            }
        return {"kind": self.kind, "value": format_fraction(self.value)}


@dataclass(frozen=True)
class PointSpec:
    index: int
    x: RealSpec
    y: RealSpec


@dataclass
class InputDocument:
    reals: List[RealSpec]
    points: List[PointSpec]


def load_document(path) -> InputDocument:
    reals: List[RealSpec] = []
    points: List[PointSpec] = []
    with open(path, "r", encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, 1):
            line = line.strip()
            if not line:
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise InputError(f"{path}:{lineno}: invalid JSON: {exc}") from exc
            if not isinstance(record, dict):
                raise InputError(f"{path}:{lineno}: record must be an object")
            kind = record.get("type")
            try:
                if kind == "real":
                    reals.append(RealSpec.from_obj(record))
                elif kind == "point":
                    index = record.get("index")
                    if not isinstance(index, int) or isinstance(index, bool):
                        raise InputError(f"point index must be an integer")
                    points.append(PointSpec(
                        index=index,
                        x=RealSpec.from_obj(record.get("x")),
                        y=RealSpec.from_obj(record.get("y")),
                    ))
                else:
                    raise InputError(f"unknown record type {kind!r}")
            except InputError as exc:
                raise InputError(f"{path}:{lineno}: {exc}") from exc
    points.sort(key=lambda spec: spec.index)
    for position, spec in enumerate(points):
        if spec.index != position:
            raise InputError(
                f"{path}: point indices must be dense from 0, "
                f"missing or duplicate index near {spec.index}")
    return InputDocument(reals=reals, points=points)


def build_reals(document: InputDocument) -> Tuple[RealRegistry, List[RealNum]]:
    """Register the document's reals at indices 0..n, in order."""
    registry = RealRegistry()
    reals = [spec.build(registry) for spec in document.reals]
    return registry, reals


def build_points(document: InputDocument) -> Tuple[RealRegistry, List[Point]]:
    """Register the document's points.

    All y coordinates are registered first, in point order, so the
    y coordinate of point i sits at real index i as the least-element
    machinery expects; x coordinates follow.
    """
    registry = RealRegistry()
    ys = [spec.y.build(registry) for spec in document.points]
    xs = [spec.x.build(registry) for spec in document.points]
    return registry, [
        Point(index=spec.index, x=xs[i], y=ys[i])
        for i, spec in enumerate(document.points)
    ]


def real_limits(document: InputDocument) -> List[Fraction]:
    return [spec.limit for spec in document.reals]


def rational_points(document: InputDocument) -> List[RationalPoint]:
    return [RationalPoint(spec.x.limit, spec.y.limit)
            for spec in document.points]


def load_script(path) -> List[Challenge]:
    """A challenge script: one ``{"j":, "precision":, "force"?:}`` per line."""
    challenges: List[Challenge] = []
    with open(path, "r", encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, 1):
            line = line.strip()
            if not line:
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise InputError(f"{path}:{lineno}: invalid JSON: {exc}") from exc
            if not isinstance(record, dict):
                raise InputError(f"{path}:{lineno}: challenge must be an object")
            j = record.get("j")
            precision = record.get("precision")
            force = record.get("force", False)
            if not isinstance(j, int) or not isinstance(precision, int) \
                    or isinstance(j, bool) or isinstance(precision, bool):
                raise InputError(
                    f"{path}:{lineno}: challenge needs integer j and precision")
            if not isinstance(force, bool):
                raise InputError(f"{path}:{lineno}: force must be a boolean")
            challenges.append(Challenge(j=j, precision=precision, force=force))
    return challenges


def dump_document(document: InputDocument, path) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        for spec in document.reals:
            record = {"type": "real"}
            record.update(spec.to_obj())
            handle.write(json.dumps(record, sort_keys=True))
            handle.write("\n")
        for point in document.points:
            record = {
                "type": "point",
                "index": point.index,
                "x": point.x.to_obj(),
                "y": point.y.to_obj(),
            }
            handle.write(json.dumps(record, sort_keys=True))
            handle.write("\n")
