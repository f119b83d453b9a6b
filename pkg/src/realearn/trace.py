"""Structured trace events for interactive runs.

Every learning or geometry run can record what it did as a sequence of
:class:`TraceEvent` records.  Serialized traces are line oriented: one
JSON object per line, keys sorted, integers and ``num/den`` fraction
strings only.  Two runs of the same input therefore produce byte
identical trace files.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Iterable, List, Sequence


@dataclass(frozen=True)
class TraceEvent:
    seq: int
    phase: str
    payload: dict

    def to_json(self) -> str:
        record = {"seq": self.seq, "phase": self.phase}
        record.update(self.payload)
        return json.dumps(record, sort_keys=True, separators=(",", ":"))

    @staticmethod
    def from_json(line: str) -> "TraceEvent":
        record = json.loads(line)
        seq = record.pop("seq")
        phase = record.pop("phase")
        return TraceEvent(seq=seq, phase=phase, payload=record)


class TraceLog:
    """Append-only event recorder with an auto-incrementing sequence."""

    def __init__(self) -> None:
        self.events: List[TraceEvent] = []

    def emit(self, phase: str, **payload: Any) -> TraceEvent:
        event = TraceEvent(seq=len(self.events), phase=phase, payload=payload)
        self.events.append(event)
        return event


def state_snapshot(state) -> list[dict]:
    """Serializable view of a knowledge state, sorted by pair."""
    return [
        {"i": i, "j": j, "witness": w}
        for (i, j), w in sorted(state.entries.items())
    ]


def write_trace(path, events: Sequence[TraceEvent]) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        for event in events:
            handle.write(event.to_json())
            handle.write("\n")


def read_trace(path) -> List[TraceEvent]:
    events: List[TraceEvent] = []
    with open(path, "r", encoding="utf-8") as handle:
        for line in handle:
            line = line.strip()
            if line:
                events.append(TraceEvent.from_json(line))
    return events
