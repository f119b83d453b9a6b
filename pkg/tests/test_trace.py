import json

from realearn import RealRegistry, TraceLog, empty_state, extend
from realearn.trace import TraceEvent, read_trace, state_snapshot, write_trace


def test_emit_assigns_sequence_numbers():
    log = TraceLog()
    log.emit("decide", pair=[0, 1], decision="assume")
    log.emit("candidate", candidate=0)
    assert [e.seq for e in log.events] == [0, 1]
    assert log.events[0].phase == "decide"


def test_event_json_roundtrip():
    event = TraceEvent(7, "extend", {"pair": [0, 3], "witness": 33})
    blob = event.to_json()
    assert TraceEvent.from_json(blob) == event
    # serialization is canonical: sorted keys, no whitespace
    assert blob == json.dumps(json.loads(blob), sort_keys=True,
                              separators=(",", ":"))


def test_write_then_read_trace(tmp_path):
    log = TraceLog()
    log.emit("candidate", candidate=0, state=[])
    log.emit("accept", candidate=0, restarts=0, state=[])
    path = tmp_path / "run.trace"
    write_trace(path, log.events)
    assert read_trace(path) == log.events
    # one JSON object per line, byte-stable across writes
    first = path.read_bytes()
    write_trace(path, log.events)
    assert path.read_bytes() == first
    assert len(first.splitlines()) == 2


def test_state_snapshot_is_sorted():
    reg = RealRegistry()
    for q in (0, -1, -2, -3):
        reg.blurred(q)
    state = extend(empty_state(reg), 0, 3, 2)
    state = extend(state, 0, 1, 1)
    snap = state_snapshot(state)
    assert snap == [{"i": 0, "j": 1, "witness": 1},
                    {"i": 0, "j": 3, "witness": 2}]
