from fractions import Fraction
from random import Random

import pytest

from realearn import (
    Assumed,
    Challenge,
    NullAuditor,
    RealRegistry,
    Refl,
    RestartBudgetExceeded,
    ScriptedAuditor,
    Step,
    TraceLog,
    empty_state,
    evidence_graph,
    extend,
    is_sound,
    learn_least,
    least_candidate,
)
from realearn.oracle import OracleAuditor, exact_min_index, replay_paths

from support import distinct_fractions

WORKED_VALUES = (0, Fraction(-5, 2), -1, -2, -3, 1)
WORKED_SCRIPT = [
    Challenge(3, 33),
    Challenge(2, 25, force=True),
    Challenge(3, 12),
    Challenge(1, 7),
    Challenge(4, 9),
]


def worked_registry() -> RealRegistry:
    reg = RealRegistry()
    for q in WORKED_VALUES:
        reg.blurred(q)
    return reg


def candidate_sequence(events):
    return [e.payload["candidate"] for e in events if e.phase == "candidate"]


def test_empty_state_pass_guesses_zero():
    state = empty_state(worked_registry())
    cand = least_candidate(state, 5)
    assert cand.candidate == 0
    assert cand.evidences[0] == Refl(0)
    assert all(cand.evidences[j] == Assumed(0, j) for j in range(1, 6))


def test_pass_switches_candidate_on_strict_answer():
    state = extend(empty_state(worked_registry()), 0, 3, 33)
    cand = least_candidate(state, 5)
    assert cand.candidate == 3
    # pre-switch evidence got chained through the strict step
    assert cand.evidences[0] == Step(33, Refl(0), 3)
    assert cand.evidences[1] == Step(33, Assumed(0, 1), 3)
    assert cand.evidences[2] == Step(33, Assumed(0, 2), 3)
    assert cand.evidences[3] == Refl(3)
    assert cand.evidences[4] == Assumed(3, 4)
    assert cand.evidences[5] == Assumed(3, 5)


def test_evidence_graph_after_one_extension():
    state = extend(empty_state(worked_registry()), 0, 3, 33)
    solid, dotted = evidence_graph(least_candidate(state, 5))
    assert solid == {(3, 0, 33)}
    assert dotted == {(3, 4), (3, 5), (0, 1), (0, 2)}


def test_null_auditor_accepts_first_guess():
    outcome = learn_least(5, NullAuditor(), empty_state(worked_registry()), 32)
    assert outcome.candidate.candidate == 0
    assert outcome.restarts == 0
    assert outcome.state.entries == {}


def test_worked_example_run():
    trace = TraceLog()
    outcome = learn_least(5, ScriptedAuditor(WORKED_SCRIPT),
                          empty_state(worked_registry()), 32, trace)
    assert candidate_sequence(outcome.trace) == [0, 3, 2, 3, 1, 4]
    assert outcome.candidate.candidate == 4
    assert outcome.restarts == 5
    assert outcome.state.entries == {
        (0, 1): 33, (0, 2): 33, (0, 3): 33, (1, 4): 9, (2, 3): 12,
    }
    assert is_sound(outcome.state)


def test_worked_example_state_grows_by_one_per_restart():
    trace = TraceLog()
    learn_least(5, ScriptedAuditor(WORKED_SCRIPT),
                empty_state(worked_registry()), 32, trace)
    sizes = [len(e.payload["state"]) for e in trace.events
             if e.phase == "extend"]
    assert sizes == [1, 2, 3, 4, 5]


def test_worked_example_replay_ranks():
    outcome = learn_least(5, ScriptedAuditor(WORKED_SCRIPT),
                          empty_state(worked_registry()), 32)
    verdict = replay_paths([outcome.trace])
    assert verdict.n == 5
    run = verdict.runs[0]
    assert run.leaf_ranks == [0, 4, 8, 12, 16, 18]
    assert run.leaf_candidates == [0, 3, 2, 3, 1, 4]
    assert run.ok


def test_forced_challenge_still_extends_soundly():
    # the forced row reports a refutation its local check cannot see;
    # the extension it produces must still verify against the reals
    trace = TraceLog()
    outcome = learn_least(5, ScriptedAuditor(WORKED_SCRIPT),
                          empty_state(worked_registry()), 32, trace)
    forced = [e for e in trace.events if e.phase == "challenge"
              and e.payload["forced"]]
    assert len(forced) == 1 and forced[0].payload["j"] == 2
    assert is_sound(outcome.state)


def test_restart_budget_enforced():
    with pytest.raises(RestartBudgetExceeded) as exc:
        learn_least(5, ScriptedAuditor(WORKED_SCRIPT),
                    empty_state(worked_registry()), 2)
    assert exc.value.restarts == 3
    assert exc.value.budget == 2


def test_script_exhaustion_accepts_current_candidate():
    script = [Challenge(3, 33)]
    outcome = learn_least(5, ScriptedAuditor(script),
                          empty_state(worked_registry()), 32)
    assert outcome.candidate.candidate == 3
    assert outcome.restarts == 1


def test_oracle_auditor_reaches_true_minimum():
    reg = worked_registry()
    auditor = OracleAuditor(reg, WORKED_VALUES)
    outcome = learn_least(5, auditor, empty_state(reg), 31)
    assert outcome.candidate.candidate == 4
    assert outcome.restarts == 2
    assert outcome.state.entries == {(0, 1): 0, (1, 4): 2}


def test_oracle_runs_on_random_values():
    rng = Random(42)
    for _ in range(25):
        n = rng.randint(0, 9)
        values = distinct_fractions(rng, n + 1)
        reg = RealRegistry()
        for q in values:
            reg.blurred(q)
        outcome = learn_least(n, OracleAuditor(reg, values),
                              empty_state(reg), 2 ** (n + 1))
        assert outcome.candidate.candidate == exact_min_index(values)
        assert outcome.restarts <= 2 ** n - 1
        assert is_sound(outcome.state)
        assert replay_paths([outcome.trace], n).ok
