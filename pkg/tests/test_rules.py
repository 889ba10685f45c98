import pytest

from fundlogic.formula import Sequent, parse, parse_sequent
from fundlogic.frames import enumerate_frames
from fundlogic.rules import (
    BASE_RULES, LOGICS, MODEL_CLASS, Step, admitted, check_logic, format_trace, is_instance, replay,
    rule_holds_on_frame, soundness_sweep, trace_to_json,
)


def S(text):
    return parse_sequent(text)


@pytest.mark.parametrize("rule, concl, prem", [
    ("refl", "p |- p", []),
    ("and_elim_l", "p & q |- p", []),
    ("and_elim_r", "p & q |- q", []),
    ("or_intro_l", "p |- p | q", []),
    ("or_intro_r", "q |- p | q", []),
    ("dni", "p |- ~~p", []),
    ("explosion", "p & ~p |- q", []),
    ("trans", "p |- r", ["p |- q", "q |- r"]),
    ("and_intro", "p |- q & r", ["p |- q", "p |- r"]),
    ("or_elim", "p | q |- r", ["p |- r", "q |- r"]),
    ("contrapose", "~q |- ~p", ["p |- q"]),
    ("dne", "~~p |- p", []),
    ("cases_side", "a & (p | q) |- r", ["a & p |- r", "a & q |- r"]),
    ("pseudocomp", "q |- ~p", ["p & q |- s & ~s"]),
])
def test_rule_instances(rule, concl, prem):
    assert is_instance(rule, S(concl), [S(x) for x in prem])


@pytest.mark.parametrize("rule, concl, prem", [
    ("refl", "p |- q", []),
    ("explosion", "p & ~q |- r", []),
    ("trans", "p |- r", ["p |- q", "s |- r"]),
    ("contrapose", "~p |- ~q", ["p |- q"]),
    ("cases_side", "a & (p | q) |- q", ["a & p |- r", "a & q |- r"]),
    ("pseudocomp", "q |- ~p", ["p & q |- s"]),
    ("and_intro", "p |- q & r", ["p |- q"]),
])
def test_rule_non_instances(rule, concl, prem):
    assert not is_instance(rule, S(concl), [S(x) for x in prem])


def test_admitted_sets():
    assert admitted("fundamental") == frozenset(BASE_RULES)
    assert "dne" in admitted("ortho") and "cases_side" not in admitted("ortho")
    assert "cases_side" in admitted("compatibility") and "dne" not in admitted("compatibility")
    assert {"cases_side", "pseudocomp"} <= admitted("intuitionistic")
    with pytest.raises(ValueError):
        check_logic("modal")


def test_replay_and_formatting():
    steps = [Step(S("p |- ~~p"), "dni"), Step(S("~~~p |- ~p"), "contrapose", (0,))]
    assert replay(steps, "fundamental") == []
    assert "contrapose from 0" in format_trace(steps)
    assert trace_to_json(steps)[1] == {"lhs": "~~~p", "rhs": "~p", "rule": "contrapose", "premises": [0]}
    assert replay([Step(S("~~p |- p"), "dne")], "fundamental")
    assert replay([Step(S("p |- q"), "trans", (0, 1))], "fundamental")


@pytest.mark.parametrize("logic", LOGICS)
def test_soundness_sweep(logic):
    res = soundness_sweep(logic, max_size=4)
    assert res.ok, res.violations[:1]
    assert res.frames > 0 and res.instances > 0


@pytest.mark.parametrize("rule, cls, sem", [
    ("dne", "pseudosymmetric", "fixpoint"),
    ("cases_side", "symmetric", "fixpoint"),
    ("pseudocomp", "symmetric", "fixpoint"),
    ("dne", "symmetric", "fine"),
])
def test_sweep_detects_unsound_extensions(rule, cls, sem):
    # each extension is unsound outside its class, so the checker is not vacuous
    assert any(rule_holds_on_frame(rule, f, sem)[1] is not None
               for n in range(1, 5) for f in enumerate_frames(n, cls))


def test_model_classes_cover_all_logics():
    assert set(MODEL_CLASS) == set(LOGICS)
