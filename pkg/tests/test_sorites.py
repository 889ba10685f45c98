import itertools

import pytest

from fundlogic.formula import SoritesParams, conj, parse, sorites_formula
from fundlogic.frames import class_check, pre_refines
from fundlogic.semantics import evaluate, validate_fixpoint_model
from fundlogic.sorites import (
    INF, Pair, Rejector, build_pseudosymmetric, build_symmetric, compatible, export_dot,
    pair_states, to_dot, verify_facts,
)

GRID = [SoritesParams(n, d) for n in range(3, 9) for d in range(1, min(3, n - 2) + 1)]
P41 = SoritesParams(4, 1)


def test_state_counts_and_pairs():
    assert len(build_symmetric(P41).states) == 12
    m = build_pseudosymmetric(P41)
    assert len(m.states) == 16
    assert [s for s in m.states if isinstance(s, Rejector)] == [Rejector(k) for k in range(4)]
    assert Pair(-INF, INF) in pair_states(P41)
    assert all(s.i + 1 < s.j for s in pair_states(P41))
    assert str(Pair(-INF, 3)) == "(-inf,3)" and str(Rejector(2)) == "r2"


def test_compatibility_examples():
    m = build_symmetric(P41)
    assert m.frame.related(Pair(1, 3), Pair(0, 2))
    assert not m.frame.related(Pair(0, 2), Pair(2, INF))
    assert not compatible(Pair(0, 2), Pair(2, INF))


def test_rejector_examples():
    f = build_pseudosymmetric(P41).frame
    assert f.related(Rejector(1), Pair(0, 3))
    assert f.related(Pair(0, 3), Rejector(1))
    assert not f.related(Rejector(0), Pair(0, 3))


@pytest.mark.parametrize("params", GRID, ids=str)
def test_models_are_fixpoint_models_of_their_class(params):
    s = build_symmetric(params)
    t = build_pseudosymmetric(params)
    assert validate_fixpoint_model(s) == [] and validate_fixpoint_model(t) == []
    cs, ct = class_check(s.frame), class_check(t.frame)
    assert cs.reflexive and cs.symmetric
    assert ct.reflexive and ct.pseudosymmetric and not ct.symmetric


def test_verify_facts_symmetric_41():
    rep = verify_facts(P41)
    assert rep.passed
    assert set(rep.by_fact()) == {"Atom", "NegAtom", "NoSharpCutoffs", "JointSat", "Consistency"}


def _lem_oracle(params):
    # intersection over k of {k <= i or j <= k}, computed on the pair set only
    out = set(pair_states(params))
    for k in range(params.n):
        out &= {s for s in pair_states(params) if k <= s.i or s.j <= k}
    return out


@pytest.mark.parametrize("params", GRID, ids=str)
def test_lem_conjunction_matches_oracle(params):
    m = build_pseudosymmetric(params)
    lem = conj([parse(f"p{k} | ~p{k}") for k in range(params.n)])
    got = evaluate(m, lem)
    assert got == _lem_oracle(params) == {Pair(params.n - 1, INF), Pair(-INF, 0)}


@pytest.mark.parametrize("params", GRID, ids=str)
def test_verify_facts_with_corrected_left_end(params):
    assert verify_facts(params, "symmetric").passed
    rep = verify_facts(params, "pseudosymmetric", lem_left_end="emext")
    assert rep.passed, [r.describe() for r in rep.results if not r.passed]


def test_stated_left_end_reports_failure_with_witness():
    rep = verify_facts(P41, "pseudosymmetric")
    bad = [r for r in rep.results if not r.passed]
    assert {r.name for r in bad} == {"DenyLEMs"}
    assert Pair(-INF, 0) in bad[0].actual and Pair(-INF, 3) in bad[0].expected
    assert not rep.to_json()["passed"]


def test_negated_lem_is_finite_pairs():
    m = build_pseudosymmetric(P41)
    lem = conj([parse(f"p{k} | ~p{k}") for k in range(4)])
    assert evaluate(m, ~lem) == {Pair(0, 2), Pair(0, 3), Pair(1, 3)}


def test_no_sharp_cutoff_52():
    m = build_symmetric(SoritesParams(5, 2))
    assert evaluate(m, parse("p0 & ~p2")) == frozenset()


def test_sorites_formula_satisfied_region():
    m = build_symmetric(P41)
    assert evaluate(m, sorites_formula(P41)) == {Pair(0, 2), Pair(0, 3), Pair(1, 3)}


def test_disjunctive_syllogism_fails_for_forcing_but_holds_per_state():
    m = build_pseudosymmetric(P41)
    assert Pair(0, 3) not in evaluate(m, parse("~p0 | p1"))
    assert evaluate(m, parse("~(p0 & ~p1)")) == frozenset(m.states)
    for params in GRID:
        t = build_pseudosymmetric(params)
        for k in range(params.n - 1):
            premise = evaluate(t, parse(f"p{k} & (~p{k} | p{k + 1})"))
            assert premise <= evaluate(t, parse(f"p{k + 1}"))


def test_compatible_but_not_compossible():
    m = build_symmetric(P41)
    a, b = Pair(1, 3), Pair(0, 2)
    assert a in evaluate(m, parse("p1")) and b in evaluate(m, parse("~p2"))
    assert m.frame.related(a, b)
    assert not any(pre_refines(m.frame, z, a) and pre_refines(m.frame, z, b) for z in m.states)


def test_dot_export(tmp_path):
    s = to_dot(build_symmetric(P41))
    assert s.count("[label=") == 12
    edges = [ln for ln in s.splitlines() if "->" in ln]
    assert edges and all("dir=none" in ln for ln in edges)

    t = build_pseudosymmetric(P41)
    dot = to_dot(t)
    ids = {str(x): f"n{i}" for i, x in enumerate(t.states)}
    assert f"  {ids['(0,3)']} -> {ids['r1']};" in dot.splitlines()
    # r0 is not open to (0,3), so only the arrow from r0 is drawn
    assert f"  {ids['r0']} -> {ids['(0,3)']};" in dot.splitlines()
    assert f"  {ids['(0,3)']} -> {ids['r0']};" not in dot.splitlines()

    from fundlogic.frames import identity_frame
    from fundlogic.semantics import Model
    single = to_dot(Model(identity_frame(("x",))))
    assert single.count("[label=") == 1 and "->" not in single

    path = tmp_path / "s.dot"
    export_dot(t, path, "fig")
    assert path.read_text().startswith("digraph fig {")


def test_fact_report_json_shape():
    doc = verify_facts(P41).to_json()
    assert doc["n"] == 4 and doc["delta"] == 1 and doc["passed"] is True
    assert doc["failures"] == []
