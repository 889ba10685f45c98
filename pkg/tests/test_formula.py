import pytest
from hypothesis import given, settings

from conftest import formulas
from fundlogic.formula import (
    And, Neg, Or, ParseError, Sequent, SoritesParams, Var, bottom, conjuncts, depth, godel_gentzen,
    has_or, is_contradiction_shape, parse, parse_sequent, size, sorites_formula, subformulas, to_text,
    variables,
)

p, q, r = Var("p"), Var("q"), Var("r")


@pytest.mark.parametrize("text, tree", [
    ("p0 & ~p1", And(Var("p0"), Neg(Var("p1")))),
    ("p | q & r", Or(p, And(q, r))),
    ("~~p", Neg(Neg(p))),
    ("!p", Neg(p)),
    ("p & q & r", And(And(p, q), r)),
    ("(p | q) & r", And(Or(p, q), r)),
])
def test_parse_examples(text, tree):
    assert parse(text) == tree


@pytest.mark.parametrize("tree, text", [
    (And(p, Neg(q)), "p & ~q"),
    (Or(p, And(q, r)), "p | q & r"),
    (And(Or(p, q), r), "(p | q) & r"),
    (And(p, And(q, r)), "p & (q & r)"),
    (Neg(And(p, q)), "~(p & q)"),
])
def test_print_examples(tree, text):
    assert to_text(tree) == text


@pytest.mark.parametrize("text, offset", [("p &", 3), ("p q", 2), ("(p", 2), ("", 0), ("p $ q", 2), ("p)", 1)])
def test_parse_errors_carry_offset(text, offset):
    with pytest.raises(ParseError) as e:
        parse(text)
    assert e.value.offset == offset


def test_sequent_parsing():
    s = parse_sequent("p & q |- q & p")
    assert s == Sequent(And(p, q), And(q, p))
    assert str(s) == "p & q |- q & p"
    with pytest.raises(ParseError) as e:
        parse_sequent("p |- q &")
    assert e.value.offset == 8
    with pytest.raises(ParseError):
        parse_sequent("p & q")


@settings(max_examples=300)
@given(formulas(max_depth=8))
def test_round_trip(f):
    assert parse(to_text(f)) == f


def test_subformulas():
    assert subformulas(p) == {p}
    assert subformulas(Neg(p)) == {p, Neg(p)}
    assert subformulas(And(p, Or(p, q))) == {p, q, Or(p, q), And(p, Or(p, q))}


def test_structure_helpers():
    f = parse("~(p & q) | r")
    assert variables(f) == {"p", "q", "r"}
    assert size(f) == 6
    assert depth(f) == 3
    assert has_or(f) and not has_or(parse("~p & q"))


def test_sorites_formula_examples():
    f41 = sorites_formula(SoritesParams(4, 1))
    assert f41 == parse("p0 & ~p3 & ~(p0 & ~p1) & ~(p1 & ~p2) & ~(p2 & ~p3)")
    assert sorites_formula(SoritesParams(3, 1)) == parse("p0 & ~p2 & ~(p0 & ~p1) & ~(p1 & ~p2)")
    parts = conjuncts(sorites_formula(SoritesParams(5, 2)))
    assert parse("~(p0 & ~p1)") in parts and parse("~(p0 & ~p2)") in parts


@pytest.mark.parametrize("n, delta", [(n, d) for n in range(3, 9) for d in range(1, min(3, n - 2) + 1)])
def test_sorites_conjunct_count(n, delta):
    expected = 2 + sum(min(delta, n - 1 - k) for k in range(n - 1))
    assert len(conjuncts(sorites_formula(SoritesParams(n, delta)))) == expected


@pytest.mark.parametrize("n, delta", [(2, 1), (4, 0), (4, 3), (3, 2)])
def test_sorites_params_reject(n, delta):
    with pytest.raises(ValueError):
        SoritesParams(n, delta)


def test_gg_examples():
    assert godel_gentzen(p) == Neg(Neg(p))
    assert godel_gentzen(Neg(p)) == Neg(Neg(Neg(p)))
    assert to_text(godel_gentzen(Or(p, q))) == "~(~~~p & ~~~q)"


def _gg_oracle(f):
    # written independently of the library: textual expansion
    if isinstance(f, Var):
        return f"~~{f.name}"
    if isinstance(f, Neg):
        return f"~({_gg_oracle(f.child)})"
    if isinstance(f, And):
        return f"({_gg_oracle(f.left)}) & ({_gg_oracle(f.right)})"
    return f"~(~({_gg_oracle(f.left)}) & ~({_gg_oracle(f.right)}))"


@given(formulas(max_depth=5))
def test_gg_matches_oracle_and_has_no_or(f):
    g = godel_gentzen(f)
    assert not has_or(g)
    assert g == parse(_gg_oracle(f))


def test_bottom_shape():
    b = bottom()
    assert is_contradiction_shape(b)
    assert not is_contradiction_shape(parse("p & ~q"))
