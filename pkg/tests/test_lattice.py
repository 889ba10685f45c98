import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import random_formula
from fundlogic.formula import And, Neg, Or, Var
from fundlogic.lattice import (
    Lattice, LatticeError, boolean_algebra, check_distributive, check_weak_pseudocomplementation,
    downset_lattice, lattice_from_json, lattice_to_json, prime_filters, random_distributive, represent,
    representation_model, three_chain, weak_pseudocomplementations,
)
from fundlogic.semantics import evaluate


def diamond():
    return Lattice(("0", "a", "b", "c", "1"),
                   frozenset({("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")}))


def test_order_validation():
    with pytest.raises(LatticeError):
        Lattice(("a", "b"), frozenset({("a", "b"), ("b", "a")}))
    with pytest.raises(LatticeError):
        Lattice(("a", "b"), frozenset())  # no join of a and b
    with pytest.raises(LatticeError):
        Lattice(("a",), frozenset({("a", "z")}))
    with pytest.raises(LatticeError):
        Lattice(("0", "1"), frozenset({("0", "1")}), {"0": "1"})
    L = three_chain()
    assert L.le("0", "1") and L.meet("m", "1") == "m" and L.join("0", "m") == "m"
    assert L.bottom == "0" and L.top == "1"


def test_weak_pseudocomplementation_examples():
    assert check_weak_pseudocomplementation(boolean_algebra(1)) == []
    assert check_weak_pseudocomplementation(three_chain()) == []
    bad = three_chain().with_neg({"0": "1", "m": "m", "1": "0"})
    out = check_weak_pseudocomplementation(bad)
    assert out and out[0] == "m & ~m != 0"


def test_distributivity_examples():
    assert check_distributive(three_chain()) == []
    assert check_distributive(boolean_algebra(2)) == []
    assert check_distributive(diamond())


def test_prime_filter_examples():
    assert prime_filters(boolean_algebra(1)) == [frozenset({"1"})]
    assert set(prime_filters(three_chain())) == {frozenset({"1"}), frozenset({"m", "1"})}
    assert set(prime_filters(boolean_algebra(2))) == {frozenset({"01", "11"}), frozenset({"10", "11"})}
    with pytest.raises(LatticeError):
        prime_filters(diamond())
    with pytest.raises(LatticeError):
        prime_filters(downset_lattice(5, []))


def test_prime_filters_match_join_prime_generators():
    rng = random.Random(2)
    for _ in range(10):
        L = random_distributive(rng)
        gens = {a for a in L.elements if a != L.bottom
                and all(not L.le(a, L.join(x, y)) or L.le(a, x) or L.le(a, y)
                        for x in L.elements for y in L.elements)}
        want = {frozenset(b for b in L.elements if L.le(a, b)) for a in gens}
        assert set(prime_filters(L)) == want


def test_represent_examples():
    rep = represent(boolean_algebra(2))
    assert rep.ok and len(rep.filters) == 2
    assert rep.frame.rel == {(x, x) for x in rep.frame.states}
    assert rep.embedding["10"] == rep.embedding[boolean_algebra(2).neg["01"]]

    rep = represent(three_chain())
    assert rep.ok and len(rep.filters) == 2
    assert len(rep.frame.rel) == 4
    assert rep.embedding["0"] == frozenset()

    rep = represent(boolean_algebra(1))
    assert rep.ok and rep.embedding["1"] == frozenset(rep.frame.states) and rep.embedding["0"] == frozenset()


def test_represent_preconditions():
    with pytest.raises(LatticeError):
        represent(three_chain().with_neg({"0": "1", "m": "m", "1": "0"}))
    with pytest.raises(LatticeError):
        represent(diamond().with_neg({e: e for e in diamond().elements}))


def test_weak_pseudocomplementations_of_small_lattices():
    assert weak_pseudocomplementations(boolean_algebra(1)) == [{"0": "1", "1": "0"}]
    negs = weak_pseudocomplementations(three_chain())
    assert {"0": "1", "m": "0", "1": "0"} in negs
    for n in negs:
        assert check_weak_pseudocomplementation(three_chain().with_neg(n)) == []


def _lattice_value(L, f, interp):
    if isinstance(f, Var):
        return interp[f.name]
    if isinstance(f, Neg):
        return L.neg[_lattice_value(L, f.child, interp)]
    a, b = _lattice_value(L, f.left, interp), _lattice_value(L, f.right, interp)
    return L.meet(a, b) if isinstance(f, And) else L.join(a, b)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_representation_round_trips_with_fine_semantics(seed):
    rng = random.Random(seed)
    L = random_distributive(rng)
    rep = represent(L)
    assert rep.ok
    m = representation_model(rep)
    interp = {v: rng.choice(L.elements) for v in "pqr"}
    val = {v: rep.embedding[a] for v, a in interp.items()}
    from fundlogic.semantics import Model
    model = Model(m.frame, val)
    f = random_formula(rng, 4)
    assert evaluate(model, f, "fine") == rep.embedding[_lattice_value(L, f, interp)]


def test_json_round_trip(tmp_path):
    L = three_chain()
    doc = lattice_to_json(L)
    text = json.dumps(doc)
    L2 = lattice_from_json(json.loads(text))
    assert L2.leq == L.leq and L2.neg == L.neg
    with pytest.raises(LatticeError):
        lattice_from_json({"leq": []})
