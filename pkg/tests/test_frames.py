import itertools

import pytest
from hypothesis import given, settings, strategies as st

from conftest import frames
from fundlogic.formula import SoritesParams
from fundlogic.frames import (
    BoundExceeded, Frame, class_check, closure, count_frames, enumerate_frames, fixpoints,
    identity_frame, pre_refines,
)
from fundlogic.semantics import accepts_rejects, Model
from fundlogic.formula import Var
from fundlogic.sorites import Pair, Rejector, build_pseudosymmetric, build_symmetric

S41 = build_symmetric(SoritesParams(4, 1))
T41 = build_pseudosymmetric(SoritesParams(4, 1))


def subsets(states):
    return [frozenset(c) for k in range(len(states) + 1) for c in itertools.combinations(states, k)]


def test_frame_validation():
    with pytest.raises(ValueError):
        Frame((), frozenset())
    with pytest.raises(ValueError):
        Frame(("a", "a"), frozenset())
    with pytest.raises(ValueError):
        Frame(("a",), {("a", "b")})


def test_closure_examples():
    point = identity_frame(("x",))
    assert closure(point, {"x"}) == {"x"}
    assert closure(point, set()) == frozenset()
    assert closure(S41.frame, S41.valuation["p0"]) == S41.valuation["p0"]


def test_fixpoint_examples():
    assert set(fixpoints(identity_frame(("x",)))) == {frozenset(), frozenset({"x"})}
    assert set(fixpoints(identity_frame(("a", "b")))) == set(subsets(("a", "b")))


@settings(max_examples=200)
@given(frames(max_size=5), st.data())
def test_closure_operator_laws(frame, data):
    a = frozenset(data.draw(st.sets(st.sampled_from(frame.states))))
    b = a | frozenset(data.draw(st.sets(st.sampled_from(frame.states))))
    ca = closure(frame, a)
    assert a <= ca
    assert closure(frame, ca) == ca
    assert ca <= closure(frame, b)


@settings(max_examples=100)
@given(frames(max_size=4))
def test_fixpoints_contain_top_and_are_closed_under_intersection(frame):
    fps = set(fixpoints(frame))
    assert frozenset(frame.states) in fps
    for a, b in itertools.combinations(fps, 2):
        assert a & b in fps


def test_openness_exhaustive():
    # x ◁ y iff there is no proposition that y accepts and x rejects
    p = Var("p")
    for size in range(1, 5):
        for frame in enumerate_frames(size, "any"):
            for a in fixpoints(frame):
                m = Model(frame, {"p": a})
                for x in frame.states:
                    ar_x = accepts_rejects(m, p, x)
                    for y in frame.states:
                        if frame.related(x, y):
                            assert not (y in a and ar_x.rejects)
            for x in frame.states:
                for y in frame.states:
                    if not frame.related(x, y):
                        assert any(y in a and not (frame.succs[frame.index[x]] & frame.mask(a))
                                   for a in fixpoints(frame))


def test_pre_refines_examples():
    assert pre_refines(T41.frame, Pair(0, 3), Rejector(1))
    chain = Frame(("a", "b"), {("a", "a"), ("b", "b"), ("b", "a")})
    assert not pre_refines(chain, "a", "b")
    for x in chain.states:
        assert pre_refines(chain, x, x)
    with pytest.raises(ValueError):
        pre_refines(chain, "a", "zz")


def test_class_check_examples():
    s = class_check(S41.frame)
    assert s.reflexive and s.symmetric
    t = class_check(T41.frame)
    assert t.reflexive and t.pseudosymmetric and not t.symmetric
    one = class_check(identity_frame((0,)))
    assert all(vars(one).values())


@pytest.mark.parametrize("size", [1, 2, 3, 4])
def test_identity_is_strongest(size):
    f = class_check(identity_frame(range(size)))
    assert f.symmetric and f.transitive and f.pseudosymmetric and f.compossible and f.identity


def test_symmetric_implies_pseudosymmetric():
    for size in range(1, 5):
        for frame in enumerate_frames(size, "symmetric"):
            assert class_check(frame).pseudosymmetric


@pytest.mark.parametrize("cls, counts", [
    ("symmetric", [1, 2, 4, 11]),
    ("transitive", [1, 3, 9, 33]),
    ("pseudosymmetric", [1, 3, 12, 91]),
    ("identity", [1, 1, 1, 1]),
    ("reflexive", [1, 3, 16, 218]),
])
def test_enumeration_counts(cls, counts):
    assert [count_frames(n, cls) for n in range(1, 5)] == counts


def test_enumeration_members_have_class():
    for frame in enumerate_frames(4, "compossible"):
        f = class_check(frame)
        assert f.reflexive and f.symmetric and f.compossible


def test_enumeration_up_to_isomorphism_is_complete():
    # every labelled reflexive+symmetric frame on 3 states is isomorphic to an enumerated one
    reps = list(enumerate_frames(3, "symmetric"))

    def canon(rel):
        return min(tuple(sorted((perm[x], perm[y]) for x, y in rel)) for perm in itertools.permutations(range(3)))

    rep_forms = {canon(f.rel) for f in reps}
    assert len(rep_forms) == len(reps)
    pairs = [(0, 1), (0, 2), (1, 2)]
    for bits in itertools.product((0, 1), repeat=3):
        rel = {(i, i) for i in range(3)} | {pr for pr, b in zip(pairs, bits) if b} | {(y, x) for (x, y), b in zip(pairs, bits) if b}
        assert canon(rel) in rep_forms


def test_enumeration_bound():
    with pytest.raises(BoundExceeded):
        list(enumerate_frames(6, "symmetric"))
    assert count_frames(2, "symmetric") == 2
    with pytest.raises(ValueError):
        list(enumerate_frames(2, "nonsense"))


def test_reflexive_symmetric_size5_is_fast():
    import time
    t = time.perf_counter()
    assert count_frames(5, "symmetric") == 34
    assert time.perf_counter() - t < 10
