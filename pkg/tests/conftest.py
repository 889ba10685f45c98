import random

import pytest
from hypothesis import strategies as st

from fundlogic.formula import And, Neg, Or, Var
from fundlogic.frames import Frame

ACCEPTANCE: dict[int, tuple[bool, str]] = {}

VARS = ("p", "q", "r")


def formulas(max_depth: int = 4, names=VARS, with_or: bool = True):
    leaves = st.sampled_from(names).map(Var)

    def extend(children):
        ops = [children.map(Neg), st.builds(And, children, children)]
        if with_or:
            ops.append(st.builds(Or, children, children))
        return st.one_of(*ops)

    return st.recursive(leaves, extend, max_leaves=2 ** max_depth)


@st.composite
def frames(draw, max_size: int = 5, reflexive: bool = False):
    n = draw(st.integers(1, max_size))
    pairs = [(x, y) for x in range(n) for y in range(n)]
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    rel = {pr for pr, b in zip(pairs, bits) if b or (reflexive and pr[0] == pr[1])}
    return Frame(tuple(range(n)), rel)


def random_formula(rng: random.Random, depth: int, names=VARS, with_or: bool = True):
    if depth == 0 or rng.random() < 0.25:
        return Var(rng.choice(names))
    ops = "nao" if with_or else "na"
    k = rng.choice(ops)
    if k == "n":
        return Neg(random_formula(rng, depth - 1, names, with_or))
    cls = And if k == "a" else Or
    return cls(random_formula(rng, depth - 1, names, with_or), random_formula(rng, depth - 1, names, with_or))


def record(criterion: int, ok: bool, detail: str) -> None:
    ACCEPTANCE[criterion] = (ok, detail)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {k}: {detail}")


@pytest.fixture
def rng():
    return random.Random(20240601)
