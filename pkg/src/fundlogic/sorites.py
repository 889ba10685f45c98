"""The symmetric and pseudosymmetric Sorites models, their facts, DOT export."""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Literal

from .formula import And, Formula, Neg, Or, SoritesParams, conj, p, sorites_formula
from .frames import Frame, class_check
from .semantics import Model, eval_mask

INF = math.inf


def _fmt(v: float) -> str:
    if v == INF:
        return "inf"
    if v == -INF:
        return "-inf"
    return str(int(v))


@dataclass(frozen=True, order=True)
class Pair:
    """State (i, j): p_k holds for k <= i, ~p_k for k >= j."""

    i: float
    j: float

    def __str__(self) -> str:
        return f"({_fmt(self.i)},{_fmt(self.j)})"

    @property
    def finite(self) -> bool:
        return math.isfinite(self.i) and math.isfinite(self.j)


@dataclass(frozen=True, order=True)
class Rejector:
    """Added state k that rejects p_k | ~p_k."""

    k: int

    def __str__(self) -> str:
        return f"r{self.k}"


def compatible(a: Pair, b: Pair) -> bool:
    return max(a.i, b.i) < min(a.j, b.j)


def pair_states(params: SoritesParams) -> list[Pair]:
    n, d = params.n, params.delta
    values = [-INF, *range(n), INF]
    # -inf + d stays -inf and inf + d stays inf under float arithmetic
    return [Pair(i, j) for i in values for j in values if i + d < j]


def build_symmetric(params: SoritesParams) -> Model:
    states = pair_states(params)
    rel = {(a, b) for a in states for b in states if compatible(a, b)}
    val = {f"p{k}": frozenset(s for s in states if k <= s.i) for k in range(params.n)}
    return Model(Frame(tuple(states), rel), val)


def build_pseudosymmetric(params: SoritesParams) -> Model:
    pairs = pair_states(params)
    rejectors = [Rejector(k) for k in range(params.n)]
    states = [*pairs, *rejectors]
    rel = {(a, b) for a in pairs for b in pairs if compatible(a, b)}
    rel |= {(r, s) for r in rejectors for s in pairs if s.i < r.k < s.j}
    rel |= {(x, r) for x in states for r in rejectors}
    val = {f"p{k}": frozenset(s for s in pairs if k <= s.i) for k in range(params.n)}
    return Model(Frame(tuple(states), rel), val)


# --------------------------------------------------------------------------
# facts

@dataclass(frozen=True)
class FactResult:
    name: str
    instance: str
    passed: bool
    expected: tuple = ()
    actual: tuple = ()

    def describe(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        out = f"[{tag}] {self.name} {self.instance}"
        if not self.passed:
            out += f": expected {list(map(str, self.expected))}, got {list(map(str, self.actual))}"
        return out


@dataclass(frozen=True)
class FactReport:
    params: SoritesParams
    which: str
    results: tuple[FactResult, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def by_fact(self) -> dict[str, bool]:
        out: dict[str, bool] = {}
        for r in self.results:
            out[r.name] = out.get(r.name, True) and r.passed
        return out

    def to_json(self) -> dict:
        return {
            "n": self.params.n,
            "delta": self.params.delta,
            "model": self.which,
            "passed": self.passed,
            "facts": self.by_fact(),
            "failures": [
                {"fact": r.name, "instance": r.instance,
                 "expected": [str(s) for s in r.expected], "actual": [str(s) for s in r.actual]}
                for r in self.results if not r.passed
            ],
        }


class _Checker:
    def __init__(self, m: Model):
        self.m = m
        self.memo: dict = {}
        self.results: list[FactResult] = []

    def ext(self, f: Formula, sem: str = "fixpoint") -> int:
        memo = self.memo.setdefault(sem, {})
        return eval_mask(self.m, f, sem, _memo=memo)

    def identity(self, name: str, instance: str, f: Formula, expected: Callable[[object], bool],
                 sem: str = "fixpoint") -> None:
        want = self.m.frame.mask(s for s in self.m.states if expected(s))
        got = self.ext(f, sem)
        self.results.append(FactResult(name, instance, got == want,
                                       tuple(self.m.frame.ordered(want)), tuple(self.m.frame.ordered(got))))

    def member(self, name: str, instance: str, f: Formula, state, sem: str = "fixpoint") -> None:
        got = self.ext(f, sem)
        ok = bool(got >> self.m.frame.index[state] & 1)
        self.results.append(FactResult(name, instance, ok, (state,), tuple(self.m.frame.ordered(got))))


def _cutoff(k: int, ell: int) -> Formula:
    return And(p(k), Neg(p(k + ell)))


def _is_pair(s) -> bool:
    return isinstance(s, Pair)


def verify_facts(
    params: SoritesParams,
    which: Literal["symmetric", "pseudosymmetric"] = "symmetric",
    *,
    lem_left_end: Literal["stated", "emext"] = "stated",
) -> FactReport:
    """Check every fact about the chosen Sorites model as an exact set identity.

    DenyLEMs is stated with end states {(n-1,inf), (-inf,n-1)}.  Intersecting
    the EMExt extensions over all k gives {(n-1,inf), (-inf,0)} instead, and
    that is what evaluation produces; ``lem_left_end="emext"`` checks the
    latter, the default checks the identity as stated.
    """
    n, delta = params.n, params.delta
    pseudo = which == "pseudosymmetric"
    if which not in ("symmetric", "pseudosymmetric"):
        raise ValueError(f"unknown Sorites model {which!r}")
    m = build_pseudosymmetric(params) if pseudo else build_symmetric(params)
    c = _Checker(m)
    suffix = "2" if pseudo else ""

    for k in range(n):
        c.identity("Atom" + suffix, f"k={k}", p(k), lambda s: _is_pair(s) and k <= s.i)
        c.identity("NegAtom" + suffix, f"k={k}", Neg(p(k)), lambda s: _is_pair(s) and s.j <= k)
        if pseudo:
            c.identity("NegAtom2", f"~~p{k}", Neg(Neg(p(k))), lambda s: _is_pair(s) and k <= s.i)

    for k in range(n):
        for ell in range(delta + 1):
            if k + ell > n - 1:
                continue
            name = "NoSharpCutoffs" + suffix
            c.identity(name, f"k={k},l={ell}", _cutoff(k, ell), lambda s: False)
            c.identity(name, f"~(k={k},l={ell})", Neg(_cutoff(k, ell)), lambda s: True)

    witness = Pair(0, n - 1)
    c.member("JointSat" + suffix, f"at {witness}", sorites_formula(params), witness)
    if not pseudo:
        c.member("Consistency", f"fine semantics at {witness}", sorites_formula(params), witness, "fine")

    if pseudo:
        for k in range(n):
            c.identity("EMExt", f"k={k}", Or(p(k), Neg(p(k))),
                       lambda s: _is_pair(s) and (k <= s.i or s.j <= k))
        lem = conj([Or(p(k), Neg(p(k))) for k in range(n)])
        wlem = conj([Or(Neg(p(k)), Neg(Neg(p(k)))) for k in range(n)])
        if lem_left_end not in ("stated", "emext"):
            raise ValueError(f"lem_left_end must be 'stated' or 'emext', not {lem_left_end!r}")
        ends = {Pair(n - 1, INF), Pair(-INF, n - 1 if lem_left_end == "stated" else 0)}
        c.identity("DenyLEMs", "LEM conjunction", lem, lambda s: s in ends)
        c.identity("DenyLEMs", "WLEM conjunction", wlem, lambda s: s in ends)
        c.identity("DenyLEMs", "~LEM conjunction", Neg(lem), lambda s: _is_pair(s) and s.finite)
        c.identity("DenyLEMs", "~WLEM conjunction", Neg(wlem), lambda s: _is_pair(s) and s.finite)

    return FactReport(params, which, tuple(c.results))


def check_model_class(m: Model, which: str) -> bool:
    props = class_check(m.frame)
    if which == "symmetric":
        return props.reflexive and props.symmetric
    return props.reflexive and props.pseudosymmetric and not props.symmetric


# --------------------------------------------------------------------------
# DOT

def to_dot(m: Model, name: str = "model") -> str:
    """x ◁ y is drawn as an arrow from y to x; self-loops are left implicit.

    In a symmetric frame every pair is mutual and is drawn once, undirected.
    """
    frame = m.frame
    symmetric = class_check(frame).symmetric
    ids = {s: f"n{i}" for i, s in enumerate(frame.states)}
    lines = [f"digraph {name} {{"]
    for s in frame.states:
        lines.append(f'  {ids[s]} [label="{s}"];')
    for i, x in enumerate(frame.states):
        for j, y in enumerate(frame.states):
            if x == y or not frame.related(x, y):
                continue
            if symmetric:
                if i < j:
                    lines.append(f"  {ids[x]} -> {ids[y]} [dir=none];")
            else:
                lines.append(f"  {ids[y]} -> {ids[x]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_dot(m: Model, path: str | Path, name: str = "model") -> None:
    Path(path).write_text(to_dot(m, name))
