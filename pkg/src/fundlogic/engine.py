"""Sequent checking: forward saturation, refutation-tree derivations, countermodel search."""

from __future__ import annotations

import itertools
import os
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from .formula import (
    BOTTOM_VAR, And, Formula, Neg, Or, Sequent, Var, bottom, godel_gentzen,
    is_contradiction_shape, negs, subformulas, to_text, variables,
)
from .frames import (
    Frame, class_check, closure_np, enumerate_frames, fixpoint_masks, identity_frame, neg_np,
)
from .rules import EXTENSIONS, MODEL_CLASS, Step, check_logic, replay
from .semantics import Model, refutes

UNIVERSE_CAP = 2000
# valuations evaluated in one numpy batch
BATCH = 1 << 20


class UniverseTooLarge(ValueError):
    pass


class InconsistentVerdict(AssertionError):
    pass


@dataclass(frozen=True)
class Budget:
    max_size: int = 5
    universe_depth: int = 2
    universe_cap: int = UNIVERSE_CAP
    max_valuations: int = 1 << 26
    jobs: int = 1

    @classmethod
    def from_env(cls, **overrides) -> "Budget":
        jobs = int(os.environ.get("WORKBENCH_JOBS", "1") or 1)
        return cls(**{"jobs": jobs, **overrides})


# --------------------------------------------------------------------------
# saturation

def build_universe(goal: Sequent, logic: str, depth: int = 2, cap: int = UNIVERSE_CAP) -> list[Formula]:
    """Subformulas, their negation stacks up to depth, ~f & ~~f, and the canonical bottom.

    Logics with side-assumption case analysis also get the premise
    conjunctions a & b, a & c for each a & (b | c) already present.
    """
    if depth < 0:
        raise ValueError("universe depth must be >= 0")
    base = subformulas(goal.lhs) | subformulas(goal.rhs)
    universe = set(base) | subformulas(bottom())
    for f in base:
        for k in range(1, depth + 1):
            universe.add(negs(f, k))
        if depth >= 2:
            # explosion intermediates for refuting ~(f | ~f)-style goals
            universe.add(And(Neg(f), negs(f, 2)))
    if "cases_side" in EXTENSIONS[logic]:
        for f in list(universe):
            if isinstance(f, And) and isinstance(f.right, Or):
                universe.add(And(f.left, f.right.left))
                universe.add(And(f.left, f.right.right))
    if len(universe) > cap:
        raise UniverseTooLarge(f"universe has {len(universe)} formulas, cap is {cap}")
    return sorted(universe, key=lambda f: (len(to_text(f)), to_text(f)))


def _bits(m: int) -> Iterator[int]:
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


class Saturation:
    """Closure of the axioms under every rule of a logic, restricted to a universe."""

    def __init__(self, goal: Sequent, logic: str, depth: int = 2, cap: int = UNIVERSE_CAP):
        self.goal = goal
        self.logic = check_logic(logic)
        self.universe = build_universe(goal, logic, depth, cap)
        self.index = {f: i for i, f in enumerate(self.universe)}
        n = len(self.universe)
        self.row = [0] * n
        self.col = [0] * n
        self.why: dict[tuple[int, int], tuple[str, tuple[tuple[int, int], ...]]] = {}
        self._run()

    def _add(self, i: int, j: int, rule: str, prem: tuple = ()) -> None:
        if self.row[i] >> j & 1:
            return
        self.row[i] |= 1 << j
        self.col[j] |= 1 << i
        self.why[(i, j)] = (rule, prem)
        self.queue.append((i, j))

    def _run(self) -> None:
        U, idx = self.universe, self.index
        ext = EXTENSIONS[self.logic]
        self.queue: deque = deque()
        neg_of = {i: idx[Neg(f)] for i, f in enumerate(U) if Neg(f) in idx}
        and_left: dict[int, list[tuple[int, int]]] = {}
        and_right: dict[int, list[tuple[int, int]]] = {}
        or_left: dict[int, list[tuple[int, int]]] = {}
        or_right: dict[int, list[tuple[int, int]]] = {}
        cases: dict[int, list[tuple[int, int, bool]]] = {}
        contradiction = [is_contradiction_shape(f) for f in U]

        for i, f in enumerate(U):
            if isinstance(f, And):
                a, b = idx[f.left], idx[f.right]
                and_left.setdefault(a, []).append((i, b))
                and_right.setdefault(b, []).append((i, a))
                if "cases_side" in ext and isinstance(f.right, Or):
                    p1, p2 = And(f.left, f.right.left), And(f.left, f.right.right)
                    if p1 in idx and p2 in idx:
                        cases.setdefault(idx[p1], []).append((i, idx[p2], True))
                        cases.setdefault(idx[p2], []).append((i, idx[p1], False))
            elif isinstance(f, Or):
                a, b = idx[f.left], idx[f.right]
                or_left.setdefault(a, []).append((i, b))
                or_right.setdefault(b, []).append((i, a))

        for i, f in enumerate(U):
            self._add(i, i, "refl")
        for i, f in enumerate(U):
            if isinstance(f, And):
                self._add(i, idx[f.left], "and_elim_l")
                self._add(i, idx[f.right], "and_elim_r")
            elif isinstance(f, Or):
                self._add(idx[f.left], i, "or_intro_l")
                self._add(idx[f.right], i, "or_intro_r")
            elif isinstance(f, Neg) and isinstance(f.child, Neg):
                self._add(idx[f.child.child], i, "dni")
                if "dne" in ext:
                    self._add(i, idx[f.child.child], "dne")
        for i, f in enumerate(U):
            if contradiction[i]:
                for j in range(len(U)):
                    self._add(i, j, "explosion")

        row, col = self.row, self.col
        while self.queue:
            i, j = self.queue.popleft()
            for k in _bits(row[j] & ~row[i]):
                self._add(i, k, "trans", ((i, j), (j, k)))
            for h in _bits(col[i] & ~col[j]):
                self._add(h, j, "trans", ((h, i), (i, j)))
            for a, other in and_left.get(j, ()):
                if row[i] >> other & 1:
                    self._add(i, a, "and_intro", ((i, j), (i, other)))
            for a, other in and_right.get(j, ()):
                if row[i] >> other & 1:
                    self._add(i, a, "and_intro", ((i, other), (i, j)))
            for o, other in or_left.get(i, ()):
                if row[other] >> j & 1:
                    self._add(o, j, "or_elim", ((i, j), (other, j)))
            for o, other in or_right.get(i, ()):
                if row[other] >> j & 1:
                    self._add(o, j, "or_elim", ((other, j), (i, j)))
            if i in neg_of and j in neg_of:
                self._add(neg_of[j], neg_of[i], "contrapose", ((i, j),))
            for t, other, first in cases.get(i, ()):
                if row[other] >> j & 1:
                    prem = ((i, j), (other, j)) if first else ((other, j), (i, j))
                    self._add(t, j, "cases_side", prem)
            if "pseudocomp" in ext and contradiction[j]:
                f = U[i]
                if isinstance(f, And) and Neg(f.left) in idx:
                    self._add(idx[f.right], idx[Neg(f.left)], "pseudocomp", ((i, j),))

    def derives(self, s: Sequent) -> bool:
        i, j = self.index.get(s.lhs), self.index.get(s.rhs)
        return i is not None and j is not None and bool(self.row[i] >> j & 1)

    def derivable(self) -> Iterator[Sequent]:
        for i, f in enumerate(self.universe):
            for j in _bits(self.row[i]):
                yield Sequent(f, self.universe[j])

    @property
    def size(self) -> int:
        return sum(bin(r).count("1") for r in self.row)

    def trace(self, s: Sequent | None = None) -> list[Step] | None:
        s = self.goal if s is None else s
        if not self.derives(s):
            return None
        target = (self.index[s.lhs], self.index[s.rhs])
        order: dict[tuple[int, int], int] = {}
        steps: list[Step] = []
        stack = [(target, False)]
        while stack:
            key, expanded = stack.pop()
            if key in order:
                continue
            rule, prem = self.why[key]
            if expanded or not prem:
                steps.append(Step(Sequent(self.universe[key[0]], self.universe[key[1]]), rule,
                                  tuple(order[q] for q in prem)))
                order[key] = len(steps) - 1
                continue
            stack.append((key, True))
            for q in reversed(prem):
                if q not in order:
                    stack.append((q, False))
        return steps


def saturate(goal: Sequent, logic: str, universe_depth: int = 2, cap: int = UNIVERSE_CAP) -> Saturation:
    return Saturation(goal, logic, universe_depth, cap)


# --------------------------------------------------------------------------
# derivations from refutation trees (logics with pseudocomplementation)

def _kleene(f: Formula, val: dict[str, bool]) -> bool | None:
    if isinstance(f, Var):
        return val.get(f.name)
    if isinstance(f, Neg):
        v = _kleene(f.child, val)
        return None if v is None else not v
    a, b = _kleene(f.left, val), _kleene(f.right, val)
    if isinstance(f, And):
        if a is False or b is False:
            return False
        return True if a and b else None
    if a is True or b is True:
        return True
    return False if a is False and b is False else None


def classically_unsat(f: Formula) -> bool:
    vs = sorted(variables(f))
    return not any(_kleene(f, dict(zip(vs, bits))) for bits in itertools.product((False, True), repeat=len(vs)))


class _Builder:
    def __init__(self):
        self.steps: list[Step] = []
        self.seen: dict[Sequent, int] = {}

    def add(self, lhs: Formula, rhs: Formula, rule: str, *prem: int) -> int:
        s = Sequent(lhs, rhs)
        if s in self.seen:
            return self.seen[s]
        self.steps.append(Step(s, rule, prem))
        self.seen[s] = len(self.steps) - 1
        return self.seen[s]

    def seq(self, i: int) -> Sequent:
        return self.steps[i].sequent

    def trans(self, a: int, b: int) -> int:
        return self.add(self.seq(a).lhs, self.seq(b).rhs, "trans", a, b)


class _Refuter:
    """Derive ctx |- bottom by splitting on variables with pseudocomplementation.

    Contexts grow as ``lit & ctx``; at a leaf the base formula is false under
    the literals collected so far, so ctx proves both base and ~base.
    """

    def __init__(self, base: Formula):
        self.base = base
        self.bot = bottom()
        self.b = _Builder()
        self.vars = sorted(variables(base))

    def project(self, ctx: Formula, lits: list[Formula], target: Formula) -> int:
        # ctx = lits[-1] & (lits[-2] & (... & base)); walk down the right spine
        b = self.b
        cur = b.add(ctx, ctx, "refl")
        f = ctx
        while True:
            if f == target:
                return cur
            if isinstance(f, And) and f.left == target and f is not self.base:
                return b.trans(cur, b.add(f, f.left, "and_elim_l"))
            if f is self.base or not isinstance(f, And):
                raise AssertionError(f"{to_text(target)} not in context")
            cur = b.trans(cur, b.add(f, f.right, "and_elim_r"))
            f = f.right

    def value(self, ctx: Formula, lits: list[Formula], val: dict[str, bool], g: Formula, truth: bool) -> int:
        """ctx |- g when truth, ctx |- ~g otherwise."""
        b = self.b
        if isinstance(g, Var):
            return self.project(ctx, lits, g if truth else Neg(g))
        if isinstance(g, Neg):
            if truth:
                return self.value(ctx, lits, val, g.child, False)
            inner = self.value(ctx, lits, val, g.child, True)
            return b.trans(inner, b.add(g.child, Neg(g), "dni"))
        if isinstance(g, And):
            if truth:
                l = self.value(ctx, lits, val, g.left, True)
                r = self.value(ctx, lits, val, g.right, True)
                return b.add(ctx, g, "and_intro", l, r)
            side, rule = (g.left, "and_elim_l") if _kleene(g.left, val) is False else (g.right, "and_elim_r")
            neg_side = self.value(ctx, lits, val, side, False)
            elim = b.add(g, side, rule)
            contra = b.add(Neg(side), Neg(g), "contrapose", elim)
            return b.trans(neg_side, contra)
        if truth:
            side, rule = (g.left, "or_intro_l") if _kleene(g.left, val) is True else (g.right, "or_intro_r")
            return b.trans(self.value(ctx, lits, val, side, True), b.add(side, g, rule))
        # ~a & ~b |- ~(a | b), then compose
        na = self.value(ctx, lits, val, g.left, False)
        nb = self.value(ctx, lits, val, g.right, False)
        d = And(Neg(g.left), Neg(g.right))
        both = b.add(ctx, d, "and_intro", na, nb)
        arms = []
        for side, rule in ((g.left, "and_elim_l"), (g.right, "and_elim_r")):
            elim = b.add(d, Neg(side), rule)
            contra = b.add(Neg(Neg(side)), Neg(d), "contrapose", elim)
            arms.append(b.trans(b.add(side, Neg(Neg(side)), "dni"), contra))
        cases = b.add(g, Neg(d), "or_elim", *arms)
        flip = b.add(Neg(Neg(d)), Neg(g), "contrapose", cases)
        dd = b.add(d, Neg(Neg(d)), "dni")
        return b.trans(both, b.trans(dd, flip))

    def refute(self, ctx: Formula, lits: list[Formula], val: dict[str, bool]) -> int | None:
        b = self.b
        status = _kleene(self.base, val)
        if status is True:
            return None
        if status is False:
            pos = self.project(ctx, lits, self.base)
            neg = self.value(ctx, lits, val, self.base, False)
            both = b.add(ctx, And(self.base, Neg(self.base)), "and_intro", pos, neg)
            return b.trans(both, b.add(And(self.base, Neg(self.base)), self.bot, "explosion"))
        v = next(x for x in self.vars if x not in val)
        arms = []
        for lit, truth in ((Var(v), True), (Neg(Var(v)), False)):
            sub = self.refute(And(lit, ctx), [*lits, lit], {**val, v: truth})
            if sub is None:
                return None
            arms.append(b.add(ctx, Neg(lit), "pseudocomp", sub))
        pair = And(Neg(Var(v)), Neg(Neg(Var(v))))
        both = b.add(ctx, pair, "and_intro", *arms)
        return b.trans(both, b.add(pair, self.bot, "explosion"))


def refutation_derivation(goal: Sequent, logic: str) -> list[Step] | None:
    """A derivation of goal built from a classical refutation, when one applies.

    Uses pseudocomplementation, so only intuitionistic and classical logic
    qualify.  Covers: unsatisfiable lhs; rhs of the form ~c with c & lhs
    unsatisfiable; and (classical only, through ~~-elimination) any tautology.
    """
    ext = EXTENSIONS[check_logic(logic)]
    if "pseudocomp" not in ext:
        return None
    lhs, rhs = goal.lhs, goal.rhs
    if classically_unsat(lhs):
        r = _Refuter(lhs)
        top = r.refute(lhs, [], {})
        if goal.rhs != r.bot:
            top = r.b.trans(top, r.b.add(r.bot, rhs, "explosion"))
        return r.b.steps[: top + 1] if top == len(r.b.steps) - 1 else _prune(r.b.steps, top)
    if isinstance(rhs, Neg) and classically_unsat(And(rhs.child, lhs)):
        r = _Refuter(And(rhs.child, lhs))
        sub = r.refute(r.base, [], {})
        top = r.b.add(lhs, rhs, "pseudocomp", sub)
        return _prune(r.b.steps, top)
    if "dne" in ext and classically_unsat(And(Neg(rhs), lhs)):
        r = _Refuter(And(Neg(rhs), lhs))
        sub = r.refute(r.base, [], {})
        nn = r.b.add(lhs, Neg(Neg(rhs)), "pseudocomp", sub)
        top = r.b.trans(nn, r.b.add(Neg(Neg(rhs)), rhs, "dne"))
        return _prune(r.b.steps, top)
    return None


def _prune(steps: list[Step], top: int) -> list[Step]:
    """Keep only the ancestors of step ``top``, renumbered."""
    keep = set()
    stack = [top]
    while stack:
        i = stack.pop()
        if i not in keep:
            keep.add(i)
            stack.extend(steps[i].premises)
    order = sorted(keep)
    new = {old: k for k, old in enumerate(order)}
    return [Step(steps[i].sequent, steps[i].rule, tuple(new[j] for j in steps[i].premises)) for i in order]


# --------------------------------------------------------------------------
# countermodel search

@dataclass(frozen=True)
class Countermodel:
    model: Model
    state: object
    semantics: str

    def describe(self) -> str:
        val = ", ".join(f"{p}={sorted(map(str, v))}" for p, v in sorted(self.model.valuation.items()))
        rel = sorted((str(x), str(y)) for x, y in self.model.frame.rel if x != y)
        return (f"{len(self.model.states)} states, non-loop pairs {rel}, valuation {{{val}}}, "
                f"refuted at {self.state} ({self.semantics} semantics)")


@dataclass(frozen=True)
class SearchOutcome:
    witness: Countermodel | None
    frames_checked: int
    sizes: tuple[int, ...]
    complete: bool


def _search_vars(goal: Sequent) -> tuple[list[str], bool]:
    """Variables to enumerate; the flag says _bot only occurs inside bottom().

    In reflexive frames ``_bot & ~_bot`` is empty under every valuation, so
    _bot can then be fixed to the empty set.
    """
    vs = variables(goal.lhs) | variables(goal.rhs)
    fixed_bot = False
    if BOTTOM_VAR in vs:
        bot = bottom()

        def stray(f: Formula) -> bool:
            if f == bot:
                return False
            if isinstance(f, Var):
                return f.name == BOTTOM_VAR
            if isinstance(f, Neg):
                return stray(f.child)
            return stray(f.left) or stray(f.right)

        if not (stray(goal.lhs) or stray(goal.rhs)):
            vs.discard(BOTTOM_VAR)
            fixed_bot = True
    return sorted(vs), fixed_bot


def _eval_np(f: Formula, env: dict[str, np.ndarray], preds, succs, sem: str, memo: dict) -> np.ndarray:
    hit = memo.get(f)
    if hit is not None:
        return hit
    if isinstance(f, Var):
        r = env[f.name]
    elif isinstance(f, Neg):
        r = neg_np(preds, _eval_np(f.child, env, preds, succs, sem, memo))
    elif isinstance(f, And):
        r = _eval_np(f.left, env, preds, succs, sem, memo) & _eval_np(f.right, env, preds, succs, sem, memo)
    else:
        u = _eval_np(f.left, env, preds, succs, sem, memo) | _eval_np(f.right, env, preds, succs, sem, memo)
        r = closure_np(preds, succs, u) if sem == "fixpoint" else u
    memo[f] = r
    return r


def _refute_on_frame(goal: Sequent, frame: Frame, sem: str, vs: list[str], fixed_bot: bool,
                     max_valuations: int) -> tuple[Countermodel | None, bool]:
    """First refuting valuation/state on one frame, in lexicographic valuation order."""
    n = len(frame)
    props = fixpoint_masks(frame) if sem == "fixpoint" else tuple(range(1 << n))
    f = len(props)
    total = f ** len(vs)
    if total > max_valuations:
        return None, False
    preds = np.asarray(frame.preds, dtype=np.int64)
    succs = np.asarray(frame.succs, dtype=np.int64)
    parr = np.asarray(props, dtype=np.int64)
    # loop over leading variables in python, vectorise the trailing ones
    inner = len(vs)
    while inner > 0 and f ** inner > BATCH:
        inner -= 1
    outer_vs, inner_vs = vs[: len(vs) - inner], vs[len(vs) - inner:]
    shape = (f,) * inner
    for outer in itertools.product(range(f), repeat=len(outer_vs)):
        env: dict[str, np.ndarray] = {v: np.int64(props[k]) for v, k in zip(outer_vs, outer)}
        for t, v in enumerate(inner_vs):
            env[v] = parr.reshape([1] * t + [f] + [1] * (inner - t - 1))
        if fixed_bot:
            env[BOTTOM_VAR] = np.int64(0)
        memo: dict = {}
        lhs = _eval_np(goal.lhs, env, preds, succs, sem, memo)
        rhs = _eval_np(goal.rhs, env, preds, succs, sem, memo)
        bad = np.broadcast_to(lhs & ~rhs, shape).ravel()
        hits = np.flatnonzero(bad)
        if hits.size:
            pos = int(hits[0])
            idx = np.unravel_index(pos, shape) if shape else ()
            choice = dict(zip(outer_vs, outer))
            choice.update({v: int(k) for v, k in zip(inner_vs, idx)})
            mask = int(bad[pos])
            state = frame.states[(mask & -mask).bit_length() - 1]
            val = {v: frame.unmask(props[choice[v]]) for v in vs}
            if fixed_bot:
                val[BOTTOM_VAR] = frozenset()
            return Countermodel(Model(frame, val), state, sem), True
    return None, True


def candidate_frames(logic: str, max_size: int) -> Iterator[Frame]:
    cls, _ = MODEL_CLASS[check_logic(logic)]
    if logic == "classical":
        # truth tables first: single reflexive points
        yield identity_frame((0,))
    for size in range(1, max_size + 1):
        yield from enumerate_frames(size, cls, bound=max(max_size, 1))


def search_countermodel(goal: Sequent, logic: str, max_size: int = 5, *, jobs: int = 1,
                        max_valuations: int = 1 << 26,
                        extra_models: Sequence[Model] = ()) -> SearchOutcome:
    if max_size < 1:
        raise ValueError("max_size must be >= 1")
    cls, sem = MODEL_CLASS[check_logic(logic)]
    vs, fixed_bot = _search_vars(goal)
    for m in map(with_bottom, extra_models):
        if not in_model_class(m, logic):
            raise ValueError(f"extra model is not in the {logic} model class")
        cm = _first_refutation(m, goal, sem)
        if cm is not None:
            return SearchOutcome(cm, 0, (), True)

    frames = candidate_frames(logic, max_size)
    checked = 0
    complete = True
    work = lambda fr: _refute_on_frame(goal, fr, sem, vs, fixed_bot, max_valuations)  # noqa: E731
    if jobs <= 1:
        for fr in frames:
            cm, done = work(fr)
            checked += 1
            complete &= done
            if cm is not None:
                return SearchOutcome(cm, checked, tuple(range(1, max_size + 1)), complete)
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            while True:
                chunk = list(itertools.islice(frames, 4 * jobs))
                if not chunk:
                    break
                for cm, done in pool.map(work, chunk):
                    checked += 1
                    complete &= done
                    if cm is not None:
                        return SearchOutcome(cm, checked, tuple(range(1, max_size + 1)), complete)
    return SearchOutcome(None, checked, tuple(range(1, max_size + 1)), complete)


def find_countermodel(goal: Sequent, logic: str, max_size: int = 5, **kw) -> Countermodel | None:
    return search_countermodel(goal, logic, max_size, **kw).witness


def with_bottom(m: Model) -> Model:
    """m with _bot fixed to the empty set when it has no value yet."""
    if BOTTOM_VAR in m.valuation:
        return m
    return Model(m.frame, {**m.valuation, BOTTOM_VAR: frozenset()})


def _first_refutation(m: Model, goal: Sequent, sem: str) -> Countermodel | None:
    m = with_bottom(m)
    for x in m.states:
        if refutes(m, x, goal, sem):
            return Countermodel(m, x, sem)
    return None


def in_model_class(m: Model, logic: str) -> bool:
    cls, sem = MODEL_CLASS[check_logic(logic)]
    props = class_check(m.frame)
    required = {"pseudosymmetric": ("reflexive", "pseudosymmetric"),
                "symmetric": ("reflexive", "symmetric"),
                "transitive": ("reflexive", "transitive"),
                "compossible": ("reflexive", "symmetric", "compossible")}[cls]
    if not props.satisfies(required):
        return False
    return sem == "fine" or not m.violations


def replay_witness(goal: Sequent, logic: str, cm: Countermodel) -> bool:
    _, sem = MODEL_CLASS[check_logic(logic)]
    return cm.semantics == sem and in_model_class(cm.model, logic) and refutes(cm.model, cm.state, goal, sem)


# --------------------------------------------------------------------------
# verdicts

@dataclass(frozen=True)
class Valid:
    trace: tuple[Step, ...]
    method: str = "saturation"
    kind: str = field(default="valid", init=False)


@dataclass(frozen=True)
class Invalid:
    witness: Countermodel
    kind: str = field(default="invalid", init=False)


@dataclass(frozen=True)
class Unknown:
    max_size: int
    universe_depth: int
    universe_size: int | None
    search_complete: bool
    kind: str = field(default="unknown", init=False)


Verdict = Valid | Invalid | Unknown


def check(goal: Sequent, logic: str, budget: Budget | None = None, *, cross_check: bool = False,
          extra_models: Sequence[Model] = ()) -> Verdict:
    """Valid with a replayable derivation, Invalid with a countermodel, or Unknown.

    With ``cross_check`` the countermodel search also runs after a derivation
    is found and a hit raises InconsistentVerdict.
    """
    budget = budget or Budget()
    check_logic(logic)
    derivation: list[Step] | None = None
    method = "saturation"
    universe_size = None
    try:
        sat = saturate(goal, logic, budget.universe_depth, budget.universe_cap)
        universe_size = len(sat.universe)
        derivation = sat.trace()
    except UniverseTooLarge:
        pass
    if derivation is None:
        derivation = refutation_derivation(goal, logic)
        method = "refutation"
    if derivation is not None:
        problems = replay(derivation, logic)
        if problems:
            raise InconsistentVerdict(f"derivation failed replay: {problems[:3]}")
        if cross_check:
            cm = find_countermodel(goal, logic, budget.max_size, jobs=budget.jobs,
                                   max_valuations=budget.max_valuations, extra_models=extra_models)
            if cm is not None:
                raise InconsistentVerdict(f"{goal} derived in {logic} but refuted: {cm.describe()}")
        return Valid(tuple(derivation), method)
    out = search_countermodel(goal, logic, budget.max_size, jobs=budget.jobs,
                              max_valuations=budget.max_valuations, extra_models=extra_models)
    if out.witness is not None:
        return Invalid(out.witness)
    return Unknown(budget.max_size, budget.universe_depth, universe_size, out.complete)


@dataclass(frozen=True)
class EmbeddingReport:
    goal: Sequent
    translated: Sequent
    ortho: Verdict
    fundamental: Verdict

    @property
    def status(self) -> str:
        a, b = self.ortho.kind, self.fundamental.kind
        if "unknown" in (a, b):
            return "inconclusive"
        return "agree" if a == b else "disagree"


def translate_sequent(s: Sequent) -> Sequent:
    return Sequent(godel_gentzen(s.lhs), godel_gentzen(s.rhs))


def gg_embedding_check(goal: Sequent, budget: Budget | None = None) -> EmbeddingReport:
    t = translate_sequent(goal)
    return EmbeddingReport(goal, t, check(goal, "ortho", budget), check(t, "fundamental", budget))


def verdict_to_json(v: Verdict, *, with_trace: bool = False) -> dict:
    from .rules import trace_to_json
    from .semantics import model_to_json

    out: dict = {"verdict": v.kind}
    if isinstance(v, Valid):
        out["method"] = v.method
        out["steps"] = len(v.trace)
        if with_trace:
            out["trace"] = trace_to_json(v.trace)
    elif isinstance(v, Invalid):
        out["witness"] = model_to_json(v.witness.model, state=v.witness.state, semantics=v.witness.semantics)
    else:
        out.update(max_size=v.max_size, universe_depth=v.universe_depth,
                   universe_size=v.universe_size, search_complete=v.search_complete)
    return out
