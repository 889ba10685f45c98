"""The intro-elim rules, their per-logic extensions, and derivation replay.

Every rule exists twice: as a syntactic instance check (used to replay
derivations) and as a set-level condition (used by the soundness sweep).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Sequence

import numpy as np

from .formula import And, Formula, Neg, Or, Sequent, is_contradiction_shape, to_text
from .frames import Frame, closure_np, enumerate_frames, fixpoint_masks, neg_np

LogicId = Literal["fundamental", "ortho", "compatibility", "intuitionistic", "classical"]
LOGICS: tuple[str, ...] = ("fundamental", "ortho", "compatibility", "intuitionistic", "classical")

BASE_RULES = (
    "refl",         # 1  a |- a
    "and_elim_l",   # 2  a & b |- a
    "and_elim_r",   # 3  a & b |- b
    "or_intro_l",   # 4  a |- a | b
    "or_intro_r",   # 5  a |- b | a
    "dni",          # 6  a |- ~~a
    "explosion",    # 7  a & ~a |- b
    "trans",        # 8  a |- b, b |- c  =>  a |- c
    "and_intro",    # 9  a |- b, a |- c  =>  a |- b & c
    "or_elim",      # 10 a |- c, b |- c  =>  a | b |- c
    "contrapose",   # 11 a |- b  =>  ~b |- ~a
)

EXTENSIONS: dict[str, frozenset] = {
    "fundamental": frozenset(),
    "ortho": frozenset({"dne"}),
    "compatibility": frozenset({"cases_side"}),
    "intuitionistic": frozenset({"cases_side", "pseudocomp"}),
    # ortho plus either strengthening gives classical logic; both are admitted
    "classical": frozenset({"dne", "cases_side", "pseudocomp"}),
}

# frame class and truth definition whose models each logic is sound for
MODEL_CLASS: dict[str, tuple[str, str]] = {
    "fundamental": ("pseudosymmetric", "fixpoint"),
    "ortho": ("symmetric", "fixpoint"),
    "compatibility": ("symmetric", "fine"),
    "intuitionistic": ("transitive", "fixpoint"),
    "classical": ("compossible", "fixpoint"),
}


def check_logic(logic: str) -> str:
    if logic not in LOGICS:
        raise ValueError(f"unknown logic {logic!r}; expected one of {', '.join(LOGICS)}")
    return logic


def admitted(logic: str) -> frozenset:
    return frozenset(BASE_RULES) | EXTENSIONS[check_logic(logic)]


# --------------------------------------------------------------------------
# syntactic instances

@dataclass(frozen=True)
class Step:
    sequent: Sequent
    rule: str
    premises: tuple[int, ...] = ()

    def describe(self, i: int) -> str:
        prem = f" from {', '.join(str(j) for j in self.premises)}" if self.premises else ""
        return f"{i:>4}. {self.sequent}   [{self.rule}{prem}]"


def is_instance(rule: str, s: Sequent, premises: Sequence[Sequent]) -> bool:
    lhs, rhs = s.lhs, s.rhs
    arity = {"trans": 2, "and_intro": 2, "or_elim": 2, "cases_side": 2, "contrapose": 1, "pseudocomp": 1}
    if len(premises) != arity.get(rule, 0):
        return False
    if rule == "refl":
        return lhs == rhs
    if rule == "and_elim_l":
        return isinstance(lhs, And) and lhs.left == rhs
    if rule == "and_elim_r":
        return isinstance(lhs, And) and lhs.right == rhs
    if rule == "or_intro_l":
        return isinstance(rhs, Or) and rhs.left == lhs
    if rule == "or_intro_r":
        return isinstance(rhs, Or) and rhs.right == lhs
    if rule == "dni":
        return rhs == Neg(Neg(lhs))
    if rule == "explosion":
        return is_contradiction_shape(lhs)
    if rule == "dne":
        return lhs == Neg(Neg(rhs))
    if rule == "trans":
        a, b = premises
        return a.lhs == lhs and a.rhs == b.lhs and b.rhs == rhs
    if rule == "and_intro":
        a, b = premises
        return a.lhs == lhs and b.lhs == lhs and rhs == And(a.rhs, b.rhs)
    if rule == "or_elim":
        a, b = premises
        return a.rhs == rhs and b.rhs == rhs and lhs == Or(a.lhs, b.lhs)
    if rule == "contrapose":
        (a,) = premises
        return lhs == Neg(a.rhs) and rhs == Neg(a.lhs)
    if rule == "cases_side":
        a, b = premises
        if not (isinstance(a.lhs, And) and isinstance(b.lhs, And)):
            return False
        alpha = a.lhs.left
        return (b.lhs.left == alpha and a.rhs == rhs and b.rhs == rhs
                and lhs == And(alpha, Or(a.lhs.right, b.lhs.right)))
    if rule == "pseudocomp":
        (a,) = premises
        return (isinstance(a.lhs, And) and is_contradiction_shape(a.rhs)
                and lhs == a.lhs.right and rhs == Neg(a.lhs.left))
    return False


def replay(steps: Sequence[Step], logic: str) -> list[str]:
    """Problems found while replaying a derivation; empty means it checks."""
    allowed = admitted(logic)
    problems = []
    for i, st in enumerate(steps):
        if st.rule not in allowed:
            problems.append(f"step {i}: rule {st.rule} not admitted in {logic}")
            continue
        if any(not 0 <= j < i for j in st.premises):
            problems.append(f"step {i}: premise index out of order")
            continue
        prem = [steps[j].sequent for j in st.premises]
        if not is_instance(st.rule, st.sequent, prem):
            problems.append(f"step {i}: {st.sequent} is not an instance of {st.rule}")
    return problems


def format_trace(steps: Sequence[Step]) -> str:
    return "\n".join(st.describe(i) for i, st in enumerate(steps))


def trace_to_json(steps: Sequence[Step]) -> list[dict]:
    return [{"lhs": to_text(s.sequent.lhs), "rhs": to_text(s.sequent.rhs),
             "rule": s.rule, "premises": list(s.premises)} for s in steps]


# --------------------------------------------------------------------------
# set-level conditions for the soundness sweep

class _Ops:
    def __init__(self, frame: Frame, sem: str):
        self.preds = np.asarray(frame.preds, dtype=np.int64)
        self.succs = np.asarray(frame.succs, dtype=np.int64)
        self.sem = sem

    def neg(self, a):
        return neg_np(self.preds, a)

    def join(self, a, b):
        u = a | b
        return closure_np(self.preds, self.succs, u) if self.sem == "fixpoint" else u

    @staticmethod
    def leq(a, b):
        return (a & ~b) == 0


# name -> (arity, premises, conclusion); each takes (ops, *metavariables)
SEMANTIC_RULES = {
    "refl": (1, lambda o, a: [], lambda o, a: o.leq(a, a)),
    "and_elim_l": (2, lambda o, a, b: [], lambda o, a, b: o.leq(a & b, a)),
    "and_elim_r": (2, lambda o, a, b: [], lambda o, a, b: o.leq(a & b, b)),
    "or_intro_l": (2, lambda o, a, b: [], lambda o, a, b: o.leq(a, o.join(a, b))),
    "or_intro_r": (2, lambda o, a, b: [], lambda o, a, b: o.leq(a, o.join(b, a))),
    "dni": (1, lambda o, a: [], lambda o, a: o.leq(a, o.neg(o.neg(a)))),
    "explosion": (2, lambda o, a, b: [], lambda o, a, b: o.leq(a & o.neg(a), b)),
    "trans": (3, lambda o, a, b, c: [o.leq(a, b), o.leq(b, c)], lambda o, a, b, c: o.leq(a, c)),
    "and_intro": (3, lambda o, a, b, c: [o.leq(a, b), o.leq(a, c)], lambda o, a, b, c: o.leq(a, b & c)),
    "or_elim": (3, lambda o, a, b, c: [o.leq(a, c), o.leq(b, c)], lambda o, a, b, c: o.leq(o.join(a, b), c)),
    "contrapose": (2, lambda o, a, b: [o.leq(a, b)], lambda o, a, b: o.leq(o.neg(b), o.neg(a))),
    "dne": (1, lambda o, a: [], lambda o, a: o.leq(o.neg(o.neg(a)), a)),
    # alpha, phi, psi, chi
    "cases_side": (4, lambda o, al, a, b, c: [o.leq(al & a, c), o.leq(al & b, c)],
                   lambda o, al, a, b, c: o.leq(al & o.join(a, b), c)),
    # phi, psi, theta: phi & psi |- theta & ~theta  =>  psi |- ~phi
    "pseudocomp": (3, lambda o, a, b, t: [o.leq(a & b, t & o.neg(t))],
                   lambda o, a, b, t: o.leq(b, o.neg(a))),
}


@dataclass(frozen=True)
class SoundnessViolation:
    logic: str
    rule: str
    frame: Frame
    propositions: tuple[frozenset, ...]


@dataclass(frozen=True)
class SweepResult:
    logic: str
    frames: int
    instances: int
    violations: tuple[SoundnessViolation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def propositions(frame: Frame, sem: str) -> tuple[int, ...]:
    if sem == "fixpoint":
        return fixpoint_masks(frame)
    return tuple(range(1 << len(frame)))


def rule_holds_on_frame(rule: str, frame: Frame, sem: str) -> tuple[int, tuple[int, ...] | None]:
    """(instances checked, first violating tuple of proposition masks or None).

    Metavariables range over every proposition of the frame, which covers
    every valuation of the variables standing for them.
    """
    arity, prem_fn, concl_fn = SEMANTIC_RULES[rule]
    props = np.asarray(propositions(frame, sem), dtype=np.int64)
    axes = [props.reshape([1] * t + [-1] + [1] * (arity - t - 1)) for t in range(arity)]
    ops = _Ops(frame, sem)
    shape = (len(props),) * arity
    ok = np.broadcast_to(concl_fn(ops, *axes), shape)
    for prem in prem_fn(ops, *axes):
        ok = ok | ~np.broadcast_to(prem, shape)
    bad = np.flatnonzero(~np.broadcast_to(ok, shape).ravel())
    if bad.size:
        idx = np.unravel_index(bad[0], shape)
        return int(np.prod(shape)), tuple(int(props[i]) for i in idx)
    return int(np.prod(shape)), None


def soundness_sweep(logic: str, max_size: int = 4) -> SweepResult:
    """Check every admitted rule on every frame of the logic's class up to max_size."""
    cls, sem = MODEL_CLASS[check_logic(logic)]
    rules = sorted(admitted(logic), key=lambda r: (r not in BASE_RULES, r))
    frames = [f for size in range(1, max_size + 1) for f in enumerate_frames(size, cls, bound=max_size)]
    violations = []
    instances = 0
    for frame in frames:
        for rule in rules:
            count, bad = rule_holds_on_frame(rule, frame, sem)
            instances += count
            if bad is not None:
                violations.append(SoundnessViolation(logic, rule, frame, tuple(frame.unmask(m) for m in bad)))
    return SweepResult(logic, len(frames), instances, tuple(violations))

