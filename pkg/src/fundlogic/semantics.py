"""Models, the fixpoint and Fine truth definitions, and consequence checks."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable, Literal, Mapping, Sequence

from .formula import And, Formula, Neg, Or, Sequent, Var
from .frames import Frame, State, closure_mask, neg_mask

Semantics = Literal["fixpoint", "fine"]
SEMANTICS = ("fixpoint", "fine")


class FixpointViolation(ValueError):
    def __init__(self, violations: list[tuple[str, State]]):
        shown = ", ".join(f"{p}@{x}" for p, x in violations[:5])
        super().__init__(f"valuation is not a fixpoint valuation: {shown}")
        self.violations = violations


class UnknownVariable(KeyError):
    pass


@dataclass(frozen=True, eq=False)
class Model:
    frame: Frame
    valuation: Mapping[str, frozenset] = field(default_factory=dict)

    def __post_init__(self) -> None:
        val = {str(p): frozenset(v) for p, v in dict(self.valuation).items()}
        for p, v in val.items():
            unknown = [s for s in v if s not in self.frame.index]
            if unknown:
                raise ValueError(f"valuation of {p} references unknown states {unknown}")
        object.__setattr__(self, "valuation", val)

    @cached_property
    def masks(self) -> dict[str, int]:
        return {p: self.frame.mask(v) for p, v in self.valuation.items()}

    @cached_property
    def violations(self) -> list[tuple[str, State]]:
        return validate_fixpoint_model(self)

    @property
    def states(self) -> tuple:
        return self.frame.states


def validate_fixpoint_model(m: Model) -> list[tuple[str, State]]:
    """(p, x) pairs where x lies in c(V(p)) but not in V(p)."""
    out = []
    for p in sorted(m.masks):
        a = m.masks[p]
        bad = closure_mask(m.frame, a) & ~a
        out.extend((p, x) for x in m.frame.ordered(bad))
    return out


def eval_mask(m: Model, f: Formula, sem: Semantics = "fixpoint", *, strict: bool = True,
              _memo: dict | None = None) -> int:
    if sem not in SEMANTICS:
        raise ValueError(f"unknown semantics {sem!r}")
    memo = {} if _memo is None else _memo
    frame = m.frame

    def go(g: Formula) -> int:
        hit = memo.get(g)
        if hit is not None:
            return hit
        if isinstance(g, Var):
            if g.name in m.masks:
                r = m.masks[g.name]
            elif strict:
                raise UnknownVariable(g.name)
            else:
                r = 0
        elif isinstance(g, Neg):
            r = neg_mask(frame, go(g.child))
        elif isinstance(g, And):
            r = go(g.left) & go(g.right)
        elif isinstance(g, Or):
            u = go(g.left) | go(g.right)
            r = closure_mask(frame, u) if sem == "fixpoint" else u
        else:
            raise TypeError(f"not a formula: {g!r}")
        memo[g] = r
        return r

    return go(f)


def evaluate(m: Model, f: Formula, sem: Semantics = "fixpoint", *, strict: bool = True) -> frozenset:
    """The set of states forcing f (fixpoint) or satisfying f (fine)."""
    if sem == "fixpoint" and m.violations:
        raise FixpointViolation(m.violations)
    return m.frame.unmask(eval_mask(m, f, sem, strict=strict))


def evaluate_ordered(m: Model, f: Formula, sem: Semantics = "fixpoint", *, strict: bool = True) -> list:
    if sem == "fixpoint" and m.violations:
        raise FixpointViolation(m.violations)
    return m.frame.ordered(eval_mask(m, f, sem, strict=strict))


@dataclass(frozen=True)
class AcceptReject:
    accepts: bool
    rejects: bool
    accepts_negation: bool


def accepts_rejects(m: Model, f: Formula, x: State, sem: Semantics = "fixpoint") -> AcceptReject:
    if x not in m.frame.index:
        raise ValueError(f"unknown state {x!r}")
    if sem == "fixpoint" and m.violations:
        raise FixpointViolation(m.violations)
    ext = eval_mask(m, f, sem)
    i = m.frame.index[x]
    return AcceptReject(
        accepts=bool(ext >> i & 1),
        rejects=m.frame.succs[i] & ext == 0,
        accepts_negation=m.frame.preds[i] & ext == 0,
    )


@dataclass(frozen=True)
class Counterexample:
    model_index: int
    model: Model
    state: State


def consequence_over(models: Sequence[Model], s: Sequent, sem: Semantics = "fixpoint", *,
                     strict: bool = True) -> bool | Counterexample:
    """True, or the first refuting (model, state) in model then state order."""
    for idx, m in enumerate(models):
        if sem == "fixpoint" and m.violations:
            raise FixpointViolation(m.violations)
        memo: dict = {}
        bad = eval_mask(m, s.lhs, sem, strict=strict, _memo=memo) & ~eval_mask(m, s.rhs, sem, strict=strict, _memo=memo)
        if bad:
            first = (bad & -bad).bit_length() - 1
            return Counterexample(idx, m, m.frame.states[first])
    return True


def refutes(m: Model, x: State, s: Sequent, sem: Semantics = "fixpoint") -> bool:
    ext_l = eval_mask(m, s.lhs, sem)
    ext_r = eval_mask(m, s.rhs, sem)
    i = m.frame.index[x]
    return bool(ext_l >> i & 1) and not ext_r >> i & 1


# --------------------------------------------------------------------------
# model files: {"states": [...], "rel": [[x, y], ...], "valuation": {"p": [...]}}

def model_to_json(m: Model, *, state: State | None = None, semantics: Semantics | None = None) -> dict:
    idx = m.frame.index
    pairs = sorted(m.frame.rel, key=lambda pr: (idx[pr[0]], idx[pr[1]]))
    doc: dict = {
        "states": [str(s) for s in m.frame.states],
        "rel": [[str(x), str(y)] for x, y in pairs],
        "valuation": {p: [str(s) for s in m.frame.ordered(m.masks[p])] for p in sorted(m.masks)},
    }
    if state is not None:
        doc["state"] = str(state)
    if semantics is not None:
        doc["semantics"] = semantics
    return doc


def model_from_json(doc: Mapping) -> Model:
    try:
        states = [str(s) for s in doc["states"]]
        rel = [(str(x), str(y)) for x, y in doc.get("rel", [])]
        valuation = {str(p): [str(s) for s in v] for p, v in doc.get("valuation", {}).items()}
    except (KeyError, TypeError, ValueError) as e:
        raise ValueError(f"malformed model document: {e}") from None
    return Model(Frame(tuple(states), rel), valuation)


def load_model(path: str | Path) -> Model:
    return model_from_json(json.loads(Path(path).read_text()))


def save_model(m: Model, path: str | Path, **extra) -> None:
    Path(path).write_text(json.dumps(model_to_json(m, **extra), indent=2) + "\n")


def model_on(frame: Frame, valuation: Mapping[str, Iterable[State]]) -> Model:
    return Model(frame, {p: frozenset(v) for p, v in valuation.items()})
