"""Finite lattices with a negation, and their prime-filter representation."""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable, Mapping

from .frames import Frame, class_check
from .semantics import Model

MAX_ELEMENTS = 64
FILTER_SCAN_CAP = 16


class LatticeError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Lattice:
    """A finite bounded lattice given by its order, plus a unary negation.

    ``leq`` may be any generating set of pairs; its reflexive-transitive
    closure is taken on construction.
    """

    elements: tuple[str, ...]
    leq: frozenset = frozenset()
    neg: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        els = tuple(str(e) for e in self.elements)
        if not els:
            raise LatticeError("a lattice needs at least one element")
        if len(set(els)) != len(els):
            raise LatticeError("duplicate element names")
        if len(els) > MAX_ELEMENTS:
            raise LatticeError(f"at most {MAX_ELEMENTS} elements supported")
        ix = {e: i for i, e in enumerate(els)}
        n = len(els)
        up = [1 << i for i in range(n)]
        for a, b in self.leq:
            if a not in ix or b not in ix:
                raise LatticeError(f"order pair ({a}, {b}) mentions an unknown element")
            up[ix[a]] |= 1 << ix[b]
        # Warshall on bit rows
        for k in range(n):
            for i in range(n):
                if up[i] >> k & 1:
                    up[i] |= up[k]
        for i, j in itertools.combinations(range(n), 2):
            if up[i] >> j & 1 and up[j] >> i & 1:
                raise LatticeError(f"order is not antisymmetric: {els[i]} and {els[j]}")
        neg = {str(a): str(b) for a, b in dict(self.neg).items()}
        for a, b in neg.items():
            if a not in ix or b not in ix:
                raise LatticeError(f"negation entry {a} -> {b} mentions an unknown element")
        missing = [e for e in els if e not in neg]
        if neg and missing:
            raise LatticeError(f"negation undefined on {missing}")
        object.__setattr__(self, "elements", els)
        object.__setattr__(self, "neg", neg)
        object.__setattr__(self, "leq", frozenset((els[i], els[j]) for i in range(n) for j in range(n)
                                                  if up[i] >> j & 1))
        object.__setattr__(self, "_up", tuple(up))
        self.meet_table  # noqa: B018  raises if meets or joins are missing
        self.join_table  # noqa: B018

    @cached_property
    def index(self) -> dict[str, int]:
        return {e: i for i, e in enumerate(self.elements)}

    def le(self, a: str, b: str) -> bool:
        return bool(self._up[self.index[a]] >> self.index[b] & 1)

    def _bound(self, i: int, j: int, upper: bool) -> int:
        n = len(self.elements)
        up = self._up
        if upper:
            common = up[i] & up[j]
            cands = [k for k in range(n) if common >> k & 1 and common & ~up[k] == 0]
        else:
            cands = [k for k in range(n) if up[k] >> i & 1 and up[k] >> j & 1]
            cands = [k for k in cands if all(not (up[m] >> i & 1 and up[m] >> j & 1) or up[m] >> k & 1
                                             for m in range(n))]
        if len(cands) != 1:
            kind = "join" if upper else "meet"
            raise LatticeError(f"{self.elements[i]} and {self.elements[j]} have no {kind}")
        return cands[0]

    @cached_property
    def meet_table(self) -> tuple[tuple[int, ...], ...]:
        n = len(self.elements)
        return tuple(tuple(self._bound(i, j, False) for j in range(n)) for i in range(n))

    @cached_property
    def join_table(self) -> tuple[tuple[int, ...], ...]:
        n = len(self.elements)
        return tuple(tuple(self._bound(i, j, True) for j in range(n)) for i in range(n))

    def meet(self, a: str, b: str) -> str:
        return self.elements[self.meet_table[self.index[a]][self.index[b]]]

    def join(self, a: str, b: str) -> str:
        return self.elements[self.join_table[self.index[a]][self.index[b]]]

    @cached_property
    def bottom(self) -> str:
        n = len(self.elements)
        return next(self.elements[i] for i in range(n) if bin(self._up[i]).count("1") == n)

    @cached_property
    def top(self) -> str:
        return next(e for i, e in enumerate(self.elements) if self._up[i] == 1 << i)

    def with_neg(self, neg: Mapping[str, str]) -> "Lattice":
        return Lattice(self.elements, self.leq, neg)


def check_weak_pseudocomplementation(L: Lattice) -> list[str]:
    """Failures of a & ~a = 0, a <= ~~a and antitonicity; empty means it is one."""
    if not L.neg:
        return ["no negation given"]
    out = []
    n = L.neg
    for a in L.elements:
        if L.meet(a, n[a]) != L.bottom:
            out.append(f"{a} & ~{a} != {L.bottom}")
        if not L.le(a, n[n[a]]):
            out.append(f"{a} is not below ~~{a}")
    for a, b in sorted(L.leq):
        if not L.le(n[b], n[a]):
            out.append(f"{a} <= {b} but ~{b} is not below ~{a}")
    return out


def check_distributive(L: Lattice) -> list[str]:
    out = []
    for a, b, c in itertools.product(L.elements, repeat=3):
        if L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c)):
            out.append(f"{a} & ({b} | {c}) fails to distribute")
    return out


# --------------------------------------------------------------------------
# prime filters

def prime_filters(L: Lattice, cap: int = FILTER_SCAN_CAP) -> list[frozenset]:
    """Every prime filter, found by scanning all subsets of the elements.

    Ordered by the subsets' bit codes.  Non-distributive input is rejected.
    """
    bad = check_distributive(L)
    if bad:
        raise LatticeError(f"lattice is not distributive: {bad[0]}")
    n = len(L.elements)
    if n > cap:
        raise LatticeError(f"prime filter scan limited to {cap} elements")
    up = L._up
    meet, join = L.meet_table, L.join_table
    b, t = L.index[L.bottom], L.index[L.top]
    out = []
    for s in range(1, 1 << n):
        if s >> b & 1 or not s >> t & 1:
            continue
        members = [i for i in range(n) if s >> i & 1]
        if any(up[i] & ~s for i in members):
            continue
        if any(not s >> meet[i][j] & 1 for i in members for j in members):
            continue
        if any(s >> join[i][j] & 1 and not (s >> i & 1 or s >> j & 1) for i in range(n) for j in range(i, n)):
            continue
        out.append(frozenset(L.elements[i] for i in members))
    return out


def _generator(L: Lattice, f: frozenset) -> str:
    return next(a for a in L.elements if a in f and all(L.le(a, b) for b in f))


@dataclass(frozen=True)
class Representation:
    lattice: Lattice
    filters: tuple[frozenset, ...]
    frame: Frame
    embedding: dict[str, frozenset]
    checks: dict[str, bool]
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return all(self.checks.values()) and not self.failures

    def to_json(self) -> dict:
        return {
            "filters": [str(s) for s in self.frame.states],
            "compatible": [[str(x), str(y)] for x, y in sorted(self.frame.rel, key=lambda p: (str(p[0]), str(p[1])))],
            "embedding": {a: sorted(map(str, v)) for a, v in self.embedding.items()},
            "checks": self.checks,
            "failures": list(self.failures),
            "ok": self.ok,
        }


def represent(L: Lattice) -> Representation:
    """Map L into the powerset of its prime filters, with F compatible with G
    iff no a in F has ~a in G, and verify every preservation property."""
    bad = check_weak_pseudocomplementation(L)
    if bad:
        raise LatticeError(f"negation is not a weak pseudocomplementation: {bad[0]}")
    failures: list[str] = []
    filters = prime_filters(L)
    labels = tuple(f"F[{_generator(L, f)}]" for f in filters)
    by_label = dict(zip(labels, filters))
    rel = {(x, y) for x in labels for y in labels
           if not any(L.neg[a] in by_label[y] for a in by_label[x])}
    frame = Frame(labels, rel)
    emb = {a: frozenset(x for x in labels if a in by_label[x]) for a in L.elements}
    full = frozenset(labels)

    def neg_set(s: frozenset) -> frozenset:
        return frozenset(x for x in labels if not any(frame.related(y, x) and y in s for y in labels))

    props = class_check(frame)
    checks = {
        "reflexive": props.reflexive,
        "symmetric": props.symmetric,
        "injective": len(set(emb.values())) == len(emb),
        "bottom": emb[L.bottom] == frozenset(),
        "top": emb[L.top] == full,
        "meet": all(emb[L.meet(a, b)] == emb[a] & emb[b] for a in L.elements for b in L.elements),
        "join": all(emb[L.join(a, b)] == emb[a] | emb[b] for a in L.elements for b in L.elements),
        "negation": all(emb[L.neg[a]] == neg_set(emb[a]) for a in L.elements),
    }
    for name, ok in checks.items():
        if not ok:
            failures.append(f"check {name} failed")
    return Representation(L, tuple(filters), frame, emb, checks, tuple(failures))


def representation_model(rep: Representation) -> Model:
    """The representing frame with one variable per lattice element."""
    return Model(rep.frame, {f"e_{a}": v for a, v in rep.embedding.items()})


# --------------------------------------------------------------------------
# stock and random lattices

def boolean_algebra(atoms: int) -> Lattice:
    """Subsets of {0..atoms-1}, named by bit strings, with complement as negation."""
    n = 1 << atoms
    name = [format(i, f"0{atoms}b") if atoms else "0" for i in range(n)]
    if atoms == 0:
        raise LatticeError("the one-element algebra has no prime filters")
    leq = {(name[i], name[j]) for i in range(n) for j in range(n) if i & ~j == 0}
    neg = {name[i]: name[(n - 1) ^ i] for i in range(n)}
    return Lattice(tuple(name), frozenset(leq), neg)


def three_chain() -> Lattice:
    """0 < m < 1 with ~0 = 1, ~m = ~1 = 0."""
    return Lattice(("0", "m", "1"), frozenset({("0", "m"), ("m", "1")}), {"0": "1", "m": "0", "1": "0"})


def downset_lattice(points: int, order: Iterable[tuple[int, int]]) -> Lattice:
    """Distributive lattice of down-sets of a finite poset, ordered by inclusion."""
    below = [1 << i for i in range(points)]
    for a, b in order:
        below[b] |= 1 << a
    for k in range(points):
        for i in range(points):
            if below[i] >> k & 1:
                below[i] |= below[k]
    downs = [s for s in range(1 << points)
             if all(below[i] & ~s == 0 for i in range(points) if s >> i & 1)]
    name = {s: "{" + ",".join(str(i) for i in range(points) if s >> i & 1) + "}" for s in downs}
    leq = {(name[a], name[b]) for a in downs for b in downs if a & ~b == 0}
    return Lattice(tuple(name[s] for s in downs), frozenset(leq))


def weak_pseudocomplementations(L: Lattice, limit: int | None = None) -> list[dict[str, str]]:
    """All negations making L weakly pseudocomplemented, by backtracking."""
    els = L.elements
    out: list[dict[str, str]] = []

    def consistent(assign: dict[str, str]) -> bool:
        for a, na in assign.items():
            if L.meet(a, na) != L.bottom:
                return False
            nna = assign.get(na)
            if nna is not None and not L.le(a, nna):
                return False
            for b, nb in assign.items():
                if L.le(a, b) and not L.le(nb, na):
                    return False
        return True

    def go(i: int, assign: dict[str, str]) -> bool:
        if i == len(els):
            out.append(dict(assign))
            return limit is not None and len(out) >= limit
        for v in els:
            assign[els[i]] = v
            if consistent(assign) and go(i + 1, assign):
                return True
            del assign[els[i]]
        return False

    go(0, {})
    return out


def random_distributive(rng: random.Random, max_points: int = 3) -> Lattice:
    """Down-set lattice of a random poset (at most 2**max_points elements)
    with a negation drawn from all of its weak pseudocomplementations."""
    points = rng.randint(1, max_points)
    order = [(a, b) for a in range(points) for b in range(a + 1, points) if rng.random() < 0.5]
    L = downset_lattice(points, order)
    negs = weak_pseudocomplementations(L)
    return L.with_neg(rng.choice(negs))


# --------------------------------------------------------------------------
# files: {"elements": [...], "leq": [[a, b], ...], "neg": {"a": "b"}}

def lattice_to_json(L: Lattice) -> dict:
    cover = sorted((a, b) for a, b in L.leq if a != b)
    return {"elements": list(L.elements), "leq": [list(p) for p in cover], "neg": dict(L.neg)}


def lattice_from_json(doc: Mapping) -> Lattice:
    try:
        return Lattice(tuple(doc["elements"]), frozenset(tuple(p) for p in doc.get("leq", [])),
                       dict(doc.get("neg", {})))
    except (KeyError, TypeError) as e:
        raise LatticeError(f"malformed lattice document: {e}") from None


def load_lattice(path: str | Path) -> Lattice:
    return lattice_from_json(json.loads(Path(path).read_text()))
