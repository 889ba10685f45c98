"""Finite relational frames, the closure operator c and frame enumeration.

``x ◁ y`` is stored as the pair ``(x, y)``.  Internally a set of states is a
bitmask over ``frame.states``; the public functions take and return
frozensets of state labels.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Hashable, Iterable, Iterator

import numpy as np

State = Hashable
StateSet = frozenset

FIXPOINT_BOUND = 12
ENUM_BOUND = 5
# log2 of the largest raw relation space we are willing to scan
MAX_RELATION_BITS = 24

PROPERTIES = ("reflexive", "symmetric", "pseudosymmetric", "transitive", "compossible", "identity")


class BoundExceeded(ValueError):
    pass


@dataclass(frozen=True)
class Frame:
    states: tuple
    rel: frozenset

    def __post_init__(self) -> None:
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "rel", frozenset(tuple(p) for p in self.rel))
        if not self.states:
            raise ValueError("a frame needs at least one state")
        if len(set(self.states)) != len(self.states):
            raise ValueError("duplicate state labels")
        known = set(self.states)
        for x, y in self.rel:
            if x not in known or y not in known:
                raise ValueError(f"relation pair ({x}, {y}) mentions an unknown state")

    def __len__(self) -> int:
        return len(self.states)

    @cached_property
    def index(self) -> dict:
        return {s: i for i, s in enumerate(self.states)}

    @cached_property
    def preds(self) -> tuple[int, ...]:
        """preds[i] = mask of states z with z ◁ states[i]."""
        out = [0] * len(self.states)
        for x, y in self.rel:
            out[self.index[y]] |= 1 << self.index[x]
        return tuple(out)

    @cached_property
    def succs(self) -> tuple[int, ...]:
        """succs[i] = mask of states y with states[i] ◁ y."""
        out = [0] * len(self.states)
        for x, y in self.rel:
            out[self.index[x]] |= 1 << self.index[y]
        return tuple(out)

    @property
    def full(self) -> int:
        return (1 << len(self.states)) - 1

    def related(self, x: State, y: State) -> bool:
        return (x, y) in self.rel

    def mask(self, states: Iterable[State]) -> int:
        m = 0
        for s in states:
            try:
                m |= 1 << self.index[s]
            except KeyError:
                raise ValueError(f"unknown state {s!r}") from None
        return m

    def unmask(self, m: int) -> frozenset:
        return frozenset(s for i, s in enumerate(self.states) if m >> i & 1)

    def ordered(self, m: int) -> list:
        return [s for i, s in enumerate(self.states) if m >> i & 1]


def identity_frame(states: Iterable[State]) -> Frame:
    states = tuple(states)
    return Frame(states, {(s, s) for s in states})


# --------------------------------------------------------------------------
# mask-level operators (python ints)

def closure_mask(frame: Frame, a: int) -> int:
    # x' is "fine" when some x'' with x' ◁ x'' lies in a
    fine = 0
    for i, s in enumerate(frame.succs):
        if s & a:
            fine |= 1 << i
    out = 0
    for i, pr in enumerate(frame.preds):
        if pr & ~fine == 0:
            out |= 1 << i
    return out


def neg_mask(frame: Frame, a: int) -> int:
    out = 0
    for i, pr in enumerate(frame.preds):
        if pr & a == 0:
            out |= 1 << i
    return out


def is_fixpoint_mask(frame: Frame, a: int) -> bool:
    return closure_mask(frame, a) == a


def fixpoint_masks(frame: Frame, bound: int = FIXPOINT_BOUND) -> tuple[int, ...]:
    if len(frame) > bound:
        raise BoundExceeded(f"fixpoint scan limited to {bound} states, frame has {len(frame)}")
    return _fixpoint_masks_cached(frame)


@lru_cache(maxsize=4096)
def _fixpoint_masks_cached(frame: Frame) -> tuple[int, ...]:
    n = len(frame)
    if n <= 16:
        masks = np.arange(1 << n, dtype=np.int64)
        closed = closure_np(np.asarray(frame.preds, dtype=np.int64),
                            np.asarray(frame.succs, dtype=np.int64), masks)
        return tuple(int(m) for m in masks[closed == masks])
    return tuple(a for a in range(1 << n) if closure_mask(frame, a) == a)


# --------------------------------------------------------------------------
# vectorised operators over arrays of masks (int64, < 63 states)

def neg_np(preds: np.ndarray, a: np.ndarray) -> np.ndarray:
    out = np.zeros(np.shape(a), dtype=np.int64)
    for i, pr in enumerate(preds):
        out |= np.where((a & pr) == 0, np.int64(1) << i, 0)
    return out


def closure_np(preds: np.ndarray, succs: np.ndarray, a: np.ndarray) -> np.ndarray:
    fine = np.zeros(np.shape(a), dtype=np.int64)
    for i, s in enumerate(succs):
        fine |= np.where((a & s) != 0, np.int64(1) << i, 0)
    out = np.zeros(np.shape(a), dtype=np.int64)
    for i, pr in enumerate(preds):
        out |= np.where((pr & ~fine) == 0, np.int64(1) << i, 0)
    return out


# --------------------------------------------------------------------------
# public set-level API

def closure(frame: Frame, a: Iterable[State]) -> frozenset:
    return frame.unmask(closure_mask(frame, frame.mask(a)))


def fixpoints(frame: Frame, bound: int = FIXPOINT_BOUND) -> list[frozenset]:
    return [frame.unmask(m) for m in fixpoint_masks(frame, bound)]


def pre_refines(frame: Frame, x: State, y: State) -> bool:
    """Every z ◁ x also satisfies z ◁ y."""
    try:
        px, py = frame.preds[frame.index[x]], frame.preds[frame.index[y]]
    except KeyError as e:
        raise ValueError(f"unknown state {e.args[0]!r}") from None
    return px & ~py == 0


@dataclass(frozen=True)
class FrameProperties:
    reflexive: bool
    symmetric: bool
    pseudosymmetric: bool
    transitive: bool
    compossible: bool
    identity: bool

    def satisfies(self, required: Iterable[str]) -> bool:
        return all(getattr(self, r) for r in required)


def _prerefine_table(preds: tuple[int, ...]) -> list[list[bool]]:
    return [[pz & ~px == 0 for px in preds] for pz in preds]


def class_check(frame: Frame) -> FrameProperties:
    n = len(frame)
    preds, succs = frame.preds, frame.succs
    rel = lambda x, y: preds[y] >> x & 1  # noqa: E731
    pr = _prerefine_table(preds)
    reflexive = all(rel(i, i) for i in range(n))
    symmetric = all(rel(y, x) for x in range(n) for y in range(n) if rel(x, y))
    # y ◁ x  =>  some z ◁ y pre-refines x
    pseudo = all(
        any(pr[z][x] for z in range(n) if rel(z, y))
        for x in range(n) for y in range(n) if rel(y, x)
    )
    transitive = all(succs[y] & ~succs[x] == 0 for x in range(n) for y in range(n) if rel(x, y))
    compossible = all(
        any(pr[z][x] and pr[z][y] for z in range(n))
        for x in range(n) for y in range(n) if rel(x, y)
    )
    identity = all(preds[i] == 1 << i for i in range(n))
    return FrameProperties(reflexive, symmetric, pseudo, transitive, compossible, identity)


# --------------------------------------------------------------------------
# enumeration

RELATION_CLASSES = {
    "reflexive": frozenset({"reflexive"}),
    "symmetric": frozenset({"reflexive", "symmetric"}),
    "pseudosymmetric": frozenset({"reflexive", "pseudosymmetric"}),
    "transitive": frozenset({"reflexive", "transitive"}),
    "compossible": frozenset({"reflexive", "symmetric", "compossible"}),
    "identity": frozenset({"identity"}),
    "any": frozenset(),
}


def parse_relation_class(cls: str | Iterable[str]) -> frozenset:
    """``"symmetric"`` (a named class) or ``"reflexive+symmetric"`` (explicit flags)."""
    if isinstance(cls, str):
        if cls in RELATION_CLASSES:
            return RELATION_CLASSES[cls]
        flags = [s.strip() for s in cls.split("+") if s.strip()]
    else:
        flags = list(cls)
    bad = [f for f in flags if f not in PROPERTIES]
    if bad:
        raise ValueError(f"unknown relation properties: {bad}")
    return frozenset(flags)


def enumerate_frames(
    size: int,
    cls: str | Iterable[str] = "any",
    *,
    dedup: bool = True,
    bound: int = ENUM_BOUND,
) -> Iterator[Frame]:
    """All frames on states 0..size-1 whose relation has every property in cls.

    With ``dedup`` only one representative per isomorphism class is yielded
    (the one with the smallest relation code).  Order is deterministic.
    """
    if size < 1:
        raise ValueError("size must be positive")
    if size > bound:
        raise BoundExceeded(f"frame enumeration limited to {bound} states")
    flags = parse_relation_class(cls)
    for code in _class_codes(size, flags, dedup):
        yield frame_from_code(size, code)


def frame_from_code(size: int, code: int) -> Frame:
    rel = {(x, y) for x in range(size) for y in range(size) if code >> (x * size + y) & 1}
    return Frame(tuple(range(size)), rel)


def count_frames(size: int, cls: str | Iterable[str] = "any", *, dedup: bool = True) -> int:
    return len(_class_codes(size, parse_relation_class(cls), dedup))


@lru_cache(maxsize=None)
def _class_codes(size: int, flags: frozenset, dedup: bool) -> tuple[int, ...]:
    n = size
    bit = lambda x, y: x * n + y  # noqa: E731
    if "identity" in flags:
        codes = np.array([sum(1 << bit(i, i) for i in range(n))], dtype=np.int64)
    else:
        diag = sum(1 << bit(i, i) for i in range(n))
        if "reflexive" in flags and "symmetric" in flags:
            free = [(x, y) for x in range(n) for y in range(x + 1, n)]
            width = len(free)
            _check_width(width)
            idx = np.arange(1 << width, dtype=np.int64)
            codes = np.full(idx.shape, diag, dtype=np.int64)
            for b, (x, y) in enumerate(free):
                on = (idx >> b) & 1
                codes |= on << bit(x, y)
                codes |= on << bit(y, x)
        else:
            free = [(x, y) for x in range(n) for y in range(n)
                    if not ("reflexive" in flags and x == y)]
            width = len(free)
            _check_width(width)
            idx = np.arange(1 << width, dtype=np.int64)
            codes = np.full(idx.shape, diag if "reflexive" in flags else 0, dtype=np.int64)
            for b, (x, y) in enumerate(free):
                codes |= ((idx >> b) & 1) << bit(x, y)
        codes = codes[_filter(codes, n, flags)]
    if dedup and n > 1:
        codes = np.unique(_canonical(codes, n))
    else:
        codes = np.sort(codes)
    return tuple(int(c) for c in codes)


def _check_width(width: int) -> None:
    if width > MAX_RELATION_BITS:
        raise BoundExceeded(f"relation space 2^{width} too large to scan")


def _filter(codes: np.ndarray, n: int, flags: frozenset) -> np.ndarray:
    rel = [[(codes >> (x * n + y)) & 1 for y in range(n)] for x in range(n)]
    ok = np.ones(codes.shape, dtype=bool)
    if "reflexive" in flags:
        for i in range(n):
            ok &= rel[i][i] == 1
    if "symmetric" in flags:
        for x in range(n):
            for y in range(x + 1, n):
                ok &= rel[x][y] == rel[y][x]
    preds = [np.zeros(codes.shape, dtype=np.int64) for _ in range(n)]
    succs = [np.zeros(codes.shape, dtype=np.int64) for _ in range(n)]
    for x in range(n):
        for y in range(n):
            preds[y] |= rel[x][y] << x
            succs[x] |= rel[x][y] << y
    if "transitive" in flags:
        for x in range(n):
            for y in range(n):
                ok &= (rel[x][y] == 0) | ((succs[y] & ~succs[x]) == 0)
    if "pseudosymmetric" in flags or "compossible" in flags:
        pr = [[(preds[z] & ~preds[x]) == 0 for x in range(n)] for z in range(n)]
        if "pseudosymmetric" in flags:
            for x in range(n):
                for y in range(n):
                    witness = np.zeros(codes.shape, dtype=bool)
                    for z in range(n):
                        witness |= (rel[z][y] == 1) & pr[z][x]
                    ok &= (rel[y][x] == 0) | witness
        if "compossible" in flags:
            for x in range(n):
                for y in range(n):
                    witness = np.zeros(codes.shape, dtype=bool)
                    for z in range(n):
                        witness |= pr[z][x] & pr[z][y]
                    ok &= (rel[x][y] == 0) | witness
    return ok


def _canonical(codes: np.ndarray, n: int) -> np.ndarray:
    bits = [(codes >> b) & 1 for b in range(n * n)]
    best = codes.copy()
    for perm in itertools.permutations(range(n)):
        out = np.zeros(codes.shape, dtype=np.int64)
        for x in range(n):
            for y in range(n):
                out |= bits[x * n + y] << (perm[x] * n + perm[y])
        np.minimum(best, out, out=best)
    return best
