"""Formulas over ~, &, | and the textual syntax used everywhere else.

Grammar (precedence ~ > & > |, binary operators left-associative)::

    disj := conj ('|' conj)*
    conj := unary ('&' unary)*
    unary := ('~' | '!') unary | atom
    atom := IDENT | '(' disj ')'

A sequent is written ``PHI |- PSI``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce
from typing import Iterator

BOTTOM_VAR = "_bot"


class Formula:
    """Base class; use Var, Neg, And, Or."""

    __slots__ = ()

    def __invert__(self) -> "Neg":
        return Neg(self)

    def __and__(self, other: "Formula") -> "And":
        return And(self, other)

    def __or__(self, other: "Formula") -> "Or":
        return Or(self, other)

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True, repr=False)
class Var(Formula):
    name: str

    def __repr__(self) -> str:
        return f"Var({self.name!r})"


@dataclass(frozen=True, repr=False)
class Neg(Formula):
    child: Formula

    def __repr__(self) -> str:
        return f"Neg({self.child!r})"


@dataclass(frozen=True, repr=False)
class And(Formula):
    left: Formula
    right: Formula

    def __repr__(self) -> str:
        return f"And({self.left!r}, {self.right!r})"


@dataclass(frozen=True, repr=False)
class Or(Formula):
    left: Formula
    right: Formula

    def __repr__(self) -> str:
        return f"Or({self.left!r}, {self.right!r})"


@dataclass(frozen=True)
class Sequent:
    lhs: Formula
    rhs: Formula

    def __str__(self) -> str:
        return f"{to_text(self.lhs)} |- {to_text(self.rhs)}"


@dataclass(frozen=True)
class SoritesParams:
    n: int
    delta: int

    def __post_init__(self) -> None:
        if not (isinstance(self.n, int) and isinstance(self.delta, int)):
            raise TypeError("n and delta must be integers")
        if not 1 <= self.delta < self.n - 1:
            raise ValueError(f"need 1 <= delta < n-1, got n={self.n}, delta={self.delta}")


def bottom(var: str = BOTTOM_VAR) -> And:
    """The canonical contradiction ``v & ~v``."""
    v = Var(var)
    return And(v, Neg(v))


def is_contradiction_shape(f: Formula) -> bool:
    return isinstance(f, And) and f.right == Neg(f.left)


# --------------------------------------------------------------------------
# parsing

class ParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at byte {offset}")
        self.offset = offset


_TOKEN = re.compile(r"\s*(?:(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>\|-|[~!&|()]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[start]!r}", _byte_offset(text, start))
        kind = "ident" if m.group("ident") else "op"
        value = m.group(kind)
        tokens.append((kind, value, _byte_offset(text, m.start(kind))))
        pos = m.end()
    tokens.append(("eof", "", _byte_offset(text, len(text))))
    return tokens


def _byte_offset(text: str, index: int) -> int:
    return len(text[:index].encode("utf-8"))


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def take(self) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_end(self) -> None:
        kind, value, offset = self.peek()
        if kind != "eof":
            raise ParseError(f"unexpected token {value!r}", offset)

    def disj(self) -> Formula:
        f = self.conj()
        while self.peek()[1] == "|":
            self.take()
            f = Or(f, self.conj())
        return f

    def conj(self) -> Formula:
        f = self.unary()
        while self.peek()[1] == "&":
            self.take()
            f = And(f, self.unary())
        return f

    def unary(self) -> Formula:
        if self.peek()[1] in ("~", "!"):
            self.take()
            return Neg(self.unary())
        return self.atom()

    def atom(self) -> Formula:
        kind, value, offset = self.take()
        if kind == "ident":
            return Var(value)
        if value == "(":
            f = self.disj()
            kind, value, offset = self.take()
            if value != ")":
                raise ParseError("expected ')'", offset)
            return f
        if kind == "eof":
            raise ParseError("unexpected end of input", offset)
        raise ParseError(f"unexpected token {value!r}", offset)


def parse(text: str) -> Formula:
    if not text or not text.strip():
        raise ParseError("empty formula", 0)
    p = _Parser(text)
    f = p.disj()
    p.expect_end()
    return f


def parse_sequent(text: str) -> Sequent:
    if "|-" not in text:
        raise ParseError("sequent needs '|-'", _byte_offset(text, len(text)))
    idx = text.index("|-")
    lhs_text, rhs_text = text[:idx], text[idx + 2:]
    try:
        lhs = parse(lhs_text)
    except ParseError as e:
        raise ParseError(str(e).rsplit(" at byte", 1)[0], e.offset) from None
    try:
        rhs = parse(rhs_text)
    except ParseError as e:
        shift = _byte_offset(text, idx + 2)
        raise ParseError(str(e).rsplit(" at byte", 1)[0], e.offset + shift) from None
    return Sequent(lhs, rhs)


# --------------------------------------------------------------------------
# printing

_PREC = {Or: 1, And: 2, Neg: 3, Var: 4}


def to_text(f: Formula) -> str:
    """Render with the fewest parentheses that still parse back to ``f``."""
    if isinstance(f, Var):
        return f.name
    if isinstance(f, Neg):
        inner = to_text(f.child)
        return "~" + (inner if _PREC[type(f.child)] >= 3 else f"({inner})")
    op = " & " if isinstance(f, And) else " | "
    prec = _PREC[type(f)]
    left = to_text(f.left)
    if _PREC[type(f.left)] < prec:
        left = f"({left})"
    right = to_text(f.right)
    # right operand of the same operator needs parens (left associativity)
    if _PREC[type(f.right)] <= prec:
        right = f"({right})"
    return left + op + right


# --------------------------------------------------------------------------
# structure

def iter_subformulas(f: Formula) -> Iterator[Formula]:
    """Post-order walk, children before parents; may repeat shared subtrees."""
    stack: list[tuple[Formula, bool]] = [(f, False)]
    while stack:
        g, expanded = stack.pop()
        if expanded or isinstance(g, Var):
            yield g
            continue
        stack.append((g, True))
        if isinstance(g, Neg):
            stack.append((g.child, False))
        else:
            stack.append((g.right, False))
            stack.append((g.left, False))


def subformulas(f: Formula) -> set[Formula]:
    return set(iter_subformulas(f))


def variables(f: Formula) -> set[str]:
    return {g.name for g in iter_subformulas(f) if isinstance(g, Var)}


def size(f: Formula) -> int:
    return sum(1 for _ in iter_subformulas(f))


def depth(f: Formula) -> int:
    if isinstance(f, Var):
        return 0
    if isinstance(f, Neg):
        return 1 + depth(f.child)
    return 1 + max(depth(f.left), depth(f.right))


def has_or(f: Formula) -> bool:
    return any(isinstance(g, Or) for g in iter_subformulas(f))


def negs(f: Formula, k: int) -> Formula:
    for _ in range(k):
        f = Neg(f)
    return f


def conj(fs: list[Formula]) -> Formula:
    """Left-nested conjunction of a nonempty list."""
    if not fs:
        raise ValueError("empty conjunction")
    return reduce(And, fs)


def disj(fs: list[Formula]) -> Formula:
    if not fs:
        raise ValueError("empty disjunction")
    return reduce(Or, fs)


def conjuncts(f: Formula) -> list[Formula]:
    """Flatten the left spine of a left-nested conjunction."""
    out = []
    while isinstance(f, And):
        out.append(f.right)
        f = f.left
    out.append(f)
    return out[::-1]


# --------------------------------------------------------------------------
# Sorites formula and double-negation translation

def p(k: int) -> Var:
    return Var(f"p{k}")


def sorites_formula(params: SoritesParams) -> Formula:
    """Extremes plus every no-sharp-cutoff conjunct with slack up to delta."""
    n, delta = params.n, params.delta
    parts: list[Formula] = [p(0), Neg(p(n - 1))]
    for k in range(n - 1):
        for ell in range(1, delta + 1):
            if k + ell <= n - 1:
                parts.append(Neg(And(p(k), Neg(p(k + ell)))))
    return conj(parts)


def godel_gentzen(f: Formula) -> Formula:
    if isinstance(f, Var):
        return Neg(Neg(f))
    if isinstance(f, Neg):
        return Neg(godel_gentzen(f.child))
    if isinstance(f, And):
        return And(godel_gentzen(f.left), godel_gentzen(f.right))
    return Neg(And(Neg(godel_gentzen(f.left)), Neg(godel_gentzen(f.right))))
