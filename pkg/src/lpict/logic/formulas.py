"""Propositional formulas: syntax, parsing, printing, evaluation.

Concrete grammar: atoms are identifiers, `false` is falsum, `!` negates,
`&` and `|` are conjunction/disjunction, `->` is right-associative
implication. Precedence: ! > & > | > ->.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping, Union

from ..errors import LpictError, ParseError


@dataclass(frozen=True)
class Atom:
    name: str


@dataclass(frozen=True)
class Not:
    operand: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Falsum:
    pass


Formula = Union[Atom, Not, And, Or, Implies, Falsum]

FALSUM = Falsum()

Valuation = Mapping[str, bool]


class MissingAtomError(LpictError):
    """The valuation does not cover an atom of the formula."""


def atoms(f: Formula) -> frozenset[str]:
    if isinstance(f, Atom):
        return frozenset({f.name})
    if isinstance(f, Falsum):
        return frozenset()
    if isinstance(f, Not):
        return atoms(f.operand)
    return atoms(f.left) | atoms(f.right)


def eval_formula(f: Formula, valuation: Valuation) -> bool:
    """Classical truth-table semantics; falsum is false everywhere."""
    if isinstance(f, Atom):
        try:
            return bool(valuation[f.name])
        except KeyError:
            raise MissingAtomError(f"valuation does not assign atom {f.name!r}") from None
    if isinstance(f, Falsum):
        return False
    if isinstance(f, Not):
        return not eval_formula(f.operand, valuation)
    if isinstance(f, And):
        return eval_formula(f.left, valuation) and eval_formula(f.right, valuation)
    if isinstance(f, Or):
        return eval_formula(f.left, valuation) or eval_formula(f.right, valuation)
    if isinstance(f, Implies):
        return (not eval_formula(f.left, valuation)) or eval_formula(f.right, valuation)
    raise TypeError(f"not a formula: {f!r}")


_TOKEN_RE = re.compile(r"\s*(?:([A-Za-z_][A-Za-z0-9_]*)|(->)|([!&|()]))")


def _tokenize(source: str):
    tokens = []
    pos = 0
    while pos < len(source):
        m = _TOKEN_RE.match(source, pos)
        if m is None or m.end() == pos:
            rest = source[pos:].lstrip()
            if not rest:
                break
            raise ParseError(f"unexpected character {rest[0]!r}", position=len(source) - len(rest))
        if m.group(1):
            kind = "false" if m.group(1) == "false" else "atom"
            tokens.append((kind, m.group(1), m.start(1)))
        elif m.group(2):
            tokens.append(("->", "->", m.start(2)))
        else:
            tokens.append((m.group(3), m.group(3), m.start(3)))
        pos = m.end()
    tokens.append(("eof", "", len(source)))
    return tokens


class _FormulaParser:
    def __init__(self, source: str):
        self.tokens = _tokenize(source)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def parse(self) -> Formula:
        f = self.implication()
        kind, value, at = self.peek()
        if kind != "eof":
            raise ParseError(f"trailing input starting at {value!r}", position=at)
        return f

    def implication(self) -> Formula:
        left = self.disjunction()
        if self.peek()[0] == "->":
            self.next()
            return Implies(left, self.implication())
        return left

    def disjunction(self) -> Formula:
        f = self.conjunction()
        while self.peek()[0] == "|":
            self.next()
            f = Or(f, self.conjunction())
        return f

    def conjunction(self) -> Formula:
        f = self.unary()
        while self.peek()[0] == "&":
            self.next()
            f = And(f, self.unary())
        return f

    def unary(self) -> Formula:
        kind, value, at = self.peek()
        if kind == "!":
            self.next()
            return Not(self.unary())
        if kind == "(":
            self.next()
            f = self.implication()
            tok = self.next()
            if tok[0] != ")":
                raise ParseError("expected ')'", position=tok[2])
            return f
        if kind == "false":
            self.next()
            return FALSUM
        if kind == "atom":
            self.next()
            return Atom(value)
        raise ParseError(f"expected a formula, found {value or 'end of input'!r}", position=at)


def parse_formula(source: str) -> Formula:
    return _FormulaParser(source).parse()


_PREC = {Implies: 1, Or: 2, And: 3, Not: 4}


def format_formula(f: Formula) -> str:
    return _fmt(f, 0)


def _fmt(f: Formula, parent: int) -> str:
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Falsum):
        return "false"
    if isinstance(f, Not):
        return f"!{_fmt(f.operand, _PREC[Not])}"
    prec = _PREC[type(f)]
    if isinstance(f, Implies):
        # right-associative: left side needs the tighter context
        out = f"{_fmt(f.left, prec + 1)} -> {_fmt(f.right, prec)}"
    elif isinstance(f, Or):
        out = f"{_fmt(f.left, prec)} | {_fmt(f.right, prec + 1)}"
    else:
        out = f"{_fmt(f.left, prec)} & {_fmt(f.right, prec + 1)}"
    return f"({out})" if prec < parent else out
