"""Boolean predicate expressions over subset classes, for the miner.

Grammar (``&`` and ``|`` share one precedence level and associate left)::

    expr := term (('&' | '|') term)*
    term := '!' term | '(' expr ')' | atom
    atom := identifier | 't_star_open' '(' integer ')'
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Union

from finitetop import classes as oc
from finitetop.operators import BiOperatorSpace, is_B_closed, is_B_dense, is_B_open, is_T_star_open

ATOMS: dict[str, Callable[[BiOperatorSpace, int], bool]] = {
    "open": lambda sp, s: sp.topology.is_open(s),
    "closed": lambda sp, s: sp.topology.is_closed(s),
    "regular_open": lambda sp, s: oc.is_regular_open(sp.topology, s),
    "regular_closed": lambda sp, s: oc.is_regular_closed(sp.topology, s),
    "pre_open": lambda sp, s: oc.is_pre_open(sp.topology, s),
    "semi_open": lambda sp, s: oc.is_semi_open(sp.topology, s),
    "alpha_open": lambda sp, s: oc.is_alpha_open(sp.topology, s),
    "beta_open": lambda sp, s: oc.is_beta_open(sp.topology, s),
    "b_open": lambda sp, s: oc.is_b_open(sp.topology, s),
    "B_open": is_B_open,
    "B_closed": is_B_closed,
    "B_dense": is_B_dense,
}
INDEXED_ATOMS = ("t_star_open",)


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"ParseError at position {position}: {message}")


class UnknownAtom(ParseError):
    pass


@dataclass(frozen=True)
class Atom:
    name: str
    arg: int | None = None

    def __str__(self) -> str:
        return self.name if self.arg is None else f"{self.name}({self.arg})"


@dataclass(frozen=True)
class Not:
    operand: "Expr"

    def __str__(self) -> str:
        return f"!{self.operand}"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"

    def __str__(self) -> str:
        return f"({self.left} {self.op} {self.right})"


Expr = Union[Atom, Not, BinOp]

_TOKEN = re.compile(r"\s*(?:(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<int>\d+)|(?P<sym>[&|!()]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens, pos = [], 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", bad)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


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

    def expect(self, value: str) -> None:
        kind, val, pos = self.take()
        if val != value or kind == "end":
            raise ParseError(f"expected {value!r}, found {val or 'end of input'!r}", pos)

    def expr(self) -> Expr:
        node = self.term()
        while self.peek()[1] in ("&", "|") and self.peek()[0] == "sym":
            op = self.take()[1]
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Expr:
        kind, val, pos = self.take()
        if kind == "sym" and val == "!":
            return Not(self.term())
        if kind == "sym" and val == "(":
            node = self.expr()
            self.expect(")")
            return node
        if kind == "ident":
            if val in INDEXED_ATOMS:
                self.expect("(")
                k, num, npos = self.take()
                if k != "int":
                    raise ParseError(f"expected operator index, found {num or 'end of input'!r}", npos)
                self.expect(")")
                if int(num) < 1:
                    raise ParseError("operator index must be at least 1", npos)
                return Atom(val, int(num))
            if val not in ATOMS:
                raise UnknownAtom(f"unknown atom {val!r}; valid atoms are {', '.join(sorted(ATOMS) + ['t_star_open(i)'])}", pos)
            return Atom(val)
        raise ParseError(f"expected an atom, '!' or '(', found {val or 'end of input'!r}", pos)


def parse(text: str) -> Expr:
    p = _Parser(text)
    node = p.expr()
    kind, val, pos = p.peek()
    if kind != "end":
        raise ParseError(f"unexpected {val!r}", pos)
    return node


def evaluate(expr: Expr, space: BiOperatorSpace, s: int) -> bool:
    if isinstance(expr, Atom):
        if expr.arg is not None:
            return is_T_star_open(space, expr.arg - 1, s)
        return ATOMS[expr.name](space, s)
    if isinstance(expr, Not):
        return not evaluate(expr.operand, space, s)
    if expr.op == "&":
        return evaluate(expr.left, space, s) and evaluate(expr.right, space, s)
    return evaluate(expr.left, space, s) or evaluate(expr.right, space, s)


def max_operator_index(expr: Expr) -> int:
    if isinstance(expr, Atom):
        return expr.arg or 0
    if isinstance(expr, Not):
        return max_operator_index(expr.operand)
    return max(max_operator_index(expr.left), max_operator_index(expr.right))
