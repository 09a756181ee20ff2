"""A tiny expression language naming graph families.

Grammar (whitespace allowed between tokens)::

    expr   := atom | OP "(" expr "," expr ")"
    OP     := "join" | "corona"
    atom   := "P(" int ")" | "C(" int ")" | "K(" int ")" | "E(" int ")"
            | "Kbip(" int "," int ")" | "GNP(" int "," float "," int ")"

``E(n)`` is the edgeless graph on n vertices.  Parsing is a hand-written
recursive descent; errors report the 0-based offset and the expected tokens.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from . import graphs
from .graphs import Graph, GraphError

ATOM_ARITY = {"P": 1, "C": 1, "K": 1, "E": 1, "Kbip": 2, "GNP": 3}
OPERATORS = ("join", "corona")


class FamilyParseError(ValueError):
    def __init__(self, offset: int, expected: set[str], found: str):
        self.offset = offset
        self.expected = frozenset(expected)
        self.found = found
        want = ", ".join(sorted(repr(e) for e in expected))
        super().__init__(f"at offset {offset}: expected one of {want}, found {found!r}")


@dataclass(frozen=True)
class Atom:
    kind: str
    params: tuple[Union[int, float], ...]

    def __str__(self) -> str:
        return f"{self.kind}({','.join(_fmt(p) for p in self.params)})"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "FamilyExpr"
    right: "FamilyExpr"

    def __str__(self) -> str:
        return f"{self.op}({self.left},{self.right})"


FamilyExpr = Union[Atom, BinOp]


def _fmt(x: Union[int, float]) -> str:
    return repr(x) if isinstance(x, float) else str(x)


_TOKEN = re.compile(
    r"\s*(?:(?P<name>[A-Za-z]+)|(?P<num>[0-9]*\.[0-9]+(?:[eE][-+]?[0-9]+)?|[0-9]+)|(?P<punct>[(),]))"
)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> tuple[str, str, int]:
        """(kind, value, start offset) of the next token; kind 'eof' at the end."""
        self._skip_ws()
        if self.pos >= len(self.text):
            return "eof", "", self.pos
        m = _TOKEN.match(self.text, self.pos)
        if not m or m.end() == self.pos:
            return "bad", self.text[self.pos], self.pos
        kind = m.lastgroup
        return kind, m.group(kind), self.pos

    def _advance(self) -> str:
        m = _TOKEN.match(self.text, self.pos)
        self.pos = m.end()
        return m.group(m.lastgroup)

    def _fail(self, expected: set[str]):
        kind, value, at = self._peek()
        raise FamilyParseError(at, expected, "end of input" if kind == "eof" else value)

    def expect(self, punct: str) -> None:
        kind, value, _ = self._peek()
        if kind != "punct" or value != punct:
            self._fail({punct})
        self._advance()

    def number(self, integer: bool) -> Union[int, float]:
        kind, value, _ = self._peek()
        if kind != "num" or (integer and not value.isdigit()):
            self._fail({"integer" if integer else "number"})
        self._advance()
        return int(value) if integer else float(value)

    def expr(self) -> FamilyExpr:
        kind, value, _ = self._peek()
        heads = set(ATOM_ARITY) | set(OPERATORS)
        if kind != "name" or value not in heads:
            self._fail(heads)
        self._advance()
        self.expect("(")
        if value in OPERATORS:
            left = self.expr()
            self.expect(",")
            right = self.expr()
            self.expect(")")
            return BinOp(value, left, right)
        params: list[Union[int, float]] = []
        for j in range(ATOM_ARITY[value]):
            if j:
                self.expect(",")
            params.append(self.number(integer=not (value == "GNP" and j == 1)))
        self.expect(")")
        return Atom(value, tuple(params))


def parse_family(text: str) -> FamilyExpr:
    """Parse a family expression; parameter ranges are checked here too."""
    parser = _Parser(text)
    tree = parser.expr()
    kind, _, _ = parser._peek()
    if kind != "eof":
        parser._fail({"end of input"})
    _check_params(tree)
    return tree


def _check_params(e: FamilyExpr) -> None:
    if isinstance(e, BinOp):
        _check_params(e.left)
        _check_params(e.right)
        return
    sizes = e.params[:1] if e.kind == "GNP" else e.params
    if any(p < 1 for p in sizes):
        raise GraphError(f"{e}: sizes must be >= 1")
    if e.kind == "C" and e.params[0] < 3:
        raise GraphError(f"{e}: a cycle needs at least 3 vertices")
    if e.kind == "GNP" and not 0.0 < e.params[1] < 1.0:
        raise GraphError(f"{e}: edge probability must lie in (0, 1)")


def build(e: FamilyExpr) -> Graph:
    if isinstance(e, BinOp):
        op = graphs.join if e.op == "join" else graphs.corona
        return op(build(e.left), build(e.right))
    a = e.params
    if e.kind == "P":
        return graphs.path(a[0])
    if e.kind == "C":
        return graphs.cycle(a[0])
    if e.kind == "K":
        return graphs.complete(a[0])
    if e.kind == "E":
        return graphs.empty(a[0])
    if e.kind == "Kbip":
        return graphs.complete_bipartite(a[0], a[1])
    return graphs.gnp(a[0], a[1], a[2])


def build_family(text: str) -> Graph:
    return build(parse_family(text))
