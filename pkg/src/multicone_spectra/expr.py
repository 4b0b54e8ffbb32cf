"""A small expression language for building graphs.

Grammar (whitespace is ignored)::

    expr  := join ('+' join)*              disjoint union, loosest
    join  := term (('v' | '∇') term)*      join, left-associative
    term  := [int ['*']] atom              k copies
    atom  := 'K' int | 'C' int | 'P' int | 'E' int | 'F' int
           | 'K{' int (',' int)* '}'       complete multipartite
           | 'M(' int ',' int ',' int ')'  multicone K_r v sK_t
           | '~' atom                      complement
           | '(' expr ')'

``K2 v 3*K3`` is the multicone of the figure-2 style, ``C4 + K1`` a
four-cycle plus an isolated vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union as _U

from . import graph as gr
from .errors import CapacityError, ExpressionSyntaxError
from .graph import MAX_ORDER, Graph


@dataclass(frozen=True)
class Complete:
    n: int


@dataclass(frozen=True)
class Cycle:
    n: int


@dataclass(frozen=True)
class Path:
    n: int


@dataclass(frozen=True)
class Empty:
    n: int


@dataclass(frozen=True)
class CompleteMultipartite:
    parts: tuple[int, ...]


@dataclass(frozen=True)
class Multicone:
    r: int
    s: int
    t: int


@dataclass(frozen=True)
class Friendship:
    s: int


@dataclass(frozen=True)
class Union:
    children: tuple["GraphExpr", ...]


@dataclass(frozen=True)
class Join:
    left: "GraphExpr"
    right: "GraphExpr"


@dataclass(frozen=True)
class Complement:
    child: "GraphExpr"


@dataclass(frozen=True)
class Copies:
    k: int
    child: "GraphExpr"


GraphExpr = _U[Complete, Cycle, Path, Empty, CompleteMultipartite, Multicone,
               Friendship, Union, Join, Complement, Copies]


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str, pos: int | None = None):
        raise ExpressionSyntaxError(msg, self.pos if pos is None else pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            found = self.peek() or "end of input"
            self.error(f"expected {ch!r}, found {found!r}")
        self.pos += 1

    def integer(self, minimum: int = 1) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected an integer")
        value = int(self.text[start:self.pos])
        if value < minimum:
            self.error(f"size parameter must be >= {minimum}", start)
        return value

    def parse(self) -> GraphExpr:
        if not self.text.strip():
            self.error("empty expression", 0)
        e = self.expr()
        if self.peek():
            self.error(f"unexpected {self.peek()!r}")
        return e

    def expr(self) -> GraphExpr:
        parts = [self.join()]
        while self.peek() == "+":
            self.pos += 1
            parts.append(self.join())
        return parts[0] if len(parts) == 1 else Union(tuple(parts))

    def join(self) -> GraphExpr:
        left = self.term()
        while self.peek() in ("v", "∇"):
            self.pos += 1
            left = Join(left, self.term())
        return left

    def term(self) -> GraphExpr:
        if self.peek().isdigit():
            k = self.integer()
            if self.peek() == "*":
                self.pos += 1
            return Copies(k, self.atom())
        return self.atom()

    def atom(self) -> GraphExpr:
        ch = self.peek()
        start = self.pos
        if ch == "(":
            self.pos += 1
            e = self.expr()
            self.expect(")")
            return e
        if ch == "~":
            self.pos += 1
            return Complement(self.atom())
        if ch == "K":
            self.pos += 1
            if self.peek() == "{":
                self.pos += 1
                parts = [self.integer()]
                while self.peek() == ",":
                    self.pos += 1
                    parts.append(self.integer())
                self.expect("}")
                return CompleteMultipartite(tuple(parts))
            return Complete(self.integer())
        if ch == "C":
            self.pos += 1
            self.skip()
            at = self.pos
            n = self.integer()
            if n < 3:
                self.error("a cycle needs at least 3 vertices", at)
            return Cycle(n)
        if ch == "P":
            self.pos += 1
            return Path(self.integer())
        if ch == "E":
            self.pos += 1
            return Empty(self.integer())
        if ch == "F":
            self.pos += 1
            return Friendship(self.integer())
        if ch == "M":
            self.pos += 1
            self.expect("(")
            r = self.integer()
            self.expect(",")
            s = self.integer()
            self.expect(",")
            t = self.integer()
            self.expect(")")
            return Multicone(r, s, t)
        if not ch:
            self.error("unexpected end of input")
        self.error(f"unexpected {ch!r}", start)


def parse_graph_expression(text: str) -> GraphExpr:
    return _Parser(text).parse()


def order(e: GraphExpr) -> int:
    """Order of the graph ``e`` denotes, without building it."""
    if isinstance(e, (Complete, Cycle, Path, Empty)):
        return e.n
    if isinstance(e, CompleteMultipartite):
        return sum(e.parts)
    if isinstance(e, Multicone):
        return e.r + e.s * e.t
    if isinstance(e, Friendship):
        return 1 + 2 * e.s
    if isinstance(e, Union):
        return sum(order(c) for c in e.children)
    if isinstance(e, Join):
        return order(e.left) + order(e.right)
    if isinstance(e, Complement):
        return order(e.child)
    if isinstance(e, Copies):
        return e.k * order(e.child)
    raise TypeError(f"not a graph expression: {e!r}")


def evaluate_expression(e: GraphExpr, max_order: int = MAX_ORDER) -> Graph:
    n = order(e)
    if n > max_order:
        raise CapacityError(f"expression has order {n}, capacity is {max_order}")
    return _eval(e)


def _eval(e: GraphExpr) -> Graph:
    if isinstance(e, Complete):
        return gr.complete(e.n)
    if isinstance(e, Cycle):
        return gr.cycle(e.n)
    if isinstance(e, Path):
        return gr.path(e.n)
    if isinstance(e, Empty):
        return gr.empty(e.n)
    if isinstance(e, CompleteMultipartite):
        return gr.complete_multipartite(e.parts)
    if isinstance(e, Multicone):
        return gr.multicone(e.r, e.s, e.t)
    if isinstance(e, Friendship):
        return gr.friendship(e.s)
    if isinstance(e, Union):
        return gr.disjoint_union(*(_eval(c) for c in e.children))
    if isinstance(e, Join):
        return gr.join(_eval(e.left), _eval(e.right))
    if isinstance(e, Complement):
        return _eval(e.child).complement()
    if isinstance(e, Copies):
        return gr.copies(e.k, _eval(e.child))
    raise TypeError(f"not a graph expression: {e!r}")


def to_text(e: GraphExpr) -> str:
    """Render back into the expression language (re-parses to ``e``)."""
    if isinstance(e, Complete):
        return f"K{e.n}"
    if isinstance(e, Cycle):
        return f"C{e.n}"
    if isinstance(e, Path):
        return f"P{e.n}"
    if isinstance(e, Empty):
        return f"E{e.n}"
    if isinstance(e, CompleteMultipartite):
        return "K{" + ",".join(map(str, e.parts)) + "}"
    if isinstance(e, Multicone):
        return f"M({e.r},{e.s},{e.t})"
    if isinstance(e, Friendship):
        return f"F{e.s}"
    if isinstance(e, Union):
        return " + ".join(_wrap(c, Union) for c in e.children)
    if isinstance(e, Join):
        right = to_text(e.right)
        if isinstance(e.right, (Union, Join)):
            right = f"({right})"
        return f"{_wrap(e.left, Union)} v {right}"
    if isinstance(e, Complement):
        return "~" + _wrap(e.child, (Union, Join, Copies))
    if isinstance(e, Copies):
        return f"{e.k}*" + _wrap(e.child, (Union, Join, Copies))
    raise TypeError(f"not a graph expression: {e!r}")


def _wrap(e: GraphExpr, loose) -> str:
    s = to_text(e)
    return f"({s})" if isinstance(e, loose) else s


def graph_from_expression(text: str, max_order: int = MAX_ORDER) -> Graph:
    return evaluate_expression(parse_graph_expression(text), max_order)
