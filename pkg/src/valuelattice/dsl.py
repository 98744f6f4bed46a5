"""The ``.vdl`` scenario language: parser and canonical serializer.

Grammar::

    doc       := (dim_decl | state_decl | query)*
    dim_decl  := "dim" NAME "=" expr
    expr      := "base" "{" NAME ("," NAME)* "}" order?
               | "power" "(" expr ")"
               | ("product" | "disjoint" | "union") "(" expr ("," expr)* ")"
               | "atoms" "(" NAME ("," NAME)* ")"
               | NAME                                  # an earlier dim
    order     := "order" "{" NAME "<" NAME ("," NAME "<" NAME)* "}"
    state_decl:= "state" NAME "=" "{" [NAME ":" value ("," NAME ":" value)*] "}"
    value     := NAME | "{" [value ("," value)*] "}" | "(" value ("," value)* ")"
    query     := "compare" NAME NAME | "compose" NAME NAME
               | "incompat" NAME "." NAME "@" value NAME
               | "meta" NAME | "iota" NAME | "hasse" NAME | "run" NAME

``#`` starts a comment running to the end of the line. Keywords are
contextual, so they stay usable as element names.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterator, Union

from .errors import DuplicateName, ParseError, UnknownName
from .value_model import (
    Base,
    DisjointUnion,
    ElementsAsAtoms,
    Power,
    Product,
    SpecExpr,
    UnionAsSets,
)

SCENARIO_NAMES = ("ellsberg", "fossowamba", "wigner")
QUERY_KINDS = ("compare", "compose", "incompat", "meta", "iota", "hasse", "run")

_CALLS = {"power": Power, "product": Product, "disjoint": DisjointUnion, "union": UnionAsSets}
_CALL_NAMES = {v: k for k, v in _CALLS.items()}

Value = Union[str, frozenset, tuple]


@dataclass(frozen=True)
class Ref:
    """A reference to a previously declared dimension."""

    name: str


@dataclass(frozen=True)
class DimDecl:
    name: str
    expr: SpecExpr
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class StateDecl:
    name: str
    assign: tuple[tuple[str, Value], ...]
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Query:
    kind: str
    args: tuple
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class ScenarioDoc:
    dims: tuple[DimDecl, ...] = ()
    states: tuple[StateDecl, ...] = ()
    queries: tuple[Query, ...] = ()


# -- lexer -------------------------------------------------------------------

_TOKEN = re.compile(r"\s+|#[^\n]*|(?P<name>[A-Za-z0-9_]+)|(?P<punct>[{}()=,:.@<])")


@dataclass(frozen=True)
class Token:
    kind: str  # "name", "punct" or "eof"
    text: str
    line: int
    column: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(line, pos - line_start + 1, "a name or punctuation", text[pos])
        if m.lastgroup:
            tokens.append(Token(m.lastgroup, m.group(), line, pos - line_start + 1))
        chunk = m.group()
        newlines = chunk.count("\n")
        if newlines:
            line += newlines
            line_start = pos + chunk.rindex("\n") + 1
        pos = m.end()
    if tokens:
        # an unexpected end of input is reported at the last token, the construct left open
        last = tokens[-1]
        tokens.append(Token("eof", "", last.line, last.column))
    else:
        tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


# -- parser ------------------------------------------------------------------

class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def peek(self, k: int = 1) -> Token:
        return self.tokens[min(self.pos + k, len(self.tokens) - 1)]

    def fail(self, expected: str):
        t = self.tok
        raise ParseError(t.line, t.column, expected, t.text if t.kind != "eof" else "end of input")

    def at(self, text: str) -> bool:
        return self.tok.kind != "eof" and self.tok.text == text

    def expect(self, text: str) -> Token:
        if not self.at(text):
            self.fail(repr(text))
        t = self.tok
        self.pos += 1
        return t

    def name(self, what: str = "a name") -> str:
        if self.tok.kind != "name":
            self.fail(what)
        t = self.tok
        self.pos += 1
        return t.text

    def separated(self, item, close: str, allow_empty: bool = False) -> list:
        out = []
        if allow_empty and self.at(close):
            self.pos += 1
            return out
        out.append(item())
        while self.at(","):
            self.pos += 1
            out.append(item())
        self.expect(close)
        return out

    # statements

    def document(self) -> tuple[list[DimDecl], list[StateDecl], list[Query]]:
        dims, states, queries = [], [], []
        while self.tok.kind != "eof":
            line = self.tok.line
            if self.at("dim"):
                self.pos += 1
                name = self.name("a dimension name")
                self.expect("=")
                dims.append(DimDecl(name, self.expr(), line))
            elif self.at("state"):
                self.pos += 1
                name = self.name("a state name")
                self.expect("=")
                self.expect("{")
                assign = self.separated(self.binding, "}", allow_empty=True)
                states.append(StateDecl(name, tuple(assign), line))
            elif self.tok.kind == "name" and self.tok.text in QUERY_KINDS:
                queries.append(self.query(line))
            else:
                self.fail("'dim', 'state' or a query")
        return dims, states, queries

    def binding(self) -> tuple[str, Value]:
        dim = self.name("a dimension name")
        self.expect(":")
        return dim, self.value()

    def query(self, line: int) -> Query:
        kind = self.name()
        if kind in ("compare", "compose"):
            args = (self.name("a state name"), self.name("a state name"))
        elif kind == "incompat":
            k_a = self.name("a state name")
            self.expect(".")
            dim = self.name("a dimension name")
            self.expect("@")
            value = self.value()
            args = (k_a, dim, value, self.name("a state name"))
        elif kind == "meta":
            args = (self.name("a state name"),)
        elif kind in ("iota", "hasse"):
            args = (self.name("a dimension name"),)
        else:
            args = (self.name("a scenario name"),)
        return Query(kind, args, line)

    def value(self) -> Value:
        if self.at("{"):
            self.pos += 1
            return frozenset(self.separated(self.value, "}", allow_empty=True))
        if self.at("("):
            self.pos += 1
            return tuple(self.separated(self.value, ")"))
        return self.name("a value")

    def expr(self) -> SpecExpr:
        if self.at("base") and self.peek().text == "{":
            self.pos += 2
            elements = self.separated(self.name, "}")
            order = []
            if self.at("order") and self.peek().text == "{":
                self.pos += 2
                order = self.separated(self.order_pair, "}")
            return Base("", tuple(sorted(set(elements))), tuple(sorted(set(order))))
        if self.tok.kind == "name" and self.peek().text == "(":
            head = self.tok.text
            if head == "atoms":
                self.pos += 2
                return ElementsAsAtoms(tuple(sorted(self.separated(self.name, ")"))))
            if head in _CALLS:
                self.pos += 2
                args = self.separated(self.expr, ")")
                if head == "power":
                    if len(args) != 1:
                        self.fail("exactly one argument to power")
                    return Power(args[0])
                return _CALLS[head](tuple(args))
            self.fail("'base', 'power', 'product', 'disjoint', 'union', 'atoms' or a dimension name")
        if self.tok.kind == "name":
            return Ref(self.name())
        self.fail("a dimension expression")

    def order_pair(self) -> tuple[str, str]:
        lo = self.name()
        self.expect("<")
        return lo, self.name()


def parse(text: str) -> ScenarioDoc:
    """Parse and validate names. Raises ParseError, DuplicateName or UnknownName."""
    dims, states, queries = _Parser(text).document()
    doc = ScenarioDoc(tuple(dims), tuple(states), tuple(queries))
    validate(doc)
    return doc


def _refs(e) -> Iterator[str]:
    if isinstance(e, Ref):
        yield e.name
    elif isinstance(e, Power):
        yield from _refs(e.inner)
    elif isinstance(e, Product):
        for f in e.factors:
            yield from _refs(f)
    elif isinstance(e, (DisjointUnion, UnionAsSets)):
        for p in e.parts:
            yield from _refs(p)


def validate(doc: ScenarioDoc) -> None:
    dims: set[str] = set()
    for d in doc.dims:
        if d.name in dims:
            raise DuplicateName(f"line {d.line}: dimension {d.name!r} declared twice")
        for r in _refs(d.expr):
            if r not in dims:
                raise UnknownName(f"line {d.line}: {r!r} is not a previously declared dimension")
        dims.add(d.name)
    states: set[str] = set()
    for s in doc.states:
        if s.name in states:
            raise DuplicateName(f"line {s.line}: state {s.name!r} declared twice")
        seen = set()
        for dim, _ in s.assign:
            if dim not in dims:
                raise UnknownName(f"line {s.line}: unknown dimension {dim!r}")
            if dim in seen:
                raise DuplicateName(f"line {s.line}: {dim!r} assigned twice in state {s.name!r}")
            seen.add(dim)
        states.add(s.name)

    def need(name, pool, what, line):
        if name not in pool:
            raise UnknownName(f"line {line}: unknown {what} {name!r}")

    for q in doc.queries:
        if q.kind in ("compare", "compose"):
            for a in q.args:
                need(a, states, "state", q.line)
        elif q.kind == "incompat":
            need(q.args[0], states, "state", q.line)
            need(q.args[1], dims, "dimension", q.line)
            need(q.args[3], states, "state", q.line)
        elif q.kind == "meta":
            need(q.args[0], states, "state", q.line)
        elif q.kind in ("iota", "hasse"):
            need(q.args[0], dims, "dimension", q.line)
        elif q.kind == "run":
            need(q.args[0], SCENARIO_NAMES, "scenario", q.line)


# -- serializer --------------------------------------------------------------

def _value_text(v: Value) -> str:
    if isinstance(v, frozenset):
        return "{" + ", ".join(sorted(_value_text(x) for x in v)) + "}"
    if isinstance(v, tuple):
        return "(" + ", ".join(_value_text(x) for x in v) + ")"
    return v


def expr_text(e) -> str:
    if isinstance(e, Ref):
        return e.name
    if isinstance(e, Base):
        text = "base{" + ", ".join(sorted(e.elements)) + "}"
        if e.order:
            text += " order{" + ", ".join(f"{a} < {b}" for a, b in sorted(e.order)) + "}"
        return text
    if isinstance(e, Power):
        return f"power({expr_text(e.inner)})"
    if isinstance(e, ElementsAsAtoms):
        return "atoms(" + ", ".join(sorted(e.parts)) + ")"
    parts = e.factors if isinstance(e, Product) else e.parts
    return f"{_CALL_NAMES[type(e)]}(" + ", ".join(expr_text(p) for p in parts) + ")"


def _query_text(q: Query) -> str:
    if q.kind == "incompat":
        k_a, dim, value, k_h = q.args
        return f"incompat {k_a}.{dim} @ {_value_text(value)} {k_h}"
    return " ".join((q.kind, *q.args))


def serialize(doc: ScenarioDoc) -> str:
    sections = [
        [f"dim {d.name} = {expr_text(d.expr)}" for d in doc.dims],
        [
            f"state {s.name} = {{ "
            + ", ".join(f"{dim}: {_value_text(v)}" for dim, v in s.assign)
            + (" }" if s.assign else "}")
            for s in doc.states
        ],
        [_query_text(q) for q in doc.queries],
    ]
    blocks = ["\n".join(lines) for lines in sections if lines]
    return "\n\n".join(blocks) + "\n" if blocks else ""
