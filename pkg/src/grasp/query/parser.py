"""Recursive-descent parser for the counting-query grammar.

    COUNT <node> (<edge> <node>)* [WHERE <var>.<prop> <op> <number> (AND ...)*]
    <node> ::= "(" [ident] ")"
    <edge> ::= -[L]-> | <-[L]- | -[L?]-> | -[L1|L2]-> | -/L+/-> | -/L*/->

At most two hops. Filters attach to a variable bound on the first or last
node and are only valid on single-label and concatenation paths.
"""
from __future__ import annotations

import re

from ..errors import QuerySyntaxError
from .ast import (BACKWARD, COMPARATORS, FORWARD, Concatenation, CountQuery,
                  Disjunction, Epsilon, Filter, InverseLabel, KleenePlus,
                  KleeneStar, OptionalLabel, SingleLabel)

_IDENT = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")
_LABEL = re.compile(r"[^\s,|\-><\[\]/?*+]+")
_NUMBER = re.compile(r"[+-]?(\d+\.?\d*|\.\d+)")


class _Cursor:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def eof(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def peek(self, literal: str) -> bool:
        self.skip_ws()
        return self.text.startswith(literal, self.pos)

    def take(self, literal: str) -> None:
        self.skip_ws()
        if not self.text.startswith(literal, self.pos):
            raise QuerySyntaxError(f"expected {literal!r}", self.pos)
        self.pos += len(literal)

    def take_re(self, pattern: re.Pattern, what: str) -> str:
        self.skip_ws()
        m = pattern.match(self.text, self.pos)
        if not m:
            raise QuerySyntaxError(f"expected {what}", self.pos)
        self.pos = m.end()
        return m.group(0)


def _parse_node(cur: _Cursor) -> str | None:
    cur.take("(")
    name = None
    cur.skip_ws()
    if not cur.peek(")"):
        name = cur.take_re(_IDENT, "variable name")
    cur.take(")")
    return name


class _Hop:
    def __init__(self, kind: str, labels: tuple[str, ...], direction: str, start: int):
        self.kind = kind  # plain | optional | disjunction | plus | star
        self.labels = labels
        self.direction = direction
        self.start = start


def _parse_edge(cur: _Cursor) -> _Hop:
    cur.skip_ws()
    start = cur.pos
    if cur.peek("<-["):
        cur.take("<-[")
        label = cur.take_re(_LABEL, "label")
        cur.take("]-")
        return _Hop("plain", (label,), BACKWARD, start)
    if cur.peek("-["):
        cur.take("-[")
        label = cur.take_re(_LABEL, "label")
        if cur.peek("?"):
            cur.take("?")
            cur.take("]->")
            return _Hop("optional", (label,), FORWARD, start)
        if cur.peek("|"):
            cur.take("|")
            second = cur.take_re(_LABEL, "label")
            cur.take("]->")
            return _Hop("disjunction", (label, second), FORWARD, start)
        cur.take("]->")
        return _Hop("plain", (label,), FORWARD, start)
    if cur.peek("-/"):
        cur.take("-/")
        label = cur.take_re(_LABEL, "label")
        if cur.peek("+"):
            cur.take("+")
            kind = "plus"
        elif cur.peek("*"):
            cur.take("*")
            kind = "star"
        else:
            raise QuerySyntaxError("expected '+' or '*'", cur.pos)
        cur.take("/->")
        return _Hop(kind, (label,), FORWARD, start)
    raise QuerySyntaxError("expected an edge pattern", cur.pos)


def _parse_filters(cur: _Cursor, vars_seen: dict[str, int]) -> tuple[Filter, ...]:
    filters = []
    while True:
        var = cur.take_re(_IDENT, "variable name")
        if var not in vars_seen:
            raise QuerySyntaxError(f"unbound variable {var!r}", cur.pos)
        position = vars_seen[var]
        if position == 0:
            raise QuerySyntaxError(
                f"variable {var!r} is bound to a middle node; filters attach "
                "to the first or last node", cur.pos)
        cur.take(".")
        prop = cur.take_re(_IDENT, "property name")
        cur.skip_ws()
        op = next((o for o in COMPARATORS if cur.peek(o)), None)
        if op is None:
            raise QuerySyntaxError("expected one of <=, <, >=, >", cur.pos)
        cur.take(op)
        value = float(cur.take_re(_NUMBER, "number"))
        filters.append(Filter(position, prop, op, value))
        if cur.peek("AND"):
            cur.take("AND")
            continue
        return tuple(filters)


def parse_query(text: str) -> CountQuery:
    cur = _Cursor(text)
    cur.take("COUNT")
    node_vars: list[str | None] = [_parse_node(cur)]
    hops: list[_Hop] = []
    while not cur.eof() and not cur.peek("WHERE"):
        hops.append(_parse_edge(cur))
        node_vars.append(_parse_node(cur))
    if len(hops) > 2:
        raise QuerySyntaxError("at most two hops are supported", hops[2].start)

    if len(hops) == 0:
        path = Epsilon()
    elif len(hops) == 1:
        hop = hops[0]
        if hop.kind == "plain":
            path = SingleLabel(hop.labels[0]) if hop.direction == FORWARD \
                else InverseLabel(hop.labels[0])
        elif hop.kind == "optional":
            path = OptionalLabel(hop.labels[0], hop.direction)
        elif hop.kind == "disjunction":
            path = Disjunction(hop.labels[0], hop.labels[1])
        elif hop.kind == "plus":
            path = KleenePlus(hop.labels[0])
        else:
            path = KleeneStar(hop.labels[0])
    else:
        first, second = hops
        if first.kind != "plain" or second.kind != "plain":
            raise QuerySyntaxError("two-hop patterns take plain labels only", second.start)
        d1 = 1 if first.direction == FORWARD else 2
        d2 = 2 if second.direction == FORWARD else 1
        path = Concatenation(first.labels[0], second.labels[0], d1, d2)

    filters: tuple[Filter, ...] = ()
    if cur.peek("WHERE"):
        cur.take("WHERE")
        # map variable -> position: 1 first node, 2 last node, 0 middle
        positions: dict[str, int] = {}
        last = len(node_vars) - 1
        for i, name in enumerate(node_vars):
            if name is None:
                continue
            if name in positions:
                raise QuerySyntaxError(f"variable {name!r} bound twice", cur.pos)
            positions[name] = 1 if i == 0 else (2 if i == last else 0)
        filters = _parse_filters(cur, positions)
        if not isinstance(path, (SingleLabel, InverseLabel, Concatenation)):
            raise QuerySyntaxError(
                "filters apply to single-label and two-hop patterns only", cur.pos)
    if not cur.eof():
        raise QuerySyntaxError("unexpected trailing input", cur.pos)
    return CountQuery(path, filters)


def print_query(q: CountQuery) -> str:
    """Render the canonical text form; parse(print(q)) round-trips."""
    p = q.path
    var1 = "x" if any(f.position == 1 for f in q.filters) else ""
    var2 = "y" if any(f.position == 2 for f in q.filters) else ""
    if isinstance(p, Epsilon):
        body = f"({var1})"
    elif isinstance(p, SingleLabel):
        arrow = f"-[{p.label}]->" if p.direction == FORWARD else f"<-[{p.label}]-"
        body = f"({var1}) {arrow} ({var2})"
    elif isinstance(p, InverseLabel):
        body = f"({var1}) <-[{p.label}]- ({var2})"
    elif isinstance(p, OptionalLabel):
        body = f"({var1}) -[{p.label}?]-> ({var2})"
    elif isinstance(p, Disjunction):
        body = f"({var1}) -[{p.left}|{p.right}]-> ({var2})"
    elif isinstance(p, KleenePlus):
        body = f"({var1}) -/{p.label}+/-> ({var2})"
    elif isinstance(p, KleeneStar):
        body = f"({var1}) -/{p.label}*/-> ({var2})"
    elif isinstance(p, Concatenation):
        first = f"-[{p.first}]->" if p.d1 == 1 else f"<-[{p.first}]-"
        second = f"-[{p.second}]->" if p.d2 == 2 else f"<-[{p.second}]-"
        body = f"({var1}) {first} () {second} ({var2})"
    else:
        raise TypeError(f"unknown path type {type(p).__name__}")
    text = f"COUNT {body}"
    if q.filters:
        names = {1: "x", 2: "y"}
        conds = " AND ".join(
            f"{names[f.position]}.{f.prop} {f.op} {f.value:g}" for f in q.filters)
        text += f" WHERE {conds}"
    return text
