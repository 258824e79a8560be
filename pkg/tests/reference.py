"""Brute-force reference implementations the suite checks the package against.

Everything here is computed by direct enumeration: reachability by
per-vertex search, pair counts by scanning full edge lists. No adjacency
indexes, no bitsets, no shared code with the engine under test.
"""
from __future__ import annotations

from collections import defaultdict

from grasp.graph import PropertyGraph
from grasp.query.ast import (
    BACKWARD,
    Concatenation,
    CountQuery,
    Disjunction,
    Epsilon,
    InverseLabel,
    KleenePlus,
    KleeneStar,
    OptionalLabel,
    SingleLabel,
)


def count_label(g: PropertyGraph, label: str) -> int:
    return sum(1 for e in g.edges if e.label == label)


def reach_pairs(vertices, arcs) -> int:
    """Ordered pairs (u, v) with a directed path of length >= 1 over arcs."""
    adj = defaultdict(list)
    for u, v in arcs:
        adj[u].append(v)
    total = 0
    for start in vertices:
        seen = set()
        stack = list(adj[start])
        while stack:
            v = stack.pop()
            if v in seen:
                continue
            seen.add(v)
            stack.extend(adj[v])
        total += len(seen)
    return total


def kleene_plus(g: PropertyGraph, label: str) -> int:
    arcs = [(e.src, e.dst) for e in g.edges if e.label == label]
    return reach_pairs(range(g.num_vertices), arcs)


def weak_label_components(g: PropertyGraph, label: str,
                          available: set[int]) -> list[set[int]]:
    """Undirected components over label-edges with both endpoints available;
    only components containing at least one such edge are returned."""
    neigh = defaultdict(set)
    for e in g.edges:
        if e.label == label and e.src in available and e.dst in available:
            neigh[e.src].add(e.dst)
            neigh[e.dst].add(e.src)
    comps = []
    seen: set[int] = set()
    for v in sorted(neigh):
        if v in seen:
            continue
        comp = {v}
        stack = [v]
        while stack:
            u = stack.pop()
            for w in neigh[u]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comps.append(comp)
    return comps


def inner_edge_ids(g: PropertyGraph, members: set[int]) -> set[int]:
    return {i for i, e in enumerate(g.edges)
            if e.src in members and e.dst in members}


def _holds(g: PropertyGraph, vid: int, filters) -> bool:
    for f in filters:
        value = g.vertices[vid].properties.get(f.prop)
        if value is None or isinstance(value, str):
            return False
        if f.op == "<=" and not value <= f.value:
            return False
        if f.op == "<" and not value < f.value:
            return False
        if f.op == ">=" and not value >= f.value:
            return False
        if f.op == ">" and not value > f.value:
            return False
    return True


def eval_query(g: PropertyGraph, q: CountQuery) -> float:
    """Enumerate matches of q directly. Filters silently drop non-numeric
    values (the engine under test raises instead; tests that compare must
    use numeric properties only)."""
    p = q.path
    fs1 = [f for f in q.filters if f.position == 1]
    fs2 = [f for f in q.filters if f.position == 2]
    if isinstance(p, Epsilon):
        return float(g.num_vertices)
    if isinstance(p, SingleLabel) or isinstance(p, InverseLabel):
        backward = isinstance(p, InverseLabel) or p.direction == BACKWARD
        total = 0
        for e in g.edges:
            if e.label != p.label:
                continue
            first, last = (e.dst, e.src) if backward else (e.src, e.dst)
            if _holds(g, first, fs1) and _holds(g, last, fs2):
                total += 1
        return float(total)
    if isinstance(p, OptionalLabel):
        return float(count_label(g, p.label) + g.num_vertices)
    if isinstance(p, Disjunction):
        return float(count_label(g, p.left) + count_label(g, p.right))
    if isinstance(p, KleenePlus):
        return float(kleene_plus(g, p.label))
    if isinstance(p, KleeneStar):
        return float(kleene_plus(g, p.label) + g.num_vertices)
    if isinstance(p, Concatenation):
        m1, m2 = 3 - p.d1, 3 - p.d2
        first_edges = [e for e in g.edges if e.label == p.first]
        second_edges = [e for e in g.edges if e.label == p.second]
        total = 0
        for e1 in first_edges:
            outer1 = e1.endpoint(p.d1)
            if not _holds(g, outer1, fs1):
                continue
            mid = e1.endpoint(m1)
            for e2 in second_edges:
                if e2.endpoint(m2) != mid:
                    continue
                if _holds(g, e2.endpoint(p.d2), fs2):
                    total += 1
        return float(total)
    raise TypeError(f"unknown path {type(p).__name__}")
