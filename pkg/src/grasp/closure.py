"""Reachable-pair counting over directed edge lists.

Used both for per-partition reach statistics and by the exact query engine,
so it has to stay fast on graphs with a few thousand vertices: strongly
connected components (iterative Tarjan) followed by a bitset union sweep in
the emission order, which for Tarjan is already reverse topological.
"""
from __future__ import annotations

from typing import Iterable


def _tarjan(adj: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    n = len(adj)
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comps: list[list[int]] = []
    comp_of = [-1] * n
    counter = 0

    for root in range(n):
        if index[root] != -1:
            continue
        work: list[tuple[int, int]] = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            descended = False
            neighbors = adj[v]
            for i in range(pi, len(neighbors)):
                w = neighbors[i]
                if index[w] == -1:
                    work[-1] = (v, i + 1)
                    work.append((w, 0))
                    descended = True
                    break
                if on_stack[w]:
                    if index[w] < low[v]:
                        low[v] = index[w]
            if descended:
                continue
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp_of[w] = len(comps)
                    comp.append(w)
                    if w == v:
                        break
                comps.append(comp)
            work.pop()
            if work:
                u = work[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
    return comps, comp_of


def reach_pair_count(vertices: Iterable[int], arcs: Iterable[tuple[int, int]]) -> int:
    """Ordered pairs (u, v) joined by a directed path of length >= 1.

    ``u == v`` counts exactly when u lies on a cycle (including self-loops).
    Vertices not mentioned in ``vertices`` are ignored even if arcs touch
    them; callers pass the vertex set they care about.
    """
    ids = sorted(set(vertices))
    if not ids:
        return 0
    local = {v: i for i, v in enumerate(ids)}
    n = len(ids)
    adj: list[list[int]] = [[] for _ in range(n)]
    has_self = [False] * n
    kept: list[tuple[int, int]] = []
    for u, v in arcs:
        if u not in local or v not in local:
            continue
        lu, lv = local[u], local[v]
        if lu == lv:
            has_self[lu] = True
        else:
            adj[lu].append(lv)
        kept.append((lu, lv))
    comps, comp_of = _tarjan(adj)

    nc = len(comps)
    member_bits = [0] * nc
    cyclic = [False] * nc
    for c, comp in enumerate(comps):
        bits = 0
        for v in comp:
            bits |= 1 << v
            if has_self[v]:
                cyclic[c] = True
        member_bits[c] = bits
        if len(comp) > 1:
            cyclic[c] = True

    cond: list[set[int]] = [set() for _ in range(nc)]
    for lu, lv in kept:
        cu, cv = comp_of[lu], comp_of[lv]
        if cu != cv:
            cond[cu].add(cv)

    # Tarjan emits components sinks-first, so successors are already final.
    reach = [0] * nc
    total = 0
    for c in range(nc):
        r = member_bits[c] if cyclic[c] else 0
        for c2 in cond[c]:
            r |= member_bits[c2] | reach[c2]
        reach[c] = r
        total += len(comps[c]) * r.bit_count()
    return total
