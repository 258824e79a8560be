"""Label-driven vertex partitioning.

Labels are visited most-frequent-first. For each label the still-available
vertices are split into connected components of the undirected graph
restricted to edges with that label; each component becomes a subgrouping
whose inner edge set holds ALL edges (any label) with both endpoints inside.
Vertices never captured by any label end up in a residual grouping of
singletons.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from ..graph import PropertyGraph, label_frequencies, subgraph_edge_ids


@dataclass(frozen=True)
class Subgrouping:
    vertices: frozenset[int]
    inner_edges: tuple[int, ...]
    dominant_label: str

    @property
    def min_vertex(self) -> int:
        return min(self.vertices)


@dataclass
class Grouping:
    label: str
    subgroupings: list[Subgrouping] = field(default_factory=list)


@dataclass
class Partitioning:
    groupings: list[Grouping] = field(default_factory=list)
    residual_vertices: tuple[int, ...] = ()

    @property
    def num_groupings(self) -> int:
        """Non-empty groupings, counting the residual when it holds vertices."""
        return len(self.groupings) + (1 if self.residual_vertices else 0)

    def all_subgroupings(self) -> list[Subgrouping]:
        out: list[Subgrouping] = []
        for grp in self.groupings:
            out.extend(grp.subgroupings)
        return out


def max_weak_label_components(g: PropertyGraph, label: str,
                              available: set[int]) -> list[Subgrouping]:
    """Maximal weakly connected components of the ``label`` subgraph over
    ``available`` vertices. Components without a single such edge are not
    reported; ordering is by smallest member id."""
    neighbors: dict[int, set[int]] = {}
    for eid in g.edges_by_label.get(label, ()):
        e = g.edges[eid]
        if e.src in available and e.dst in available:
            neighbors.setdefault(e.src, set()).add(e.dst)
            neighbors.setdefault(e.dst, set()).add(e.src)
    seen: set[int] = set()
    comps: list[Subgrouping] = []
    for start in sorted(neighbors):
        if start in seen:
            continue
        comp = {start}
        frontier = [start]
        seen.add(start)
        while frontier:
            v = frontier.pop()
            for w in neighbors.get(v, ()):
                if w not in seen:
                    seen.add(w)
                    comp.add(w)
                    frontier.append(w)
        comps.append(Subgrouping(
            vertices=frozenset(comp),
            inner_edges=tuple(subgraph_edge_ids(g, comp)),
            dominant_label=label,
        ))
    comps.sort(key=lambda s: s.min_vertex)
    return comps


def grouping(g: PropertyGraph) -> Partitioning:
    """Partition all vertices by descending label frequency.

    Ties in the frequency list break lexicographically, so the result is
    deterministic for a given graph.
    """
    available = set(range(g.num_vertices))
    part = Partitioning()
    for label, _count in label_frequencies(g):
        comps = max_weak_label_components(g, label, available)
        if not comps:
            continue
        part.groupings.append(Grouping(label, comps))
        for comp in comps:
            available -= comp.vertices
    part.residual_vertices = tuple(sorted(available))
    return part
