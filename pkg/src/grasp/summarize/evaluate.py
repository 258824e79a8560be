"""Supernode construction and per-supernode statistics.

Every subgrouping becomes a supernode; residual vertices become singleton
supernodes with no dominant label. Each supernode carries the statistics the
approximate query engine consumes later:

* vweight / eweight: inner vertex and edge counts
* label_counts / lpercent: inner edges per label (count and share of eweight)
* lreach: ordered vertex pairs joined by a single-label inner path
* ereach: meeting pairs of distinct cross-edges, keyed (l1, l2, d1, d2)
  where d is the endpoint index AT the shared vertex (1 source, 2 target)
* delta / frontier / rlpart: cross-edge-to-inner-edge traversal pairs, the
  vertices carrying cross-edges, and their ratio

Cross-edge weights between supernode pairs are folded into superedges.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from ..closure import reach_pair_count
from ..graph import PropertyGraph
from .grouping import Partitioning


@dataclass
class AqpProperties:
    vweight: int = 0
    eweight: int = 0
    label_counts: dict[str, int] = field(default_factory=dict)
    lpercent: dict[str, float] = field(default_factory=dict)
    lreach: dict[str, int] = field(default_factory=dict)
    ereach: dict[tuple[str, str, int, int], int] = field(default_factory=dict)
    delta: dict[tuple[str, str, int, int], int] = field(default_factory=dict)
    frontier: dict[tuple[str, int], int] = field(default_factory=dict)
    rlpart: dict[tuple[str, str, int, int], float] = field(default_factory=dict)
    avg_sn_vweight: float = 0.0


@dataclass
class Supernode:
    id: int
    members: tuple[int, ...]
    dominant_label: str | None
    props: AqpProperties


@dataclass(frozen=True)
class Superedge:
    src: int
    label: str
    dst: int
    weight: int


@dataclass
class Supergraph:
    supernodes: list[Supernode]
    superedges: list[Superedge]
    sn_of_vertex: list[int]


def vfuse(p: Partitioning, g: PropertyGraph) -> tuple[list[Supernode], list[int]]:
    """Turn a partitioning into supernodes (properties still empty).

    Ids are assigned grouping by grouping, then residual singletons in
    ascending vertex order, which keeps numbering reproducible.
    """
    supernodes: list[Supernode] = []
    sn_of_vertex = [-1] * g.num_vertices
    for grp in p.groupings:
        for sub in grp.subgroupings:
            sid = len(supernodes)
            supernodes.append(Supernode(
                id=sid,
                members=tuple(sorted(sub.vertices)),
                dominant_label=sub.dominant_label,
                props=AqpProperties(),
            ))
            for v in sub.vertices:
                sn_of_vertex[v] = sid
    for v in p.residual_vertices:
        sid = len(supernodes)
        supernodes.append(Supernode(id=sid, members=(v,), dominant_label=None,
                                    props=AqpProperties()))
        sn_of_vertex[v] = sid
    return supernodes, sn_of_vertex


def inner_stats(g: PropertyGraph, members: tuple[int, ...],
                labels: set[str] | None = None) -> tuple[int, dict[str, int], dict[str, int]]:
    """eweight, per-label inner counts, and per-label reach pairs for the
    subgraph induced by ``members``."""
    inside = set(members)
    by_label: dict[str, list[tuple[int, int]]] = {}
    eweight = 0
    for v in members:
        for eid in g.out_adj[v]:
            e = g.edges[eid]
            if e.dst in inside:
                eweight += 1
                by_label.setdefault(e.label, []).append((e.src, e.dst))
    counts = {l: len(arcs) for l, arcs in by_label.items()}
    reach: dict[str, int] = {}
    for l, arcs in by_label.items():
        if labels is not None and l not in labels:
            continue
        touched = {u for arc in arcs for u in arc}
        pairs = reach_pair_count(touched, arcs)
        if pairs:
            reach[l] = pairs
    return eweight, counts, reach


def compute_sn_properties(sn: Supernode, g: PropertyGraph,
                          labels: set[str] | None = None) -> AqpProperties:
    """Fill the full statistics block for one supernode.

    ``labels`` optionally restricts which labels get reach/traversal stats;
    the default covers every label incident to the supernode.
    """
    members = sn.members
    inside = set(members)
    props = AqpProperties(vweight=len(members))
    props.eweight, props.label_counts, props.lreach = inner_stats(g, members, labels)
    props.lpercent = {
        l: (c / props.eweight if props.eweight else 0.0)
        for l, c in sorted(props.label_counts.items())
    }
    props.avg_sn_vweight = float(props.vweight)

    def wanted(label: str) -> bool:
        return labels is None or label in labels

    # cross[v][(label, d)] and inner_inc[v][(label, d)] incidence counts,
    # where d is the endpoint index of the edge at v
    cross: dict[int, dict[tuple[str, int], int]] = {}
    inner_inc: dict[int, dict[tuple[str, int], int]] = {}
    for v in members:
        for eid in g.out_adj[v]:
            e = g.edges[eid]
            table = inner_inc if e.dst in inside else cross
            slot = table.setdefault(v, {})
            key = (e.label, 1)
            slot[key] = slot.get(key, 0) + 1
        for eid in g.in_adj[v]:
            e = g.edges[eid]
            table = inner_inc if e.src in inside else cross
            slot = table.setdefault(v, {})
            key = (e.label, 2)
            slot[key] = slot.get(key, 0) + 1

    ereach: dict[tuple[str, str, int, int], int] = {}
    delta: dict[tuple[str, str, int, int], int] = {}
    frontier: dict[tuple[str, int], int] = {}
    for v, slots in cross.items():
        for (l1, d1), c1 in slots.items():
            if not wanted(l1):
                continue
            frontier[(l1, d1)] = frontier.get((l1, d1), 0) + 1
            for (l2, d2), c2 in slots.items():
                if not wanted(l2):
                    continue
                pairs = c1 * c2
                if l1 == l2 and d1 == d2:
                    pairs -= c1  # ordered pairs of distinct edges
                if pairs:
                    key = (l1, l2, d1, d2)
                    ereach[key] = ereach.get(key, 0) + pairs
            for (l2, d2), c2 in inner_inc.get(v, {}).items():
                if not wanted(l2):
                    continue
                key = (l1, l2, d1, d2)
                delta[key] = delta.get(key, 0) + c1 * c2

    props.ereach = dict(sorted(ereach.items()))
    props.delta = dict(sorted(delta.items()))
    props.frontier = dict(sorted(frontier.items()))
    props.rlpart = {
        (l1, l2, d1, d2): (count / frontier[(l2, d2)] if frontier.get((l2, d2)) else 0.0)
        for (l1, l2, d1, d2), count in props.delta.items()
    }
    return props


def efuse(supernodes: list[Supernode], sn_of_vertex: list[int],
          g: PropertyGraph) -> list[Superedge]:
    """Collapse cross-edges into superedges, summing multiplicities."""
    weights: dict[tuple[int, str, int], int] = {}
    for e in g.edges:
        a, b = sn_of_vertex[e.src], sn_of_vertex[e.dst]
        if a != b:
            key = (a, e.label, b)
            weights[key] = weights.get(key, 0) + 1
    return [Superedge(src, label, dst, w)
            for (src, label, dst), w in sorted(weights.items())]


def evaluate_phase(p: Partitioning, g: PropertyGraph,
                   labels: set[str] | None = None) -> Supergraph:
    supernodes, sn_of_vertex = vfuse(p, g)
    for sn in supernodes:
        sn.props = compute_sn_properties(sn, g, labels)
    superedges = efuse(supernodes, sn_of_vertex, g)
    return Supergraph(supernodes, superedges, sn_of_vertex)
