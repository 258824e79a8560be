"""Merge phase: supernodes fold into hypernodes, superedges into hyperedges.

Supernodes merge when they agree on (dominant label, incoming superedge
label set) under target-merge, or (dominant label, outgoing superedge label
set) under source-merge. The classes are equivalence classes, so merging is
transitive by construction.

Superedges whose endpoints land in the same hypernode are re-classified as
inner edges of that hypernode: eweight, per-label counts and reach pairs are
recomputed from the union subgraph so downstream bookkeeping stays exact.
All remaining statistics are element-wise sums over members, except lpercent
(eweight-weighted average) and avg_sn_vweight (mean member vweight).
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from ..errors import GraphFormatError, InputError
from ..graph import PropertyGraph, canonical_json, graph_digest
from .evaluate import AqpProperties, Superedge, Supergraph, inner_stats

MERGE_MODES = ("target", "source")


@dataclass
class Hypernode:
    id: int
    members: tuple[int, ...]  # supernode ids
    dominant_label: str | None
    props: AqpProperties
    supernode_count: int


@dataclass(frozen=True)
class Hyperedge:
    src: int
    label: str
    dst: int
    weight: int
    superedge_count: int


@dataclass
class Summary:
    hypernodes: list[Hypernode]
    hyperedges: list[Hyperedge]
    mode: str
    query_labels: tuple[str, ...]
    source_graph_digest: str
    hn_of_vertex: list[int] = field(default_factory=list)

    @property
    def num_hypernodes(self) -> int:
        return len(self.hypernodes)

    @property
    def num_hyperedges(self) -> int:
        return len(self.hyperedges)


def vmerge(sg: Supergraph, mode: str) -> list[list[int]]:
    """Group supernode ids into merge classes.

    The class key pairs the dominant label with the set of incoming
    (target-merge) or outgoing (source-merge) superedge labels. Classes are
    ordered by their smallest supernode id.
    """
    if mode not in MERGE_MODES:
        raise InputError(f"mode must be one of {MERGE_MODES}, got {mode!r}")
    incident: dict[int, set[str]] = {sn.id: set() for sn in sg.supernodes}
    for se in sg.superedges:
        if mode == "target":
            incident[se.dst].add(se.label)
        else:
            incident[se.src].add(se.label)
    classes: dict[tuple, list[int]] = {}
    for sn in sg.supernodes:
        key = (sn.dominant_label, tuple(sorted(incident[sn.id])))
        classes.setdefault(key, []).append(sn.id)
    groups = sorted(classes.values(), key=min)
    for group in groups:
        group.sort()
    return groups


def merge_hn_properties(member_props: list[AqpProperties]) -> AqpProperties:
    """Combine member statistics: sums everywhere, except lpercent (weighted
    by member eweight) and avg_sn_vweight (mean of member vweights)."""
    out = AqpProperties()
    for p in member_props:
        out.vweight += p.vweight
        out.eweight += p.eweight
        for l, c in p.label_counts.items():
            out.label_counts[l] = out.label_counts.get(l, 0) + c
        for l, c in p.lreach.items():
            out.lreach[l] = out.lreach.get(l, 0) + c
        for k, c in p.ereach.items():
            out.ereach[k] = out.ereach.get(k, 0) + c
        for k, c in p.delta.items():
            out.delta[k] = out.delta.get(k, 0) + c
        for k, c in p.frontier.items():
            out.frontier[k] = out.frontier.get(k, 0) + c
        for k, c in p.rlpart.items():
            out.rlpart[k] = out.rlpart.get(k, 0.0) + c
    out.lpercent = {
        l: (c / out.eweight if out.eweight else 0.0)
        for l, c in sorted(out.label_counts.items())
    }
    out.avg_sn_vweight = out.vweight / len(member_props) if member_props else 0.0
    out.label_counts = dict(sorted(out.label_counts.items()))
    out.lreach = dict(sorted(out.lreach.items()))
    out.ereach = dict(sorted(out.ereach.items()))
    out.delta = dict(sorted(out.delta.items()))
    out.frontier = dict(sorted(out.frontier.items()))
    out.rlpart = dict(sorted(out.rlpart.items()))
    return out


def emerge(superedges: list[Superedge],
           hn_of_sn: dict[int, int]) -> tuple[list[Hyperedge], list[Superedge]]:
    """Aggregate superedges by (hypernode src, label, hypernode dst).

    A hyperedge weight is the SUM of member superedge weights; the member
    count is kept alongside. Superedges that became internal to a hypernode
    are returned separately for re-classification.
    """
    acc: dict[tuple[int, str, int], tuple[int, int]] = {}
    internal: list[Superedge] = []
    for se in superedges:
        a, b = hn_of_sn[se.src], hn_of_sn[se.dst]
        if a == b:
            internal.append(se)
            continue
        key = (a, se.label, b)
        weight, count = acc.get(key, (0, 0))
        acc[key] = (weight + se.weight, count + 1)
    hyperedges = [Hyperedge(src, label, dst, w, c)
                  for (src, label, dst), (w, c) in sorted(acc.items())]
    return hyperedges, internal


def build_summary(sg: Supergraph, g: PropertyGraph, mode: str,
                  query_labels: tuple[str, ...] = (),
                  labels: set[str] | None = None) -> Summary:
    """Run the merge phase over an evaluated supergraph."""
    groups = vmerge(sg, mode)
    hn_of_sn: dict[int, int] = {}
    for hid, group in enumerate(groups):
        for sid in group:
            hn_of_sn[sid] = hid

    hyperedges, internal = emerge(sg.superedges, hn_of_sn)

    internal_by_hn: dict[int, list[Superedge]] = {}
    for se in internal:
        internal_by_hn.setdefault(hn_of_sn[se.src], []).append(se)

    hypernodes: list[Hypernode] = []
    for hid, group in enumerate(groups):
        members = [sg.supernodes[sid] for sid in group]
        props = merge_hn_properties([sn.props for sn in members])
        if internal_by_hn.get(hid):
            # re-classify the folded-in superedges as inner: recompute the
            # edge-level stats from the union subgraph (vertex sums stand)
            union = tuple(sorted(v for sn in members for v in sn.members))
            props.eweight, props.label_counts, props.lreach = inner_stats(g, union, labels)
            props.label_counts = dict(sorted(props.label_counts.items()))
            props.lreach = dict(sorted(props.lreach.items()))
            props.lpercent = {
                l: (c / props.eweight if props.eweight else 0.0)
                for l, c in props.label_counts.items()
            }
        hypernodes.append(Hypernode(
            id=hid,
            members=tuple(group),
            dominant_label=members[0].dominant_label,
            props=props,
            supernode_count=len(group),
        ))

    hn_of_vertex = [hn_of_sn[sid] for sid in sg.sn_of_vertex]
    return Summary(
        hypernodes=hypernodes,
        hyperedges=hyperedges,
        mode=mode,
        query_labels=tuple(sorted(query_labels)),
        source_graph_digest=graph_digest(g),
        hn_of_vertex=hn_of_vertex,
    )


# -- serialization -------------------------------------------------------


def _key_text(key: tuple) -> str:
    return ",".join(str(part) for part in key)


def _props_to_obj(p: AqpProperties) -> dict:
    return {
        "vweight": p.vweight,
        "eweight": p.eweight,
        "label_counts": dict(sorted(p.label_counts.items())),
        "lpercent": {l: v for l, v in sorted(p.lpercent.items())},
        "lreach": dict(sorted(p.lreach.items())),
        "ereach": {_key_text(k): v for k, v in sorted(p.ereach.items())},
        "delta": {_key_text(k): v for k, v in sorted(p.delta.items())},
        "frontier": {_key_text(k): v for k, v in sorted(p.frontier.items())},
        "rlpart": {_key_text(k): v for k, v in sorted(p.rlpart.items())},
        "avg_sn_vweight": p.avg_sn_vweight,
    }


def summary_to_obj(s: Summary) -> dict:
    return {
        "hypernodes": [
            {
                "id": hn.id,
                "members": list(hn.members),
                "dominant_label": hn.dominant_label,
                "supernode_count": hn.supernode_count,
                **_props_to_obj(hn.props),
            }
            for hn in s.hypernodes
        ],
        "hyperedges": [
            {"src": he.src, "label": he.label, "dst": he.dst,
             "weight": he.weight, "superedge_count": he.superedge_count}
            for he in s.hyperedges
        ],
        "mode": s.mode,
        "query_labels": list(s.query_labels),
        "source_graph_digest": s.source_graph_digest,
        "vertex_assignment": list(s.hn_of_vertex),
    }


def summary_to_json(s: Summary) -> str:
    return canonical_json(summary_to_obj(s))


def _parse_stat_key(text: str, parts: int) -> tuple:
    bits = text.split(",")
    if len(bits) != parts:
        raise GraphFormatError(f"bad statistics key {text!r}")
    if parts == 2:
        return (bits[0], int(bits[1]))
    return (bits[0], bits[1], int(bits[2]), int(bits[3]))


def summary_from_json(text: str | bytes | dict) -> Summary:
    obj = json.loads(text) if isinstance(text, (str, bytes)) else text
    try:
        hypernodes = []
        for h in obj["hypernodes"]:
            props = AqpProperties(
                vweight=int(h["vweight"]),
                eweight=int(h["eweight"]),
                label_counts={l: int(c) for l, c in h["label_counts"].items()},
                lpercent={l: float(v) for l, v in h["lpercent"].items()},
                lreach={l: int(c) for l, c in h["lreach"].items()},
                ereach={_parse_stat_key(k, 4): int(v) for k, v in h["ereach"].items()},
                delta={_parse_stat_key(k, 4): int(v) for k, v in h["delta"].items()},
                frontier={_parse_stat_key(k, 2): int(v) for k, v in h["frontier"].items()},
                rlpart={_parse_stat_key(k, 4): float(v) for k, v in h["rlpart"].items()},
                avg_sn_vweight=float(h["avg_sn_vweight"]),
            )
            hypernodes.append(Hypernode(
                id=int(h["id"]), members=tuple(h["members"]),
                dominant_label=h["dominant_label"], props=props,
                supernode_count=int(h["supernode_count"]),
            ))
        hyperedges = [
            Hyperedge(int(e["src"]), e["label"], int(e["dst"]),
                      int(e["weight"]), int(e["superedge_count"]))
            for e in obj["hyperedges"]
        ]
        return Summary(
            hypernodes=hypernodes,
            hyperedges=hyperedges,
            mode=obj["mode"],
            query_labels=tuple(obj["query_labels"]),
            source_graph_digest=obj["source_graph_digest"],
            hn_of_vertex=list(obj.get("vertex_assignment", [])),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphFormatError(f"malformed summary: {exc}") from None
