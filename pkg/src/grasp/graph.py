"""Directed labeled multigraph model with ingestion and label statistics.

The model is deliberately small: vertices carry a type label plus optional
typed properties, edges carry exactly one label. Vertex ids are dense
integers in [0, |V|) after ingestion; the original source ids are kept in a
sidecar list so serialization round-trips.

Two source formats are supported:

* text pair: a nodes file with lines ``<id>,<type_label>[,<k>=<v>;<k>=<v>...]``
  and an edges file with lines ``<src>,<label>,<dst>``; ``#`` starts a comment
* a JSON mirror: one object with ``nodes`` and ``edges`` arrays using the
  same field names
"""
from __future__ import annotations

import hashlib
import json
import re
from dataclasses import dataclass, field
from typing import Iterable

from .errors import GraphFormatError, LabelError

PropertyValue = int | float | str

_FORBIDDEN = set(",|-><")
_INT_RE = re.compile(r"^[+-]?\d+$")


def validate_label(text: str) -> str:
    """Check label syntax and return the label unchanged.

    Labels are non-empty, contain no whitespace and none of the characters
    ``, | - > <`` (they would collide with query syntax and with the
    comma-separated key encoding used in serialized summaries).
    """
    if not isinstance(text, str) or not text:
        raise LabelError("label must be a non-empty string")
    if any(c.isspace() for c in text):
        raise LabelError(f"label {text!r} contains whitespace")
    bad = sorted(set(text) & _FORBIDDEN)
    if bad:
        raise LabelError(f"label {text!r} contains reserved characters {''.join(bad)!r}")
    return text


@dataclass
class Vertex:
    id: int
    type_label: str
    properties: dict[str, PropertyValue] = field(default_factory=dict)


@dataclass
class Edge:
    src: int
    label: str
    dst: int
    properties: dict[str, PropertyValue] = field(default_factory=dict)

    def endpoint(self, d: int) -> int:
        """Endpoint by index: 1 is the source, 2 the target."""
        if d == 1:
            return self.src
        if d == 2:
            return self.dst
        raise ValueError(f"endpoint index must be 1 or 2, got {d}")


class PropertyGraph:
    """In-memory multigraph with adjacency and per-label edge indexes."""

    def __init__(self) -> None:
        self.vertices: list[Vertex] = []
        self.edges: list[Edge] = []
        self.original_ids: list[int] = []
        self.out_adj: list[list[int]] = []
        self.in_adj: list[list[int]] = []
        self.edges_by_label: dict[str, list[int]] = {}
        self._id_map: dict[int, int] = {}

    # -- construction -------------------------------------------------

    def add_vertex(self, original_id: int, type_label: str,
                   properties: dict[str, PropertyValue] | None = None) -> int:
        validate_label(type_label)
        if original_id in self._id_map:
            raise GraphFormatError(f"duplicate vertex id {original_id}")
        vid = len(self.vertices)
        self._id_map[original_id] = vid
        self.vertices.append(Vertex(vid, type_label, dict(properties or {})))
        self.original_ids.append(original_id)
        self.out_adj.append([])
        self.in_adj.append([])
        return vid

    def add_edge(self, src: int, label: str, dst: int,
                 properties: dict[str, PropertyValue] | None = None) -> int:
        validate_label(label)
        if not (0 <= src < len(self.vertices)) or not (0 <= dst < len(self.vertices)):
            raise GraphFormatError(f"edge ({src},{label},{dst}) references unknown vertex")
        eid = len(self.edges)
        self.edges.append(Edge(src, label, dst, dict(properties or {})))
        self.out_adj[src].append(eid)
        self.in_adj[dst].append(eid)
        self.edges_by_label.setdefault(label, []).append(eid)
        return eid

    def resolve(self, original_id: int) -> int:
        try:
            return self._id_map[original_id]
        except KeyError:
            raise GraphFormatError(f"unknown vertex id {original_id}") from None

    # -- stats --------------------------------------------------------

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def labels(self) -> list[str]:
        return sorted(self.edges_by_label)

    def label_count(self, label: str) -> int:
        return len(self.edges_by_label.get(label, ()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PropertyGraph):
            return NotImplemented
        if self.original_ids != other.original_ids:
            return False
        if [(v.type_label, v.properties) for v in self.vertices] != \
           [(v.type_label, v.properties) for v in other.vertices]:
            return False
        mine = [(e.src, e.label, e.dst, e.properties) for e in self.edges]
        theirs = [(e.src, e.label, e.dst, e.properties) for e in other.edges]
        return mine == theirs


# -- frequency list -----------------------------------------------------


def label_frequencies(g: PropertyGraph) -> list[tuple[str, int]]:
    """Edge labels with counts, most frequent first.

    Ties break lexicographically ascending on the label so the ordering,
    and everything derived from it, is deterministic.
    """
    pairs = [(label, len(eids)) for label, eids in g.edges_by_label.items()]
    pairs.sort(key=lambda p: (-p[1], p[0]))
    return pairs


# -- parsing ------------------------------------------------------------


def _parse_value(text: str) -> PropertyValue:
    if _INT_RE.match(text):
        return int(text)
    try:
        return float(text)
    except ValueError:
        return text


def _parse_props(blob: str, line_no: int, source: str) -> dict[str, PropertyValue]:
    props: dict[str, PropertyValue] = {}
    for pair in blob.split(";"):
        pair = pair.strip()
        if not pair:
            continue
        if "=" not in pair:
            raise GraphFormatError(f"malformed property {pair!r}", line_no, source)
        key, _, value = pair.partition("=")
        key = key.strip()
        if not key:
            raise GraphFormatError(f"empty property key in {pair!r}", line_no, source)
        props[key] = _parse_value(value.strip())
    return props


def _lines(source: str | bytes) -> list[str]:
    if isinstance(source, bytes):
        source = source.decode("utf-8")
    return source.splitlines()


def load_graph(nodes_source: str | bytes, edges_source: str | bytes) -> PropertyGraph:
    """Parse the two-file text format into a PropertyGraph.

    Raises GraphFormatError with a line number on malformed rows, duplicate
    vertex ids, or dangling edge endpoints.
    """
    g = PropertyGraph()
    for line_no, raw in enumerate(_lines(nodes_source), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split(",", 2)
        if len(parts) < 2:
            raise GraphFormatError("expected <id>,<type_label>[,<props>]", line_no, "nodes")
        id_text, type_label = parts[0].strip(), parts[1].strip()
        if not _INT_RE.match(id_text):
            raise GraphFormatError(f"vertex id {id_text!r} is not an integer", line_no, "nodes")
        props = _parse_props(parts[2], line_no, "nodes") if len(parts) == 3 else {}
        try:
            g.add_vertex(int(id_text), type_label, props)
        except (GraphFormatError, LabelError) as exc:
            raise GraphFormatError(str(exc), line_no, "nodes") from None

    for line_no, raw in enumerate(_lines(edges_source), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = [p.strip() for p in line.split(",")]
        if len(parts) != 3:
            raise GraphFormatError("expected <src>,<label>,<dst>", line_no, "edges")
        src_text, label, dst_text = parts
        if not _INT_RE.match(src_text) or not _INT_RE.match(dst_text):
            raise GraphFormatError("edge endpoints must be integers", line_no, "edges")
        try:
            src = g.resolve(int(src_text))
            dst = g.resolve(int(dst_text))
            g.add_edge(src, label, dst)
        except (GraphFormatError, LabelError) as exc:
            raise GraphFormatError(str(exc), line_no, "edges") from None
    return g


def load_graph_mirror(source: str | bytes | dict) -> PropertyGraph:
    """Parse the JSON mirror: one object with nodes and edges arrays."""
    if isinstance(source, (str, bytes)):
        try:
            obj = json.loads(source)
        except json.JSONDecodeError as exc:
            raise GraphFormatError(f"invalid JSON: {exc}", None, "mirror") from None
    else:
        obj = source
    if not isinstance(obj, dict) or "nodes" not in obj or "edges" not in obj:
        raise GraphFormatError("mirror must be an object with nodes and edges arrays", None, "mirror")
    g = PropertyGraph()
    for i, node in enumerate(obj["nodes"]):
        try:
            g.add_vertex(int(node["id"]), node["type_label"], node.get("properties") or {})
        except (KeyError, TypeError, ValueError, LabelError, GraphFormatError) as exc:
            raise GraphFormatError(f"bad node entry {i}: {exc}", None, "mirror") from None
    for i, edge in enumerate(obj["edges"]):
        try:
            src = g.resolve(int(edge["src"]))
            dst = g.resolve(int(edge["dst"]))
            g.add_edge(src, edge["label"], dst, edge.get("properties") or {})
        except (KeyError, TypeError, ValueError, LabelError, GraphFormatError) as exc:
            raise GraphFormatError(f"bad edge entry {i}: {exc}", None, "mirror") from None
    return g


# -- serialization ------------------------------------------------------


def canonical_number(x: float) -> float:
    """Round to 12 significant digits; keeps serialized output stable."""
    return float(f"{x:.12g}")


def _canon(obj):
    if isinstance(obj, float):
        return canonical_number(obj)
    if isinstance(obj, dict):
        return {k: _canon(obj[k]) for k in sorted(obj)}
    if isinstance(obj, (list, tuple)):
        return [_canon(v) for v in obj]
    return obj


def canonical_json(obj) -> str:
    """Deterministic JSON text: sorted keys, 12 significant digits."""
    return json.dumps(_canon(obj), sort_keys=True, separators=(",", ":"))


def graph_to_mirror(g: PropertyGraph) -> dict:
    return {
        "nodes": [
            {"id": g.original_ids[v.id], "type_label": v.type_label, "properties": v.properties}
            for v in g.vertices
        ],
        "edges": [
            {"src": g.original_ids[e.src], "label": e.label,
             "dst": g.original_ids[e.dst], "properties": e.properties}
            for e in g.edges
        ],
    }


def serialize_graph(g: PropertyGraph) -> str:
    return canonical_json(graph_to_mirror(g))


def _format_prop_value(value: PropertyValue) -> str:
    if isinstance(value, bool):
        raise GraphFormatError("boolean property values are not representable")
    if isinstance(value, float):
        return repr(canonical_number(value))
    if isinstance(value, int):
        return str(value)
    if any(c in value for c in ",;=#\n"):
        raise GraphFormatError(f"text property value {value!r} clashes with delimiters")
    return value


def dump_graph_text(g: PropertyGraph) -> tuple[str, str]:
    """Render the two-file text format; inverse of load_graph."""
    node_lines = []
    for v in g.vertices:
        row = f"{g.original_ids[v.id]},{v.type_label}"
        if v.properties:
            pairs = ";".join(f"{k}={_format_prop_value(v.properties[k])}"
                             for k in sorted(v.properties))
            row += f",{pairs}"
        node_lines.append(row)
    edge_lines = []
    for e in g.edges:
        if e.properties:
            raise GraphFormatError(
                "the text format cannot carry edge properties; use the JSON mirror")
        edge_lines.append(f"{g.original_ids[e.src]},{e.label},{g.original_ids[e.dst]}")
    return "\n".join(node_lines) + "\n", "\n".join(edge_lines) + "\n"


def graph_digest(g: PropertyGraph) -> str:
    return hashlib.sha256(serialize_graph(g).encode("utf-8")).hexdigest()


# -- integrity ----------------------------------------------------------


def audit_adjacency(g: PropertyGraph) -> None:
    """Verify adjacency indexes agree with the edge list. Raises on drift."""
    n = g.num_vertices
    out_ref: list[list[int]] = [[] for _ in range(n)]
    in_ref: list[list[int]] = [[] for _ in range(n)]
    by_label: dict[str, list[int]] = {}
    for eid, e in enumerate(g.edges):
        if not (0 <= e.src < n and 0 <= e.dst < n):
            raise GraphFormatError(f"edge {eid} has out-of-range endpoint")
        out_ref[e.src].append(eid)
        in_ref[e.dst].append(eid)
        by_label.setdefault(e.label, []).append(eid)
    if out_ref != g.out_adj or in_ref != g.in_adj:
        raise GraphFormatError("adjacency indexes disagree with edge list")
    if by_label != g.edges_by_label:
        raise GraphFormatError("label index disagrees with edge list")


def subgraph_edge_ids(g: PropertyGraph, members: Iterable[int]) -> list[int]:
    """Edge ids with both endpoints inside ``members`` (any label)."""
    inside = set(members)
    out: list[int] = []
    for v in sorted(inside):
        for eid in g.out_adj[v]:
            if g.edges[eid].dst in inside:
                out.append(eid)
    return sorted(out)
