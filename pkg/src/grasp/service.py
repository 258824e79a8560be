"""HTTP facade over immutable graph and summary snapshots.

Snapshots live in an in-memory registry guarded by a lock; response bodies
for the GET endpoints are rendered once at creation time so repeated reads
are byte-identical. An optional persistence directory receives write-through
canonical JSON copies and is reloaded on startup.
"""
from __future__ import annotations

import json
import logging
import threading
import time
from pathlib import Path

from fastapi import FastAPI, Request, Response
from fastapi.staticfiles import StaticFiles

from .bench import compression_ratios, relative_error, time_gain
from .errors import (
    GraphFormatError,
    InputError,
    LabelError,
    QuerySyntaxError,
    UnsupportedFeatureError,
)
from .graph import (
    PropertyGraph,
    canonical_json,
    graph_to_mirror,
    label_frequencies,
    load_graph,
    load_graph_mirror,
)
from .pipeline import summarize_graph
from .query import eval_approx, eval_exact, parse_query, print_query, translate
from .query.translate import NODE_ESTIMATE_MODES
from .summarize import Summary, summary_from_json
from .summarize.merge import MERGE_MODES, summary_to_obj

log = logging.getLogger(__name__)

DEFAULT_MAX_GRAPH_BYTES = 64 * 1024 * 1024

PALETTE = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
)
RESIDUAL_COLOR = "#999999"


def _json_response(obj, status_code: int = 200) -> Response:
    body = obj if isinstance(obj, str) else canonical_json(obj)
    return Response(content=body, status_code=status_code,
                    media_type="application/json")


def _error_response(status_code: int, message: str) -> Response:
    return _json_response({"error": message}, status_code)


def _color_map(s: Summary) -> dict[str, str]:
    labels = {he.label for he in s.hyperedges}
    labels.update(hn.dominant_label for hn in s.hypernodes
                  if hn.dominant_label is not None)
    return {l: PALETTE[i % len(PALETTE)] for i, l in enumerate(sorted(labels))}


def treemap_payload(summary_id: str, graph_id: str, s: Summary) -> dict:
    """Renderer-agnostic treemap description: weights only, no geometry."""
    colors = _color_map(s)
    cells = []
    for hn in sorted(s.hypernodes, key=lambda h: h.id):
        top = sorted(hn.props.lpercent.items(), key=lambda kv: (-kv[1], kv[0]))[:3]
        cells.append({
            "id": hn.id,
            "area": hn.props.vweight,
            "label": hn.dominant_label,
            "color": colors.get(hn.dominant_label, RESIDUAL_COLOR),
            "tooltip": {
                "eweight": hn.props.eweight,
                "supernode_count": hn.supernode_count,
                "top_lpercent": [{"label": l, "percent": p} for l, p in top],
            },
        })
    links = [
        {"src": he.src, "dst": he.dst, "label": he.label,
         "weight": he.weight, "color": colors[he.label]}
        for he in s.hyperedges
    ]
    totals: dict[str, int] = {}
    for he in s.hyperedges:
        totals[he.label] = totals.get(he.label, 0) + he.weight
    legend = [{"label": l, "color": colors[l], "total_weight": totals[l]}
              for l in sorted(totals)]
    return {
        "summary_id": summary_id,
        "graph_id": graph_id,
        "mode": s.mode,
        "cells": cells,
        "links": links,
        "legend": legend,
    }


class _GraphSnapshot:
    __slots__ = ("id", "graph", "stats_body", "created_at")

    def __init__(self, snap_id: str, graph: PropertyGraph, created_at: float):
        self.id = snap_id
        self.graph = graph
        self.created_at = created_at
        self.stats_body = canonical_json({
            "id": snap_id,
            "num_vertices": graph.num_vertices,
            "num_edges": graph.num_edges,
            "labels": [{"label": l, "count": c}
                       for l, c in label_frequencies(graph)],
        })


class _SummarySnapshot:
    __slots__ = ("id", "graph_id", "summary", "meta_body", "treemap_body",
                 "created_at")

    def __init__(self, snap_id: str, graph_id: str, summary: Summary,
                 meta: dict, created_at: float):
        self.id = snap_id
        self.graph_id = graph_id
        self.summary = summary
        self.created_at = created_at
        self.meta_body = canonical_json(meta)
        self.treemap_body = canonical_json(
            treemap_payload(snap_id, graph_id, summary))


class SnapshotRegistry:
    """Immutable snapshots behind counter ids; insertion is the only lock."""

    def __init__(self, persist_dir: str | Path | None = None):
        self._lock = threading.Lock()
        self._graphs: dict[str, _GraphSnapshot] = {}
        self._summaries: dict[str, _SummarySnapshot] = {}
        self._graph_seq = 0
        self._summary_seq = 0
        self._persist_dir = Path(persist_dir) if persist_dir else None
        if self._persist_dir:
            self._load_persisted()

    # -- persistence ------------------------------------------------------

    def _load_persisted(self) -> None:
        gdir = self._persist_dir / "graphs"
        sdir = self._persist_dir / "summaries"
        gdir.mkdir(parents=True, exist_ok=True)
        sdir.mkdir(parents=True, exist_ok=True)
        for path in sorted(gdir.glob("*.json")):
            record = json.loads(path.read_text())
            graph = load_graph_mirror(record["graph"])
            snap = _GraphSnapshot(record["id"], graph, record["created_at"])
            self._graphs[snap.id] = snap
            self._graph_seq = max(self._graph_seq, int(snap.id[1:]))
        for path in sorted(sdir.glob("*.json")):
            record = json.loads(path.read_text())
            summary = summary_from_json(record["summary"])
            snap = _SummarySnapshot(record["id"], record["graph_id"], summary,
                                    record["meta"], record["created_at"])
            self._summaries[snap.id] = snap
            self._summary_seq = max(self._summary_seq, int(snap.id[1:]))
        if self._graphs or self._summaries:
            log.info("reloaded %d graphs, %d summaries from %s",
                     len(self._graphs), len(self._summaries), self._persist_dir)

    def _persist_graph(self, snap: _GraphSnapshot) -> None:
        if not self._persist_dir:
            return
        path = self._persist_dir / "graphs" / f"{snap.id}.json"
        path.write_text(canonical_json({
            "id": snap.id,
            "created_at": snap.created_at,
            "graph": graph_to_mirror(snap.graph),
        }))

    def _persist_summary(self, snap: _SummarySnapshot) -> None:
        if not self._persist_dir:
            return
        path = self._persist_dir / "summaries" / f"{snap.id}.json"
        path.write_text(canonical_json({
            "id": snap.id,
            "graph_id": snap.graph_id,
            "created_at": snap.created_at,
            "meta": json.loads(snap.meta_body),
            "summary": summary_to_obj(snap.summary),
        }))

    # -- insertion / lookup -----------------------------------------------

    def add_graph(self, graph: PropertyGraph) -> _GraphSnapshot:
        with self._lock:
            self._graph_seq += 1
            snap = _GraphSnapshot(f"g{self._graph_seq}", graph, time.time())
            self._graphs[snap.id] = snap
            self._persist_graph(snap)
        return snap

    def add_summary(self, graph_id: str, summary: Summary,
                    meta: dict) -> _SummarySnapshot:
        with self._lock:
            self._summary_seq += 1
            snap_id = f"s{self._summary_seq}"
            snap = _SummarySnapshot(snap_id, graph_id, summary,
                                    {"id": snap_id, **meta}, time.time())
            self._summaries[snap.id] = snap
            self._persist_summary(snap)
        return snap

    def graph(self, snap_id: str) -> _GraphSnapshot | None:
        return self._graphs.get(snap_id)

    def summary(self, snap_id: str) -> _SummarySnapshot | None:
        return self._summaries.get(snap_id)


def _build_graph(body: dict) -> PropertyGraph:
    nodes = body.get("nodes", "")
    edges = body.get("edges", "")
    if isinstance(nodes, list) or isinstance(edges, list):
        return load_graph_mirror({"nodes": nodes or [], "edges": edges or []})
    if not isinstance(nodes, str) or not isinstance(edges, str):
        raise InputError("nodes and edges must both be text or both be arrays")
    return load_graph(nodes, edges)


def create_app(persist_dir: str | Path | None = None,
               max_graph_bytes: int = DEFAULT_MAX_GRAPH_BYTES,
               ui_dir: str | Path | None = None) -> FastAPI:
    app = FastAPI(title="grasp", docs_url=None, redoc_url=None)
    registry = SnapshotRegistry(persist_dir)
    app.state.registry = registry

    @app.post("/graphs")
    async def post_graph(request: Request) -> Response:
        raw = await request.body()
        if len(raw) > max_graph_bytes:
            return _error_response(413, f"graph body exceeds {max_graph_bytes} bytes")
        try:
            body = json.loads(raw) if raw else {}
        except ValueError as exc:
            return _error_response(400, f"invalid JSON body: {exc}")
        if not isinstance(body, dict):
            return _error_response(400, "body must be a JSON object")
        try:
            graph = _build_graph(body)
        except (GraphFormatError, LabelError, InputError) as exc:
            return _error_response(400, str(exc))
        snap = registry.add_graph(graph)
        return _json_response({
            "id": snap.id,
            "num_vertices": graph.num_vertices,
            "num_edges": graph.num_edges,
        }, 201)

    @app.get("/graphs/{graph_id}/stats")
    def graph_stats(graph_id: str) -> Response:
        snap = registry.graph(graph_id)
        if snap is None:
            return _error_response(404, f"unknown graph {graph_id}")
        return _json_response(snap.stats_body)

    @app.post("/graphs/{graph_id}/summaries")
    async def post_summary(graph_id: str, request: Request) -> Response:
        snap = registry.graph(graph_id)
        if snap is None:
            return _error_response(404, f"unknown graph {graph_id}")
        raw = await request.body()
        try:
            body = json.loads(raw) if raw else {}
        except ValueError as exc:
            return _error_response(400, f"invalid JSON body: {exc}")
        mode = body.get("mode", "target")
        if mode not in MERGE_MODES:
            return _error_response(400, f"mode must be one of {list(MERGE_MODES)}")
        labels = body.get("labels")
        if labels is not None and (
                not isinstance(labels, list)
                or any(not isinstance(l, str) for l in labels)):
            return _error_response(400, "labels must be an array of strings")
        start = time.perf_counter_ns()
        try:
            summary = summarize_graph(snap.graph, labels, mode)
        except (LabelError, InputError) as exc:
            return _error_response(400, str(exc))
        sct_us = (time.perf_counter_ns() - start) / 1000.0
        if snap.graph.num_vertices == 0:
            vertex_cr, edge_cr = 0.0, 0.0
        else:
            vertex_cr, edge_cr = compression_ratios(snap.graph, summary)
        ssnap = registry.add_summary(graph_id, summary, {
            "graph_id": graph_id,
            "mode": mode,
            "num_hypernodes": summary.num_hypernodes,
            "num_hyperedges": summary.num_hyperedges,
            "vertex_cr_pct": vertex_cr,
            "edge_cr_pct": edge_cr,
            "construction_us": sct_us,
        })
        return _json_response(ssnap.meta_body, 201)

    @app.get("/summaries/{summary_id}/treemap")
    def get_treemap(summary_id: str) -> Response:
        snap = registry.summary(summary_id)
        if snap is None:
            return _error_response(404, f"unknown summary {summary_id}")
        return _json_response(snap.treemap_body)

    @app.post("/summaries/{summary_id}/query")
    async def post_query(summary_id: str, request: Request) -> Response:
        snap = registry.summary(summary_id)
        if snap is None:
            return _error_response(404, f"unknown summary {summary_id}")
        raw = await request.body()
        try:
            body = json.loads(raw) if raw else {}
        except ValueError as exc:
            return _error_response(400, f"invalid JSON body: {exc}")
        text = body.get("query")
        if not isinstance(text, str):
            return _error_response(400, "body must carry a query string")
        region_list = body.get("region")
        region: set[int] | None = None
        if region_list is not None:
            if not isinstance(region_list, list) \
                    or any(not isinstance(x, int) for x in region_list):
                return _error_response(400, "region must be an array of hypernode ids")
            region = set(region_list)
        node_estimate = body.get("node_estimate", "exact")
        if node_estimate not in NODE_ESTIMATE_MODES:
            return _error_response(
                400, f"node_estimate must be one of {list(NODE_ESTIMATE_MODES)}")
        try:
            query = parse_query(text)
        except QuerySyntaxError as exc:
            return _error_response(400, str(exc))
        try:
            plan = translate(query, node_estimate)
        except UnsupportedFeatureError as exc:
            return _error_response(422, str(exc))
        start = time.perf_counter_ns()
        try:
            approx = eval_approx(snap.summary, plan, region)
        except InputError as exc:
            return _error_response(400, str(exc))
        approx_us = (time.perf_counter_ns() - start) / 1000.0
        record = {
            "query": print_query(query),
            "estimate": approx.value,
            "region": sorted(region) if region is not None else None,
        }
        if body.get("compare_exact"):
            gsnap = registry.graph(snap.graph_id)
            if gsnap is None:
                return _error_response(
                    400, "source graph is no longer available for comparison")
            start = time.perf_counter_ns()
            exact = eval_exact(gsnap.graph, query)
            exact_us = (time.perf_counter_ns() - start) / 1000.0
            gain, defined = time_gain(exact_us, approx_us)
            record["exact"] = {
                "value": exact.value,
                "relative_error_pct": relative_error(exact.value, approx.value),
                "exact_us": exact_us,
                "approx_us": approx_us,
                "time_gain_pct": gain if defined else None,
            }
        return _json_response(record)

    if ui_dir and Path(ui_dir).is_dir():
        app.mount("/ui", StaticFiles(directory=str(ui_dir), html=True), name="ui")

    return app
