"""End-to-end summarization entry point."""
from __future__ import annotations

import logging

from .errors import InputError
from .graph import PropertyGraph
from .summarize import Summary, build_summary, evaluate_phase, grouping

log = logging.getLogger(__name__)


def summarize_graph(g: PropertyGraph, query_labels=None, mode: str = "target",
                    stat_labels: set[str] | None = None) -> Summary:
    """Partition, evaluate, and merge ``g`` into a Summary.

    ``query_labels`` is recorded on the summary; labels that do not occur in
    the graph are logged and dropped. ``stat_labels`` optionally restricts
    the per-label statistics (defaults to every label in the graph).
    """
    present = set(g.edges_by_label)
    requested = tuple(query_labels) if query_labels else ()
    unknown = [l for l in requested if l not in present]
    if unknown:
        log.warning("query labels not in graph, ignoring: %s", ",".join(sorted(unknown)))
    kept = tuple(l for l in requested if l in present)
    if stat_labels is not None and not set(kept) <= stat_labels:
        raise InputError("statistics labels must cover the query labels")
    part = grouping(g)
    sg = evaluate_phase(part, g, stat_labels)
    return build_summary(sg, g, mode, query_labels=kept, labels=stat_labels)
