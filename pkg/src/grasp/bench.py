"""Accuracy, speed, and compression metrics plus the experiment runner.

The runner follows a drop-first protocol: every query runs six times per
engine, the first timing is discarded as warm-up, and the remaining five are
averaged. Timings use the monotonic clock and are reported in microseconds.
"""
from __future__ import annotations

import csv
import io
import random
import time
from dataclasses import dataclass, field

from .errors import InputError
from .graph import PropertyGraph, canonical_json
from .pipeline import summarize_graph
from .query import eval_approx, eval_exact, parse_query, translate
from .summarize import Summary


def relative_error(exact: float, estimate: float) -> float:
    """Symmetric percentage error: 100 * (1 - min/max).

    Both values zero count as a perfect answer (0); a zero against a
    non-zero is a total miss (100).
    """
    a, b = abs(exact), abs(estimate)
    if a == 0.0 and b == 0.0:
        return 0.0
    if a == 0.0 or b == 0.0:
        return 100.0
    return 100.0 * (1.0 - min(a, b) / max(a, b))


def time_gain(t_exact: float, t_approx: float) -> tuple[float, bool]:
    """Speed-up percentage (t_exact - t_approx) / max * 100.

    Returns (value, defined): with both timings zero the gain is undefined
    and reported as 0 with defined=False.
    """
    m = max(t_exact, t_approx)
    if m == 0.0:
        return 0.0, False
    return 100.0 * (t_exact - t_approx) / m, True


def compression_ratios(g: PropertyGraph, s: Summary) -> tuple[float, float]:
    """Vertex and edge compression percentages of the summary over g."""
    if g.num_vertices == 0:
        raise InputError("compression is undefined for an empty graph")
    vertex_cr = (1.0 - s.num_hypernodes / g.num_vertices) * 100.0
    edge_cr = 100.0 if g.num_edges == 0 else \
        (1.0 - s.num_hyperedges / g.num_edges) * 100.0
    return vertex_cr, edge_cr


# -- workloads -----------------------------------------------------------

QUERY_KINDS = ("single", "inverse", "optional", "disjunction",
               "kleene_plus", "kleene_star", "concatenation")

_CONCAT_SHAPES = {
    (1, 1): "() -[{a}]-> () <-[{b}]- ()",
    (1, 2): "() -[{a}]-> () -[{b}]-> ()",
    (2, 1): "() <-[{a}]- () <-[{b}]- ()",
    (2, 2): "() <-[{a}]- () -[{b}]-> ()",
}


@dataclass(frozen=True)
class WorkloadSpec:
    counts: dict[str, int]
    seed: int = 0

    def validate(self) -> None:
        unknown = set(self.counts) - set(QUERY_KINDS)
        if unknown:
            raise InputError(f"unknown query kinds: {sorted(unknown)}")
        if any(c < 0 for c in self.counts.values()):
            raise InputError("workload counts must be non-negative")


def generate_workload(g: PropertyGraph, spec: WorkloadSpec) -> list[str]:
    """Sample query texts label-uniformly without repetition per kind.

    Each kind draws from its own pool (labels, label pairs, or label pairs
    with a direction shape); a kind stops early when its pool runs out, so
    the result can be shorter than requested on label-poor graphs.
    """
    spec.validate()
    labels = g.labels()
    rng = random.Random(spec.seed)
    out: list[str] = []
    for kind in QUERY_KINDS:
        want = spec.counts.get(kind, 0)
        if want == 0 or not labels:
            continue
        if kind == "single":
            pool = [f"COUNT () -[{l}]-> ()" for l in labels]
        elif kind == "inverse":
            pool = [f"COUNT () <-[{l}]- ()" for l in labels]
        elif kind == "optional":
            pool = [f"COUNT () -[{l}?]-> ()" for l in labels]
        elif kind == "kleene_plus":
            pool = [f"COUNT () -/{l}+/-> ()" for l in labels]
        elif kind == "kleene_star":
            pool = [f"COUNT () -/{l}*/-> ()" for l in labels]
        elif kind == "disjunction":
            pool = [f"COUNT () -[{a}|{b}]-> ()"
                    for a in labels for b in labels if a != b]
        else:
            pool = [shape.format(a=a, b=b)
                    for a in labels for b in labels
                    for shape in (_CONCAT_SHAPES[v] for v in sorted(_CONCAT_SHAPES))]
            pool = [f"COUNT {body}" for body in pool]
        take = min(want, len(pool))
        out.extend(rng.sample(pool, take))
    return out


# -- experiment runner ----------------------------------------------------


@dataclass
class ReportRow:
    query: str
    exact_value: float
    estimate: float
    relative_error_pct: float
    exact_us: float
    approx_us: float
    time_gain_pct: float
    time_gain_defined: bool


@dataclass
class MetricsReport:
    mode: str
    node_estimate: str
    vertex_cr_pct: float
    edge_cr_pct: float
    summary_construction_us: float
    rows: list[ReportRow] = field(default_factory=list)

    @property
    def mean_relative_error_pct(self) -> float:
        if not self.rows:
            return 0.0
        return sum(r.relative_error_pct for r in self.rows) / len(self.rows)

    @property
    def mean_time_gain_pct(self) -> float:
        rows = [r for r in self.rows if r.time_gain_defined]
        if not rows:
            return 0.0
        return sum(r.time_gain_pct for r in rows) / len(rows)

    def to_obj(self) -> dict:
        return {
            "mode": self.mode,
            "node_estimate": self.node_estimate,
            "vertex_cr_pct": self.vertex_cr_pct,
            "edge_cr_pct": self.edge_cr_pct,
            "summary_construction_us": self.summary_construction_us,
            "mean_relative_error_pct": self.mean_relative_error_pct,
            "mean_time_gain_pct": self.mean_time_gain_pct,
            "rows": [
                {
                    "query": r.query,
                    "exact_value": r.exact_value,
                    "estimate": r.estimate,
                    "relative_error_pct": r.relative_error_pct,
                    "exact_us": r.exact_us,
                    "approx_us": r.approx_us,
                    "time_gain_pct": r.time_gain_pct,
                    "time_gain_defined": r.time_gain_defined,
                }
                for r in self.rows
            ],
        }

    def to_json(self) -> str:
        return canonical_json(self.to_obj())

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["query", "exact_value", "estimate", "relative_error_pct",
                         "exact_us", "approx_us", "time_gain_pct"])
        for r in self.rows:
            writer.writerow([r.query, f"{r.exact_value:.12g}", f"{r.estimate:.12g}",
                             f"{r.relative_error_pct:.12g}", f"{r.exact_us:.12g}",
                             f"{r.approx_us:.12g}", f"{r.time_gain_pct:.12g}"])
        return buf.getvalue()


def _timed(fn, repetitions: int, measure: bool) -> tuple[float, float]:
    """(result, mean microseconds) running fn ``repetitions`` times and
    dropping the first timing."""
    if not measure:
        return fn(), 0.0
    timings = []
    result = None
    for _ in range(repetitions):
        start = time.perf_counter_ns()
        result = fn()
        timings.append((time.perf_counter_ns() - start) / 1000.0)
    kept = timings[1:] if len(timings) > 1 else timings
    return result, sum(kept) / len(kept)


def run_experiment(g: PropertyGraph, query_labels, mode: str,
                   workload: list[str], node_estimate: str = "exact",
                   repetitions: int = 6, measure_time: bool = True) -> MetricsReport:
    """Summarize ``g`` once, then race both engines on every query."""
    if repetitions < 1:
        raise InputError("need at least one repetition")
    start = time.perf_counter_ns()
    summary = summarize_graph(g, query_labels, mode)
    sct_us = (time.perf_counter_ns() - start) / 1000.0 if measure_time else 0.0
    vertex_cr, edge_cr = compression_ratios(g, summary)

    report = MetricsReport(
        mode=mode,
        node_estimate=node_estimate,
        vertex_cr_pct=vertex_cr,
        edge_cr_pct=edge_cr,
        summary_construction_us=sct_us,
    )
    for text in workload:
        query = parse_query(text)
        plan = translate(query, node_estimate)
        exact_res, exact_us = _timed(lambda: eval_exact(g, query),
                                     repetitions, measure_time)
        approx_res, approx_us = _timed(lambda: eval_approx(summary, plan),
                                       repetitions, measure_time)
        gain, defined = time_gain(exact_us, approx_us)
        report.rows.append(ReportRow(
            query=text,
            exact_value=exact_res.value,
            estimate=approx_res.value,
            relative_error_pct=relative_error(exact_res.value, approx_res.value),
            exact_us=exact_us,
            approx_us=approx_us,
            time_gain_pct=gain,
            time_gain_defined=defined,
        ))
    return report
