"""Command line front end.

Graph arguments accept either a file prefix (expects <prefix>_nodes.txt and
<prefix>_edges.txt) or a path to a JSON mirror file. The query command also
accepts a summary JSON file. Exit code 2 signals any input problem.
"""
from __future__ import annotations

import functools
import json
import sys
from pathlib import Path

import click

from .bench import WorkloadSpec, generate_workload, run_experiment
from .errors import GraspError, InputError
from .generate import BUILTIN_SCHEMAS, generate_synthetic, resolve_schema
from .graph import PropertyGraph, dump_graph_text, load_graph, load_graph_mirror
from .pipeline import summarize_graph
from .query import eval_approx, eval_exact, parse_query, print_query, translate
from .query.translate import NODE_ESTIMATE_MODES
from .summarize import Summary, summary_from_json, summary_to_json
from .summarize.merge import MERGE_MODES


def _fail(message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(2)


def _input_errors(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except GraspError as exc:
            _fail(str(exc))
        except OSError as exc:
            _fail(f"{exc.filename or ''}: {exc.strerror or exc}")
        except json.JSONDecodeError as exc:
            _fail(f"invalid JSON: {exc}")
    return wrapper


def _read_graph(spec: str) -> PropertyGraph:
    path = Path(spec)
    if path.suffix == ".json":
        return load_graph_mirror(path.read_text())
    nodes = Path(f"{spec}_nodes.txt")
    edges = Path(f"{spec}_edges.txt")
    if not nodes.exists() or not edges.exists():
        raise InputError(
            f"expected {nodes} and {edges} (or a single .json mirror file)")
    return load_graph(nodes.read_text(), edges.read_text())


def _read_graph_or_summary(spec: str) -> PropertyGraph | Summary:
    path = Path(spec)
    if path.suffix == ".json":
        obj = json.loads(path.read_text())
        if isinstance(obj, dict) and "hypernodes" in obj:
            return summary_from_json(obj)
        return load_graph_mirror(obj)
    return _read_graph(spec)


def _parse_labels(text: str | None) -> list[str] | None:
    if text is None:
        return None
    return [part for part in (p.strip() for p in text.split(",")) if part]


@click.group()
def main() -> None:
    """Property-graph summaries and approximate counting queries."""


@main.command()
@click.argument("graph")
@click.option("--labels", default=None,
              help="Comma list of edge labels to summarize for (default: all).")
@click.option("--mode", default="target", type=click.Choice(MERGE_MODES),
              show_default=True, help="Hypernode merge heuristic.")
@click.option("-o", "--output", default="summary.json", show_default=True,
              type=click.Path(dir_okay=False, writable=True))
@_input_errors
def summarize(graph: str, labels: str | None, mode: str, output: str) -> None:
    """Build a summary of GRAPH and write it as JSON."""
    g = _read_graph(graph)
    s = summarize_graph(g, _parse_labels(labels), mode)
    Path(output).write_text(summary_to_json(s))
    click.echo(f"{s.num_hypernodes} hypernodes, {s.num_hyperedges} hyperedges "
               f"-> {output}")


@main.command()
@click.argument("source")
@click.option("--query-file", required=True,
              type=click.Path(exists=True, dir_okay=False),
              help="File with one counting query per line.")
@click.option("--region", default=None,
              help="Comma list of hypernode ids restricting approximate runs.")
@click.option("--exact", "engine", flag_value="exact",
              help="Run the brute-force engine (needs a graph).")
@click.option("--approx", "engine", flag_value="approx",
              help="Run the summary engine (summarizes a graph on the fly).")
@click.option("--node-estimate", default="exact",
              type=click.Choice(NODE_ESTIMATE_MODES), show_default=True)
@_input_errors
def query(source: str, query_file: str, region: str | None,
          engine: str | None, node_estimate: str) -> None:
    """Evaluate counting queries from a file against SOURCE."""
    if engine is None:
        raise InputError("choose one of --exact or --approx")
    loaded = _read_graph_or_summary(source)
    region_ids: set[int] | None = None
    if region is not None:
        try:
            region_ids = {int(p) for p in region.split(",") if p.strip()}
        except ValueError:
            raise InputError("--region takes a comma list of integer ids") from None

    if engine == "exact":
        if isinstance(loaded, Summary):
            raise InputError("--exact needs the original graph, not a summary")
        if region_ids is not None:
            raise InputError("--region only applies to --approx")
        run = lambda q: eval_exact(loaded, q).value
    else:
        s = loaded if isinstance(loaded, Summary) else summarize_graph(loaded)
        run = lambda q: eval_approx(s, translate(q, node_estimate), region_ids).value

    rows = []
    for raw in Path(query_file).read_text().splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        q = parse_query(line)
        rows.append({"query": print_query(q), "value": run(q)})
    click.echo(json.dumps({"engine": engine, "results": rows}, indent=2))


@main.command()
@click.argument("graph")
@click.option("--workload", required=True,
              help="JSON file, or inline counts like single=4,kleene_plus=2.")
@click.option("--mode", default="target", type=click.Choice(MERGE_MODES),
              show_default=True)
@click.option("--labels", default=None,
              help="Comma list of labels to summarize for (default: all).")
@click.option("--seed", default=0, show_default=True,
              help="Workload sampling seed (JSON file value wins).")
@click.option("--node-estimate", default="exact",
              type=click.Choice(NODE_ESTIMATE_MODES), show_default=True)
@click.option("--no-timing", is_flag=True,
              help="Skip timing for byte-reproducible reports.")
@click.option("-o", "--output", default="report.json", show_default=True,
              type=click.Path(dir_okay=False, writable=True))
@click.option("--csv", "csv_out", default=None,
              type=click.Path(dir_okay=False, writable=True),
              help="Also write the per-query rows as CSV.")
@_input_errors
def bench(graph: str, workload: str, mode: str, labels: str | None, seed: int,
          node_estimate: str, no_timing: bool, output: str,
          csv_out: str | None) -> None:
    """Race both engines over a generated workload and write a report."""
    g = _read_graph(graph)
    spec = _parse_workload_spec(workload, seed)
    queries = generate_workload(g, spec)
    report = run_experiment(g, _parse_labels(labels), mode, queries,
                            node_estimate=node_estimate,
                            measure_time=not no_timing)
    Path(output).write_text(report.to_json())
    if csv_out:
        Path(csv_out).write_text(report.to_csv())
    click.echo(f"{len(report.rows)} queries, "
               f"mean relative error {report.mean_relative_error_pct:.2f}%, "
               f"vertex CR {report.vertex_cr_pct:.2f}%, "
               f"edge CR {report.edge_cr_pct:.2f}% -> {output}")


def _parse_workload_spec(text: str, seed: int) -> WorkloadSpec:
    path = Path(text)
    if path.suffix == ".json" or path.exists():
        obj = json.loads(path.read_text())
        if not isinstance(obj, dict) or "counts" not in obj:
            raise InputError("workload file needs a counts object")
        return WorkloadSpec(counts=dict(obj["counts"]),
                            seed=int(obj.get("seed", seed)))
    counts: dict[str, int] = {}
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        kind, _, num = part.partition("=")
        if not num:
            raise InputError(f"bad workload entry {part!r}, expected kind=count")
        try:
            counts[kind.strip()] = int(num)
        except ValueError:
            raise InputError(f"bad workload count in {part!r}") from None
    spec = WorkloadSpec(counts=counts, seed=seed)
    spec.validate()
    return spec


@main.command()
@click.option("--schema", required=True,
              help=f"Builtin name ({', '.join(sorted(BUILTIN_SCHEMAS))}) "
                   "or a JSON schema file.")
@click.option("--size", required=True, type=int, help="Target vertex count.")
@click.option("--seed", default=0, show_default=True)
@click.option("-o", "--output", "prefix", required=True,
              help="Output prefix; writes <prefix>_nodes.txt and <prefix>_edges.txt.")
@_input_errors
def gen(schema: str, size: int, seed: int, prefix: str) -> None:
    """Generate a synthetic graph from a schema."""
    resolved = resolve_schema(schema)
    g = generate_synthetic(resolved, size, seed)
    nodes_text, edges_text = dump_graph_text(g)
    Path(f"{prefix}_nodes.txt").write_text(nodes_text)
    Path(f"{prefix}_edges.txt").write_text(edges_text)
    click.echo(f"{g.num_vertices} vertices, {g.num_edges} edges -> "
               f"{prefix}_nodes.txt / {prefix}_edges.txt")


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True,
              envvar="GRASP_HOST")
@click.option("--port", default=8000, show_default=True, envvar="GRASP_PORT",
              type=int)
@click.option("--persist-dir", default=None, envvar="GRASP_PERSIST_DIR",
              type=click.Path(file_okay=False),
              help="Directory for write-through snapshot persistence.")
@click.option("--max-graph-bytes", default=None, envvar="GRASP_MAX_GRAPH_BYTES",
              type=int, help="Reject graph uploads larger than this.")
@click.option("--ui-dir", default=None, envvar="GRASP_UI_DIR",
              type=click.Path(file_okay=False),
              help="Static directory mounted at /ui.")
@_input_errors
def serve(host: str, port: int, persist_dir: str | None,
          max_graph_bytes: int | None, ui_dir: str | None) -> None:
    """Run the HTTP service."""
    import uvicorn

    from .service import DEFAULT_MAX_GRAPH_BYTES, create_app

    app = create_app(persist_dir=persist_dir,
                     max_graph_bytes=max_graph_bytes or DEFAULT_MAX_GRAPH_BYTES,
                     ui_dir=ui_dir)
    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
