"""Property-graph summarization with approximate counting queries.

The pipeline partitions a labeled multigraph into label-connected groups,
condenses them into supernodes carrying counting statistics, and merges
supernodes into hypernodes. Counting path queries run either exactly on the
original graph or approximately against the summary alone.
"""
from .bench import (
    MetricsReport,
    WorkloadSpec,
    compression_ratios,
    generate_workload,
    relative_error,
    run_experiment,
    time_gain,
)
from .errors import (
    GraphFormatError,
    GraspError,
    InputError,
    LabelError,
    QuerySyntaxError,
    UnsupportedFeatureError,
)
from .generate import (
    BUILTIN_SCHEMAS,
    GeneratorSchema,
    bib_schema,
    generate_synthetic,
    resolve_schema,
    shop_schema,
)
from .graph import (
    Edge,
    PropertyGraph,
    Vertex,
    canonical_json,
    dump_graph_text,
    graph_digest,
    graph_to_mirror,
    load_graph,
    load_graph_mirror,
    serialize_graph,
)
from .pipeline import summarize_graph
from .query import (
    CountQuery,
    CountResult,
    TranslatedPlan,
    eval_approx,
    eval_exact,
    parse_query,
    print_query,
    translate,
)
from .summarize import (
    Hyperedge,
    Hypernode,
    Summary,
    Supergraph,
    build_summary,
    evaluate_phase,
    grouping,
    summary_from_json,
    summary_to_json,
)

__version__ = "0.1.0"

__all__ = [
    "BUILTIN_SCHEMAS", "CountQuery", "CountResult", "Edge", "GeneratorSchema",
    "GraphFormatError", "GraspError", "Hyperedge", "Hypernode", "InputError",
    "LabelError", "MetricsReport", "PropertyGraph", "QuerySyntaxError",
    "Summary", "Supergraph", "TranslatedPlan", "UnsupportedFeatureError",
    "Vertex", "WorkloadSpec", "bib_schema", "build_summary", "canonical_json",
    "compression_ratios", "dump_graph_text", "eval_approx", "eval_exact",
    "evaluate_phase", "generate_synthetic", "generate_workload",
    "graph_digest", "graph_to_mirror", "grouping", "load_graph",
    "load_graph_mirror", "parse_query", "print_query", "relative_error",
    "resolve_schema", "run_experiment", "serialize_graph", "shop_schema",
    "summarize_graph", "summary_from_json", "summary_to_json", "time_gain",
    "translate",
]
