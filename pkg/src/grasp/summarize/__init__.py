"""Three-phase graph summarization: partition, evaluate, merge."""
from .grouping import Grouping, Partitioning, Subgrouping, grouping, max_weak_label_components
from .evaluate import (
    AqpProperties,
    Superedge,
    Supergraph,
    Supernode,
    compute_sn_properties,
    efuse,
    evaluate_phase,
    vfuse,
)
from .merge import (
    Hyperedge,
    Hypernode,
    Summary,
    emerge,
    build_summary,
    merge_hn_properties,
    summary_from_json,
    summary_to_json,
    vmerge,
)

__all__ = [
    "AqpProperties", "Grouping", "Hyperedge", "Hypernode", "Partitioning",
    "Subgrouping", "Superedge", "Supergraph", "Supernode", "build_summary",
    "compute_sn_properties", "efuse", "emerge", "evaluate_phase", "grouping",
    "max_weak_label_components", "merge_hn_properties", "summary_from_json",
    "summary_to_json", "vfuse", "vmerge",
]
