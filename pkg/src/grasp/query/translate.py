"""Translation of count queries into summary aggregation plans.

A plan is a flat list of terms; each term sums one expression over the
summary's hypernodes or hyperedges. Node-count terms come in two flavors,
selected by ``node_estimate``:

* ``exact``: per hypernode avg_sn_vweight * supernode_count, which telescopes
  to vweight, so full-region node counts reproduce |V| without rounding
* ``mean-scaled``: avg_sn_vweight * vweight, the mean member weight scaled
  by the hypernode's own weight (biased upward on uneven partitions)

Two-hop plans pair the meeting statistics with hyperedge weights: matches
where both legs are inner edges use eweight * min(lpercent); matches with a
cross leg scale the hyperedge weight by the per-frontier-vertex traversal
rate delta / frontier; matches where both legs cross meet in ereach.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..errors import UnsupportedFeatureError
from .ast import (Concatenation, CountQuery, Disjunction, Epsilon,
                  InverseLabel, KleenePlus, KleeneStar, OptionalLabel,
                  SingleLabel)

NODE_ESTIMATE_MODES = ("exact", "mean-scaled")


@dataclass(frozen=True)
class LabelEdgeMass:
    """Node term: sum of inner-edge counts for one or two labels
    (lpercent * eweight, kept in integer form)."""
    labels: tuple[str, ...]


@dataclass(frozen=True)
class NodeCountTerm:
    mode: str  # exact | mean-scaled


@dataclass(frozen=True)
class ReachPairs:
    """Node term: lreach[label], counted where positive."""
    label: str


@dataclass(frozen=True)
class InnerConcat:
    """Node term: eweight * min(lpercent[l1], lpercent[l2])."""
    first: str
    second: str


@dataclass(frozen=True)
class CrossMeet:
    """Node term: ereach[(l1, l2, m1, m2)] with m the endpoint index at the
    shared vertex."""
    first: str
    second: str
    m1: int
    m2: int


@dataclass(frozen=True)
class EdgeWeightSum:
    """Edge term: total weight of hyperedges whose label matches."""
    labels: tuple[str, ...]


@dataclass(frozen=True)
class TraversalRate:
    """Edge term for cross/inner two-hop matches: for each hyperedge labeled
    ``cross_label``, scale its weight by the anchor hypernode's traversal
    rate delta / frontier. The anchor is the endpoint where the middle
    vertex lives: the source when m_cross is 1, else the target. Hypernodes
    with an empty frontier contribute zero."""
    cross_label: str
    inner_label: str
    m_cross: int
    m_inner: int


PlanTerm = (LabelEdgeMass | NodeCountTerm | ReachPairs | InnerConcat |
            CrossMeet | EdgeWeightSum | TraversalRate)


@dataclass(frozen=True)
class TranslatedPlan:
    terms: tuple[PlanTerm, ...]


def translate(q: CountQuery, node_estimate: str = "exact") -> TranslatedPlan:
    """Build the aggregation plan for ``q``.

    Raises UnsupportedFeatureError for filtered queries: summaries do not
    retain per-vertex properties, so comparisons cannot be answered.
    """
    if node_estimate not in NODE_ESTIMATE_MODES:
        raise UnsupportedFeatureError(f"unknown node-estimate mode {node_estimate!r}")
    if q.has_filters:
        raise UnsupportedFeatureError(
            "comparison filters require vertex properties, which summaries do not keep")
    p = q.path
    if isinstance(p, Epsilon):
        terms: tuple[PlanTerm, ...] = (NodeCountTerm(node_estimate),)
    elif isinstance(p, (SingleLabel, InverseLabel)):
        terms = (LabelEdgeMass((p.label,)), EdgeWeightSum((p.label,)))
    elif isinstance(p, OptionalLabel):
        terms = (LabelEdgeMass((p.label,)), EdgeWeightSum((p.label,)),
                 NodeCountTerm(node_estimate))
    elif isinstance(p, KleenePlus):
        terms = (ReachPairs(p.label), EdgeWeightSum((p.label,)))
    elif isinstance(p, KleeneStar):
        terms = (ReachPairs(p.label), EdgeWeightSum((p.label,)),
                 NodeCountTerm(node_estimate))
    elif isinstance(p, Disjunction):
        terms = (LabelEdgeMass((p.left, p.right)),
                 EdgeWeightSum((p.left, p.right)))
    elif isinstance(p, Concatenation):
        m1, m2 = 3 - p.d1, 3 - p.d2
        terms = (
            TraversalRate(p.first, p.second, m1, m2),
            TraversalRate(p.second, p.first, m2, m1),
            InnerConcat(p.first, p.second),
            CrossMeet(p.first, p.second, m1, m2),
        )
    else:
        raise TypeError(f"unknown path type {type(p).__name__}")
    return TranslatedPlan(terms)
