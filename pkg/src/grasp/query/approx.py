"""Plan evaluation over a summary, optionally restricted to a region."""
from __future__ import annotations

from ..errors import InputError
from ..summarize import Hypernode, Summary
from .exact import CountResult
from .translate import (CrossMeet, EdgeWeightSum, InnerConcat, LabelEdgeMass,
                        NodeCountTerm, ReachPairs, TranslatedPlan,
                        TraversalRate)


def _node_sum(hns: list[Hypernode], term) -> float:
    if isinstance(term, LabelEdgeMass):
        return float(sum(hn.props.label_counts.get(l, 0)
                         for hn in hns for l in term.labels))
    if isinstance(term, NodeCountTerm):
        if term.mode == "exact":
            # avg_sn_vweight * supernode_count telescopes to vweight
            return float(sum(hn.props.vweight for hn in hns))
        return sum(hn.props.avg_sn_vweight * hn.props.vweight for hn in hns)
    if isinstance(term, ReachPairs):
        return float(sum(hn.props.lreach.get(term.label, 0) for hn in hns))
    if isinstance(term, InnerConcat):
        return sum(
            hn.props.eweight * min(hn.props.lpercent.get(term.first, 0.0),
                                   hn.props.lpercent.get(term.second, 0.0))
            for hn in hns)
    if isinstance(term, CrossMeet):
        key = (term.first, term.second, term.m1, term.m2)
        return float(sum(hn.props.ereach.get(key, 0) for hn in hns))
    raise TypeError(f"not a node term: {type(term).__name__}")


def eval_approx(s: Summary, plan: TranslatedPlan,
                region: set[int] | None = None) -> CountResult:
    """Sum the plan terms over the summary.

    ``region`` restricts node terms to the listed hypernodes and edge terms
    to hyperedges with BOTH endpoints inside; None means the whole summary.
    An empty region therefore evaluates to zero.
    """
    by_id = {hn.id: hn for hn in s.hypernodes}
    if region is None:
        hns = s.hypernodes
        hes = s.hyperedges
    else:
        unknown = region - set(by_id)
        if unknown:
            raise InputError(f"region references unknown hypernodes {sorted(unknown)}")
        hns = [hn for hn in s.hypernodes if hn.id in region]
        hes = [he for he in s.hyperedges if he.src in region and he.dst in region]

    total = 0.0
    for term in plan.terms:
        if isinstance(term, EdgeWeightSum):
            total += sum(he.weight for he in hes if he.label in term.labels)
        elif isinstance(term, TraversalRate):
            for he in hes:
                if he.label != term.cross_label:
                    continue
                anchor = by_id[he.src if term.m_cross == 1 else he.dst]
                frontier = anchor.props.frontier.get((term.cross_label, term.m_cross), 0)
                if not frontier:
                    continue
                meets = anchor.props.delta.get(
                    (term.cross_label, term.inner_label, term.m_cross, term.m_inner), 0)
                if meets:
                    total += meets / frontier * he.weight
        else:
            total += _node_sum(hns, term)
    return CountResult(total, exact=False)
