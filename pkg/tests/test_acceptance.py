"""Acceptance gate for the whole pipeline.

Six blocks, each with its stated tolerance and time budget:

1. golden counts and estimates on the social graph fixture (< 1s),
2. partition properties P1-P4 plus weight conservation on 200 seeded
   random graphs under both merge heuristics (< 30s),
3. estimate exactness for the bookkeeping query classes on that corpus,
   plus bounded Kleene-plus error on ~5K-vertex citation-shaped graphs
   (< 5 min),
4. compression at desk scale: >= 90% on the citation shape, reported on
   the 80-label shop shape (< 2 min),
5. positive mean time gain for the non-disjunction workload on the 5K
   citation graph,
6. region monotonicity over 100 random (summary, query, region) triples
   (< 30s).
"""
import random
import time

import pytest

import corpus
from grasp.bench import WorkloadSpec, generate_workload, relative_error, run_experiment
from grasp.generate import bib_schema, generate_synthetic, shop_schema
from grasp.graph import label_frequencies
from grasp.pipeline import summarize_graph
from grasp.query import parse_query, translate
from grasp.query.approx import eval_approx
from grasp.query.exact import eval_exact
from grasp.summarize import build_summary, evaluate_phase, grouping

TOL = 1e-9


# ---------------------------------------------------------------- block 1

GOLDEN_LABEL_COUNTS = {"l0": 11, "l1": 3, "l2": 2, "l3": 6, "l4": 7,
                       "l5": 7, "l6": 1}

GOLDEN_ESTIMATES = [
    ("COUNT () -[l5]-> ()", 7.0),
    ("COUNT () -[l2?]-> ()", 27.0),
    ("COUNT () -/l0+/-> ()", 15.0),
    ("COUNT () -/l0*/-> ()", 40.0),
    ("COUNT () -[l4|l1]-> ()", 14.0),
    ("COUNT () <-[l4]- () -[l5]-> ()", 7.0),
]


def test_golden_label_counts(gsn):
    assert dict(label_frequencies(gsn)) == GOLDEN_LABEL_COUNTS


def test_golden_partition_and_supergraph(gsn):
    part = grouping(gsn)
    assert part.num_groupings == 3
    sg = evaluate_phase(part, gsn)
    assert len(sg.supernodes) == 9
    heavy = [se for se in sg.superedges if se.weight > 1]
    assert len(heavy) == 1
    se = heavy[0]
    # The fourth supernode (the three-reply component) sends both of its
    # l4 edges to the person supernode, the first.
    assert (se.src, se.label, se.dst, se.weight) == (3, "l4", 0, 2)


def test_golden_hypernode_counts(gsn_target, gsn_source):
    assert gsn_target.num_hypernodes == 4
    assert gsn_source.num_hypernodes == 3


@pytest.mark.parametrize("text,expected", GOLDEN_ESTIMATES)
def test_golden_estimates(gsn_target, text, expected):
    plan = translate(parse_query(text), "exact")
    value = eval_approx(gsn_target, plan).value
    assert value == pytest.approx(expected, abs=TOL)


def test_golden_suite_runtime(gsn):
    start = time.perf_counter()
    assert dict(label_frequencies(gsn)) == GOLDEN_LABEL_COUNTS
    part = grouping(gsn)
    sg = evaluate_phase(part, gsn)
    s_target = build_summary(sg, gsn, "target")
    build_summary(sg, gsn, "source")
    for text, _expected in GOLDEN_ESTIMATES:
        eval_approx(s_target, translate(parse_query(text), "exact"))
    assert time.perf_counter() - start < 1.0


# ---------------------------------------------------------------- block 2

SEEDS = corpus.CORPUS_SEEDS


@pytest.fixture(scope="module")
def corpus_cache():
    """(seed -> (graph, partitioning, supergraph, target, source), build seconds)."""
    start = time.perf_counter()
    cache = {}
    for seed in SEEDS:
        g = corpus.random_graph(seed)
        part = grouping(g)
        sg = evaluate_phase(part, g)
        cache[seed] = (g, part, sg,
                       build_summary(sg, g, "target"),
                       build_summary(sg, g, "source"))
    return cache, time.perf_counter() - start


def test_partition_properties_and_conservation(corpus_cache):
    cache, build_seconds = corpus_cache
    start = time.perf_counter()
    for seed, (g, part, sg, s_target, s_source) in cache.items():
        subs = part.all_subgroupings()
        # P1: no empty subgroupings.
        assert all(sub.vertices for sub in subs), seed
        # P2: vertex- and edge-disjoint.
        seen_v: set[int] = set()
        seen_e: set[int] = set()
        for sub in subs:
            assert not (sub.vertices & seen_v), seed
            seen_v |= sub.vertices
            inner = set(sub.inner_edges)
            assert not (inner & seen_e), seed
            seen_e |= inner
        # P3: together with the residual, exactly the vertex set; inner
        # edges drawn from the graph's edge ids.
        assert seen_v | set(part.residual_vertices) == set(range(g.num_vertices)), seed
        assert not (seen_v & set(part.residual_vertices)), seed
        assert seen_e <= set(range(g.num_edges)), seed
        # P4: at most one grouping per label plus the residual.
        assert part.num_groupings <= len(g.edges_by_label) + 1, seed

        # Weight conservation at the supernode stage ...
        assert sum(sn.props.vweight for sn in sg.supernodes) == g.num_vertices, seed
        assert (sum(sn.props.eweight for sn in sg.supernodes)
                + sum(se.weight for se in sg.superedges)) == g.num_edges, seed
        # ... and after both merge heuristics.
        for s in (s_target, s_source):
            assert sum(hn.props.vweight for hn in s.hypernodes) == g.num_vertices, seed
            assert (sum(hn.props.eweight for hn in s.hypernodes)
                    + sum(he.weight for he in s.hyperedges)) == g.num_edges, seed
    elapsed = time.perf_counter() - start + build_seconds
    assert elapsed < 30.0


# ---------------------------------------------------------------- block 3

def test_bookkeeping_classes_match_oracle_everywhere(corpus_cache):
    cache, _ = corpus_cache
    start = time.perf_counter()
    for seed, (g, _part, _sg, s_target, s_source) in cache.items():
        labels = sorted(g.edges_by_label)[:3]
        texts = []
        for l in labels:
            texts += [f"COUNT () -[{l}]-> ()", f"COUNT () <-[{l}]- ()",
                      f"COUNT () -[{l}?]-> ()"]
        if len(labels) >= 2:
            texts.append(f"COUNT () -[{labels[0]}|{labels[1]}]-> ()")
        for s in (s_target, s_source):
            for text in texts:
                q = parse_query(text)
                exact = eval_exact(g, q).value
                approx = eval_approx(s, translate(q, "exact")).value
                assert relative_error(exact, approx) == 0.0, (seed, text)
            # Star adds the node-count term to the plus estimate; under the
            # exact mode that term is the vertex count, with no rounding.
            for l in labels:
                plus = eval_approx(s, translate(parse_query(f"COUNT () -/{l}+/-> ()"))).value
                star = eval_approx(s, translate(parse_query(f"COUNT () -/{l}*/-> ()"))).value
                assert star - plus == float(g.num_vertices), (seed, l)
    assert time.perf_counter() - start < 60.0


@pytest.fixture(scope="module")
def bib5k():
    return generate_synthetic(bib_schema(), 5000, seed=11)


def test_kleene_plus_error_bounded_on_citation_graphs(bib5k):
    start = time.perf_counter()
    errors = []
    for seed, g in [(11, bib5k)] + [
            (s, generate_synthetic(bib_schema(), 5000, seed=s)) for s in (12, 13)]:
        s = summarize_graph(g)
        for label in g.labels():
            q = parse_query(f"COUNT () -/{label}+/-> ()")
            exact = eval_exact(g, q).value
            approx = eval_approx(s, translate(q)).value
            errors.append(relative_error(exact, approx))
    assert sum(errors) / len(errors) <= 10.0
    assert time.perf_counter() - start < 300.0


# ---------------------------------------------------------------- block 4

def test_compression_at_desk_scale(bib5k):
    from grasp.bench import compression_ratios

    start = time.perf_counter()
    for mode in ("target", "source"):
        s = summarize_graph(bib5k, mode=mode)
        vertex_cr, edge_cr = compression_ratios(bib5k, s)
        assert vertex_cr >= 90.0, mode
        assert edge_cr >= 90.0, mode

    shop = generate_synthetic(shop_schema(), 5000, seed=11)
    for mode in ("target", "source"):
        s = summarize_graph(shop, mode=mode)
        vertex_cr, edge_cr = compression_ratios(shop, s)
        # Heterogeneous labels fragment the partition; the ratios are
        # reported without a floor.
        print(f"shop-like 5K {mode}: vertex CR {vertex_cr:.2f}%, "
              f"edge CR {edge_cr:.2f}%")
        assert 0.0 <= vertex_cr <= 100.0, mode
        assert 0.0 <= edge_cr <= 100.0, mode
    assert time.perf_counter() - start < 120.0


# ---------------------------------------------------------------- block 5

def test_time_gain_positive_without_disjunctions(bib5k):
    workload = generate_workload(bib5k, WorkloadSpec({
        "single": 4, "inverse": 4, "optional": 4,
        "kleene_plus": 4, "kleene_star": 4, "concatenation": 8,
    }, seed=2))
    assert workload and all("|" not in text for text in workload)
    report = run_experiment(bib5k, None, "target", workload)
    assert report.mean_time_gain_pct > 0.0


# ---------------------------------------------------------------- block 6

def test_region_monotonicity_on_random_triples(corpus_cache):
    cache, _ = corpus_cache
    start = time.perf_counter()
    rng = random.Random(424242)
    pool_spec = WorkloadSpec({k: 3 for k in ("single", "inverse", "optional",
                                             "disjunction", "kleene_plus",
                                             "kleene_star", "concatenation")},
                             seed=0)
    checked = 0
    while checked < 100:
        seed = rng.choice(list(SEEDS))
        g, _part, _sg, s_target, s_source = cache[seed]
        if g.num_edges == 0:
            continue
        s = s_target if checked % 2 == 0 else s_source
        texts = generate_workload(g, pool_spec)
        text = rng.choice(texts)
        ids = [hn.id for hn in s.hypernodes]
        region = set(rng.sample(ids, rng.randint(0, len(ids))))
        plan = translate(parse_query(text))
        full = eval_approx(s, plan, None).value
        restricted = eval_approx(s, plan, region).value
        # all plan coefficients are nonnegative; the 1e-9 is float-sum headroom
        assert restricted <= full + TOL, (seed, text, sorted(region))
        checked += 1
    assert time.perf_counter() - start < 30.0
