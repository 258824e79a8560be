"""Exact path-count engine, checked against hand counts and the brute-force oracle."""
import pytest

import corpus
import reference
from grasp.errors import InputError
from grasp.graph import load_graph
from grasp.query import CountQuery, Filter, SingleLabel, KleenePlus, parse_query
from grasp.query.exact import eval_exact


def count(g, text):
    return eval_exact(g, parse_query(text)).value


# Hand-verified counts on the social graph fixture.
SOCIAL_GOLDENS = [
    ("COUNT ()", 25),
    ("COUNT () -[l5]-> ()", 7),
    ("COUNT () -[l0]-> ()", 11),
    ("COUNT () <-[l4]- ()", 7),
    ("COUNT () -[l2?]-> ()", 27),
    ("COUNT () -/l0+/-> ()", 15),
    ("COUNT () -/l0*/-> ()", 40),
    ("COUNT () -[l4|l1]-> ()", 10),
    ("COUNT () -[nosuch]-> ()", 0),
    ("COUNT () -/nosuch+/-> ()", 0),
    ("COUNT () -/nosuch*/-> ()", 25),
    # Meeting-shape two-hop counts, all four orientation pairs.
    ("COUNT () -[l4]-> () -[l5]-> ()", 0),
    ("COUNT () -[l4]-> () <-[l5]- ()", 0),
    ("COUNT () <-[l4]- () -[l5]-> ()", 7),
    ("COUNT () <-[l4]- () <-[l5]- ()", 0),
    ("COUNT () -[l3]-> () <-[l5]- ()", 7),
    # Numeric filters over person ages.
    ("COUNT (x) <-[l4]- () -[l5]-> () WHERE x.age >= 18 AND x.age <= 24", 3),
    ("COUNT (x) <-[l4]- () -[l5]-> () WHERE x.age <= 16", 1),
    ("COUNT (x) -[l0]-> () WHERE x.age >= 30", 5),
    ("COUNT () -[l0]-> (y) WHERE y.age <= 21", 0),
    ("COUNT (x) -[l0]-> (y) WHERE x.age >= 18 AND y.age <= 24", 4),
]


@pytest.mark.parametrize("text,expected", SOCIAL_GOLDENS)
def test_social_goldens(gsn, text, expected):
    res = eval_exact(gsn, parse_query(text))
    assert res.value == expected
    assert res.exact is True


def test_two_hop_may_reuse_one_edge():
    # A single a-edge meets itself at its own target: one valid assignment.
    g = load_graph("0,T\n1,T\n", "0,a,1\n")
    assert count(g, "COUNT () -[a]-> () <-[a]- ()") == 1


def test_self_loop_two_hop():
    g = load_graph("0,T\n", "0,a,0\n")
    assert count(g, "COUNT () -[a]-> () -[a]-> ()") == 1
    assert count(g, "COUNT () -[a]-> () <-[a]- ()") == 1
    assert count(g, "COUNT () -/a+/-> ()") == 1


def test_filter_on_missing_property_matches_nothing():
    g = load_graph("0,T,age=5\n1,T\n", "0,a,1\n")
    # Vertex 1 has no age, so it never satisfies a filter on age.
    assert count(g, "COUNT () -[a]-> (y) WHERE y.age > 0") == 0
    assert count(g, "COUNT (x) -[a]-> () WHERE x.age > 0") == 1


def test_filter_on_text_property_rejected():
    g = load_graph("0,T,name=bob\n1,T\n", "0,a,1\n")
    q = parse_query("COUNT (x) -[a]-> () WHERE x.name > 3")
    with pytest.raises(InputError):
        eval_exact(g, q)


def test_filters_require_filterable_path(gsn):
    # The parser blocks this, so construct the query directly.
    q = CountQuery(KleenePlus("l0"), (Filter(1, "age", ">", 0.0),))
    with pytest.raises(InputError):
        eval_exact(gsn, q)


def test_bad_filter_position_rejected(gsn):
    q = CountQuery(SingleLabel("l0"), (Filter(3, "age", ">", 0.0),))
    with pytest.raises(InputError):
        eval_exact(gsn, q)


def test_bad_comparator_rejected(gsn):
    q = CountQuery(SingleLabel("l0"), (Filter(1, "age", "!=", 0.0),))
    with pytest.raises(InputError):
        eval_exact(gsn, q)


_CORPUS_QUERIES = [
    "COUNT ()",
    "COUNT () -[{a}]-> ()",
    "COUNT () <-[{a}]- ()",
    "COUNT () -[{a}?]-> ()",
    "COUNT () -/{a}+/-> ()",
    "COUNT () -/{a}*/-> ()",
    "COUNT () -[{a}|{b}]-> ()",
    "COUNT () -[{a}]-> () -[{b}]-> ()",
    "COUNT () -[{a}]-> () <-[{b}]- ()",
    "COUNT () <-[{a}]- () -[{b}]-> ()",
    "COUNT () <-[{a}]- () <-[{b}]- ()",
    "COUNT (x) -[{a}]-> () WHERE x.age >= 40",
    "COUNT (x) -[{a}]-> (y) WHERE x.score <= 0.5 AND y.age > 20",
    "COUNT (x) <-[{a}]- () -[{b}]-> (z) WHERE x.age < 60 AND z.score > 0.2",
]


@pytest.mark.parametrize("seed", range(1, 200, 10))
def test_matches_brute_force_oracle(seed):
    g = corpus.random_graph(seed)
    labels = sorted({e.label for e in g.edges}) or ["L0"]
    a = labels[0]
    b = labels[-1]
    for template in _CORPUS_QUERIES:
        q = parse_query(template.format(a=a, b=b))
        assert eval_exact(g, q).value == reference.eval_query(g, q), template


@pytest.mark.parametrize("seed", range(3, 200, 17))
def test_kleene_identities(seed):
    g = corpus.random_graph(seed)
    n = len(g.vertices)
    for label in sorted({e.label for e in g.edges})[:3]:
        plus = count(g, f"COUNT () -/{label}+/-> ()")
        star = count(g, f"COUNT () -/{label}*/-> ()")
        single = count(g, f"COUNT () -[{label}]-> ()")
        optional = count(g, f"COUNT () -[{label}?]-> ()")
        assert star == plus + n
        assert optional == single + n
        assert plus >= single  # every edge is a one-step path
