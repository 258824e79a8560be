"""Query grammar: parsing, printing, and rejection of everything else."""
import pytest
from hypothesis import given, strategies as st

from grasp.errors import QuerySyntaxError
from grasp.query import (
    Concatenation,
    CountQuery,
    Disjunction,
    Epsilon,
    Filter,
    InverseLabel,
    KleenePlus,
    KleeneStar,
    OptionalLabel,
    SingleLabel,
    parse_query,
    print_query,
)

CANONICAL = [
    ("COUNT ()", Epsilon()),
    ("COUNT () -[l5]-> ()", SingleLabel("l5")),
    ("COUNT () <-[l4]- ()", InverseLabel("l4")),
    ("COUNT () -[l2?]-> ()", OptionalLabel("l2")),
    ("COUNT () -[l4|l1]-> ()", Disjunction("l4", "l1")),
    ("COUNT () -/l0+/-> ()", KleenePlus("l0")),
    ("COUNT () -/l0*/-> ()", KleeneStar("l0")),
    ("COUNT () -[a]-> () <-[b]- ()", Concatenation("a", "b", 1, 1)),
    ("COUNT () -[a]-> () -[b]-> ()", Concatenation("a", "b", 1, 2)),
    ("COUNT () <-[a]- () <-[b]- ()", Concatenation("a", "b", 2, 1)),
    ("COUNT () <-[a]- () -[b]-> ()", Concatenation("a", "b", 2, 2)),
]


@pytest.mark.parametrize("text,path", CANONICAL)
def test_canonical_forms(text, path):
    q = parse_query(text)
    assert q.path == path
    assert q.filters == ()
    assert print_query(q) == text


def test_whitespace_is_flexible():
    a = parse_query("COUNT()-[l5]->()")
    b = parse_query("  COUNT  ( )  -[l5]->   ( ) ")
    assert a == b == CountQuery(SingleLabel("l5"))


def test_filters_on_first_and_last_node():
    q = parse_query("COUNT (x) <-[l4]- () -[l5]-> (z) "
                    "WHERE x.age >= 18 AND x.age <= 24 AND z.age < 3")
    assert q.path == Concatenation("l4", "l5", 2, 2)
    assert q.filters == (
        Filter(1, "age", ">=", 18.0),
        Filter(1, "age", "<=", 24.0),
        Filter(2, "age", "<", 3.0),
    )


def test_filter_on_single_label_target():
    q = parse_query("COUNT () -[l0]-> (y) WHERE y.age > 30")
    assert q.filters == (Filter(2, "age", ">", 30.0),)
    assert print_query(q) == "COUNT () -[l0]-> (y) WHERE y.age > 30"


def test_unused_variables_parse_fine():
    q = parse_query("COUNT (a) -[l0]-> (b)")
    assert q == CountQuery(SingleLabel("l0"))


@pytest.mark.parametrize("text", [
    "COUNT () -[l5]-> ",                       # missing closing node
    "count () -[l5]-> ()",                     # keyword is case-sensitive
    "COUNT () -[l|]-> ()",                     # empty disjunction arm
    "COUNT () -[]-> ()",                       # empty label
    "COUNT () -/l/-> ()",                      # kleene without + or *
    "COUNT () -[a]-> () -[b]-> () -[c]-> ()",  # third hop
    "COUNT () -[a?]-> () -[b]-> ()",           # composite leg in a two-hop
    "COUNT () -/a+/-> () -[b]-> ()",
    "COUNT () -[a]-> () extra",                # trailing input
    "COUNT (x) -[a]-> () WHERE y.age > 1",     # unbound variable
    "COUNT (x) -[a]-> (x) WHERE x.age > 1",    # variable bound twice
    "COUNT (x) -[a]-> () WHERE x.age = 1",     # unknown comparator
    "COUNT (x) -[a]-> () WHERE x.age >",       # missing number
    "COUNT (x) -[a?]-> () WHERE x.age > 1",    # filter on optional
    "COUNT (x) -[a|b]-> () WHERE x.age > 1",   # filter on disjunction
    "COUNT (x) -/a+/-> () WHERE x.age > 1",    # filter on kleene
    "COUNT (x) WHERE x.age > 1",               # filter on the empty path
])
def test_rejected_inputs(text):
    with pytest.raises(QuerySyntaxError):
        parse_query(text)


def test_middle_variable_rejected():
    with pytest.raises(QuerySyntaxError) as err:
        parse_query("COUNT () -[a]-> (m) <-[b]- () WHERE m.age > 1")
    assert "middle" in str(err.value)


def test_errors_carry_offsets():
    text = "COUNT () -[a]-> () -[b]-> () -[c]-> ()"
    with pytest.raises(QuerySyntaxError) as err:
        parse_query(text)
    assert err.value.offset == text.index("-[c]")


def test_reparse_is_identity_on_examples():
    for text, _ in CANONICAL:
        q = parse_query(text)
        assert parse_query(print_query(q)) == q


_LABELS = st.from_regex(r"[a-z][a-z0-9_]{0,8}", fullmatch=True)
_VALUES = st.sampled_from([0, 1, 18, 24, 999999, -3, 0.5, 2.25])
_OPS = st.sampled_from(["<=", "<", ">=", ">"])


@st.composite
def queries(draw):
    kind = draw(st.sampled_from(
        ["eps", "single", "inverse", "optional", "plus", "star", "disj", "concat"]))
    a = draw(_LABELS)
    b = draw(_LABELS)
    filters = ()
    if kind == "eps":
        path = Epsilon()
    elif kind == "single":
        path = SingleLabel(a)
    elif kind == "inverse":
        path = InverseLabel(a)
    elif kind == "optional":
        path = OptionalLabel(a)
    elif kind == "plus":
        path = KleenePlus(a)
    elif kind == "star":
        path = KleeneStar(a)
    elif kind == "disj":
        path = Disjunction(a, b)
    else:
        path = Concatenation(a, b, draw(st.sampled_from([1, 2])),
                             draw(st.sampled_from([1, 2])))
    if kind in ("single", "inverse", "concat") and draw(st.booleans()):
        n = draw(st.integers(1, 3))
        filters = tuple(
            Filter(draw(st.sampled_from([1, 2])), draw(_LABELS), draw(_OPS),
                   float(draw(_VALUES)))
            for _ in range(n))
    return CountQuery(path, filters)


@given(queries())
def test_print_parse_round_trip(q):
    assert parse_query(print_query(q)) == q
