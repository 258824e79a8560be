"""Counting-query engine: parsing, exact evaluation, and summary plans."""
from .ast import (
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
)
from .parser import parse_query, print_query
from .exact import CountResult, eval_exact
from .translate import TranslatedPlan, translate
from .approx import eval_approx

__all__ = [
    "Concatenation", "CountQuery", "CountResult", "Disjunction", "Epsilon",
    "Filter", "InverseLabel", "KleenePlus", "KleeneStar", "OptionalLabel",
    "SingleLabel", "TranslatedPlan", "eval_approx", "eval_exact",
    "parse_query", "print_query", "translate",
]
