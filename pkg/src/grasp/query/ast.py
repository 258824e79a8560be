"""Query AST.

A query counts matches of a path pattern with at most two hops. Two-hop
patterns carry the direction variant (d1, d2) where d names the endpoint of
each edge AT THE OUTER node: (1, 1) is ``() -[a]-> (m) <-[b]- ()``,
(2, 2) is ``() <-[a]- (m) -[b]-> ()``, and so on. The shared middle vertex
therefore sits at endpoint 3 - d of each edge.
"""
from __future__ import annotations

from dataclasses import dataclass, field

FORWARD = "forward"
BACKWARD = "backward"

COMPARATORS = ("<=", "<", ">=", ">")


@dataclass(frozen=True)
class Epsilon:
    """Empty path; counts every vertex once."""


@dataclass(frozen=True)
class SingleLabel:
    label: str
    direction: str = FORWARD


@dataclass(frozen=True)
class OptionalLabel:
    label: str
    direction: str = FORWARD


@dataclass(frozen=True)
class InverseLabel:
    label: str


@dataclass(frozen=True)
class KleenePlus:
    label: str


@dataclass(frozen=True)
class KleeneStar:
    label: str


@dataclass(frozen=True)
class Disjunction:
    left: str
    right: str


@dataclass(frozen=True)
class Concatenation:
    first: str
    second: str
    d1: int
    d2: int


PathExpr = (Epsilon | SingleLabel | OptionalLabel | InverseLabel |
            KleenePlus | KleeneStar | Disjunction | Concatenation)


@dataclass(frozen=True)
class Filter:
    position: int  # 1 = first drawn node, 2 = last drawn node
    prop: str
    op: str
    value: float


@dataclass(frozen=True)
class CountQuery:
    path: PathExpr
    filters: tuple[Filter, ...] = field(default=())

    @property
    def has_filters(self) -> bool:
        return bool(self.filters)
