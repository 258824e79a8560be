"""Seeded synthetic graph generator driven by a small schema.

A schema lists vertex types with proportions and edge predicates
(source type, target type, label, out-degree distribution). Generation is
fully deterministic for a given (schema, size, seed) triple: same inputs
serialize to identical bytes.
"""
from __future__ import annotations

import json
import os
import random
from dataclasses import dataclass

from .errors import InputError
from .graph import PropertyGraph, validate_label


@dataclass(frozen=True)
class DegreeSpec:
    """Out-degree distribution: uniform over [low, high] or zipfian with
    weight 1/k^skew over the same support."""
    kind: str  # "uniform" | "zipfian"
    low: int
    high: int
    skew: float = 1.5

    def validate(self) -> None:
        if self.kind not in ("uniform", "zipfian"):
            raise InputError(f"unknown degree kind {self.kind!r}")
        if self.low < 0 or self.high < self.low:
            raise InputError(f"bad degree bounds [{self.low}, {self.high}]")
        if self.kind == "zipfian" and self.low < 1:
            raise InputError("zipfian degrees need low >= 1")


@dataclass(frozen=True)
class VertexType:
    name: str
    proportion: float


@dataclass(frozen=True)
class EdgePredicate:
    label: str
    source_type: str
    target_type: str
    degree: DegreeSpec


@dataclass(frozen=True)
class GeneratorSchema:
    name: str
    vertex_types: tuple[VertexType, ...]
    predicates: tuple[EdgePredicate, ...]

    def validate(self) -> None:
        if not self.vertex_types:
            raise InputError("schema needs at least one vertex type")
        seen = set()
        for vt in self.vertex_types:
            validate_label(vt.name)
            if vt.proportion <= 0:
                raise InputError(f"vertex type {vt.name} has non-positive proportion")
            if vt.name in seen:
                raise InputError(f"duplicate vertex type {vt.name}")
            seen.add(vt.name)
        for p in self.predicates:
            validate_label(p.label)
            if p.source_type not in seen or p.target_type not in seen:
                raise InputError(f"predicate {p.label} references unknown vertex type")
            p.degree.validate()

    @property
    def edge_label_count(self) -> int:
        return len({p.label for p in self.predicates})


def _largest_remainder(proportions: list[float], total: int) -> list[int]:
    weight = sum(proportions)
    raw = [p / weight * total for p in proportions]
    counts = [int(r) for r in raw]
    short = total - sum(counts)
    order = sorted(range(len(raw)), key=lambda i: (-(raw[i] - counts[i]), i))
    for i in order[:short]:
        counts[i] += 1
    if total >= len(proportions):
        # keep every type populated so predicates always have endpoints
        for i in range(len(counts)):
            if counts[i] == 0:
                donor = max(range(len(counts)), key=lambda j: counts[j])
                counts[donor] -= 1
                counts[i] += 1
    return counts


def _draw_degree(rng: random.Random, spec: DegreeSpec) -> int:
    if spec.kind == "uniform":
        return rng.randint(spec.low, spec.high)
    support = range(spec.low, spec.high + 1)
    weights = [1.0 / (k ** spec.skew) for k in support]
    return rng.choices(list(support), weights=weights, k=1)[0]


def generate_synthetic(schema: GeneratorSchema, target_size: int, seed: int) -> PropertyGraph:
    """Build a graph of roughly ``target_size`` vertices (exact here: the
    largest-remainder split always sums to the target).

    Every predicate contributes at least one edge when its endpoint pools
    are non-empty, so the distinct edge-label count matches the schema.
    """
    schema.validate()
    if target_size < 0:
        raise InputError("target size must be non-negative")
    g = PropertyGraph()
    if target_size == 0:
        return g

    rng = random.Random(seed)
    counts = _largest_remainder([vt.proportion for vt in schema.vertex_types], target_size)
    pools: dict[str, list[int]] = {}
    next_id = 0
    for vt, count in zip(schema.vertex_types, counts):
        pool = []
        for _ in range(count):
            pool.append(g.add_vertex(next_id, vt.name))
            next_id += 1
        pools[vt.name] = pool

    emitted: dict[str, int] = {}
    for pred in schema.predicates:
        sources = pools[pred.source_type]
        targets = pools[pred.target_type]
        if not sources or not targets:
            continue
        made = 0
        for src in sources:
            degree = _draw_degree(rng, pred.degree)
            if degree <= 0:
                continue
            candidates = targets if pred.source_type != pred.target_type else \
                [t for t in targets if t != src]
            if not candidates:
                continue
            k = min(degree, len(candidates))
            for dst in sorted(rng.sample(candidates, k)):
                g.add_edge(src, pred.label, dst)
                made += 1
        emitted[pred.label] = emitted.get(pred.label, 0) + made

    # force one edge for labels that drew all-zero degrees
    for pred in schema.predicates:
        if emitted.get(pred.label, 0) > 0:
            continue
        sources = pools[pred.source_type]
        targets = pools[pred.target_type]
        if not sources or not targets:
            continue
        dst_pool = targets if pred.source_type != pred.target_type else \
            [t for t in targets if t != sources[0]]
        if dst_pool:
            g.add_edge(sources[0], pred.label, dst_pool[0])
            emitted[pred.label] = 1
    return g


# -- built-in schemas ----------------------------------------------------


def bib_schema() -> GeneratorSchema:
    """Citation-network shape: 5 vertex types, 4 edge labels, one dominant
    recursive label (cites) so the heavy-label partition captures papers."""
    return GeneratorSchema(
        name="bib",
        vertex_types=(
            VertexType("paper", 0.55),
            VertexType("author", 0.25),
            VertexType("journal", 0.10),
            VertexType("conference", 0.06),
            VertexType("year", 0.04),
        ),
        predicates=(
            EdgePredicate("cites", "paper", "paper", DegreeSpec("zipfian", 2, 8, 1.8)),
            EdgePredicate("authored_by", "paper", "author", DegreeSpec("uniform", 1, 2)),
            EdgePredicate("published_in", "paper", "journal", DegreeSpec("uniform", 0, 1)),
            EdgePredicate("published_in", "paper", "conference", DegreeSpec("uniform", 0, 1)),
            EdgePredicate("in_year", "paper", "year", DegreeSpec("uniform", 1, 1)),
        ),
    )


def shop_schema() -> GeneratorSchema:
    """Heterogeneous retail shape: 24 vertex types and 82 edge labels with
    low per-predicate degrees. Construction is seeded so the schema itself
    is a constant."""
    rng = random.Random(0x5A0B)
    types = tuple(VertexType(f"t{i:02d}", 1.0 + (i % 5) * 0.35) for i in range(24))
    names = [t.name for t in types]
    predicates = []
    for i in range(82):
        src = names[rng.randrange(len(names))]
        dst = names[rng.randrange(len(names))]
        predicates.append(EdgePredicate(f"rel{i:02d}", src, dst, DegreeSpec("uniform", 0, 1)))
    return GeneratorSchema(name="shop", vertex_types=types, predicates=tuple(predicates))


BUILTIN_SCHEMAS = {"bib": bib_schema, "shop": shop_schema}


def schema_from_json(source: str | bytes | dict) -> GeneratorSchema:
    obj = json.loads(source) if isinstance(source, (str, bytes)) else source
    try:
        vts = tuple(VertexType(v["name"], float(v["proportion"])) for v in obj["vertex_types"])
        preds = tuple(
            EdgePredicate(
                p["label"], p["source_type"], p["target_type"],
                DegreeSpec(
                    p["degree"]["kind"], int(p["degree"]["low"]), int(p["degree"]["high"]),
                    float(p["degree"].get("skew", 1.5)),
                ),
            )
            for p in obj["predicates"]
        )
        schema = GeneratorSchema(str(obj.get("name", "custom")), vts, preds)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed schema: {exc}") from None
    schema.validate()
    return schema


def resolve_schema(ref: str) -> GeneratorSchema:
    """Accept a built-in schema name or a path to a schema JSON file."""
    if ref in BUILTIN_SCHEMAS:
        return BUILTIN_SCHEMAS[ref]()
    if not os.path.exists(ref):
        raise InputError(
            f"{ref!r} is neither a builtin schema ({', '.join(sorted(BUILTIN_SCHEMAS))}) "
            "nor a schema file")
    with open(ref, "r", encoding="utf-8") as fh:
        return schema_from_json(fh.read())
