"""Finite simple hypergraphs on the vertex set ``1..n``."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping, Optional

Edge = tuple[int, ...]


class HypergraphError(ValueError):
    """Raised for malformed or non-simple hypergraph input."""


def _edge_key(edge: Edge) -> tuple[int, Edge]:
    return (len(edge), edge)


@dataclass(frozen=True)
class Hypergraph:
    """A finite simple hypergraph.

    Vertices are the integers ``1..n_vertices``. Edges are strictly increasing
    tuples stored sorted by ``(size, lexicographic)``, so two values compare
    equal exactly when they describe the same labelled hypergraph.
    """

    n_vertices: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if not isinstance(self.n_vertices, int) or self.n_vertices < 0:
            raise HypergraphError(f"vertex count must be a non-negative integer, got {self.n_vertices!r}")
        seen = set()
        for edge in self.edges:
            if len(edge) == 0:
                raise HypergraphError("empty edge")
            for a, b in zip(edge, edge[1:]):
                if a == b:
                    raise HypergraphError(f"repeated vertex {a} in edge {list(edge)}")
                if a > b:
                    raise HypergraphError(f"edge {list(edge)} is not strictly increasing")
            if edge[0] < 1 or edge[-1] > self.n_vertices:
                raise HypergraphError(f"edge {list(edge)} leaves the vertex range 1..{self.n_vertices}")
            if edge in seen:
                raise HypergraphError(f"duplicate edge {list(edge)}")
            seen.add(edge)
        canonical = tuple(sorted(self.edges, key=_edge_key))
        object.__setattr__(self, "edges", canonical)
        object.__setattr__(self, "_edge_set", frozenset(canonical))

    @classmethod
    def from_edges(cls, n_vertices: int, edges: Iterable[Iterable[int]]) -> "Hypergraph":
        """Build from unsorted edges; vertex order inside an edge is irrelevant.

        Repeated vertices inside an edge and duplicate edges raise
        :class:`HypergraphError` instead of being merged.
        """
        normalized = []
        for edge in edges:
            edge = list(edge)
            if len(set(edge)) != len(edge):
                raise HypergraphError(f"repeated vertex in edge {edge}")
            normalized.append(tuple(sorted(edge)))
        return cls(n_vertices, tuple(normalized))

    @property
    def vertices(self) -> range:
        return range(1, self.n_vertices + 1)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def has_edge(self, edge: Iterable[int]) -> bool:
        return tuple(sorted(edge)) in self._edge_set

    def edges_of_size(self, k: int) -> tuple[Edge, ...]:
        return tuple(e for e in self.edges if len(e) == k)

    @property
    def max_edge_size(self) -> int:
        return max((len(e) for e in self.edges), default=0)

    def profile(self) -> "EdgeProfile":
        return EdgeProfile.of(self)

    def to_dict(self) -> dict:
        return {"vertices": self.n_vertices, "edges": [list(e) for e in self.edges]}

    def __repr__(self):
        return f"Hypergraph({self.n_vertices}, {[list(e) for e in self.edges]})"


@dataclass(frozen=True)
class EdgeProfile:
    """Edge counts by size, the minimal edge size and the 1-edged vertices."""

    counts_by_size: Mapping[int, int]
    min_edge_size: Optional[int]
    one_edged_vertices: frozenset[int] = field(default_factory=frozenset)

    @classmethod
    def of(cls, g: Hypergraph) -> "EdgeProfile":
        counts: dict[int, int] = {}
        for e in g.edges:
            counts[len(e)] = counts.get(len(e), 0) + 1
        return cls(
            counts_by_size=dict(sorted(counts.items())),
            min_edge_size=min(counts) if counts else None,
            one_edged_vertices=frozenset(e[0] for e in g.edges if len(e) == 1),
        )

    def count(self, k: int) -> int:
        return self.counts_by_size.get(k, 0)


def parse(text: str) -> Hypergraph:
    """Parse the JSON interchange format ``{"vertices": n, "edges": [[...], ...]}``."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise HypergraphError(f"invalid JSON: {exc}") from None
    return from_dict(doc)


def from_dict(doc) -> Hypergraph:
    if not isinstance(doc, dict) or "vertices" not in doc or "edges" not in doc:
        raise HypergraphError('document must be an object with "vertices" and "edges"')
    n = doc["vertices"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise HypergraphError(f'"vertices" must be a positive integer, got {n!r}')
    edges = doc["edges"]
    if not isinstance(edges, list):
        raise HypergraphError('"edges" must be an array')
    for edge in edges:
        if not isinstance(edge, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in edge):
            raise HypergraphError(f"edge {edge!r} must be an array of integers")
    return Hypergraph.from_edges(n, edges)


def serialize(g: Hypergraph) -> str:
    return json.dumps(g.to_dict(), separators=(",", ":"))


def disjoint_union(g1: Hypergraph, g2: Hypergraph) -> Hypergraph:
    """The disjoint union ``g1 + g2``; vertices of ``g2`` are shifted by ``g1.n_vertices``."""
    shift = g1.n_vertices
    shifted = tuple(tuple(v + shift for v in e) for e in g2.edges)
    return Hypergraph(g1.n_vertices + g2.n_vertices, g1.edges + shifted)


def delete_vertex(g: Hypergraph, v: int) -> tuple[Hypergraph, dict[int, int]]:
    """Remove ``v`` and every edge containing it.

    Returns the new hypergraph and the order-preserving relabelling
    ``old id -> new id`` of the surviving vertices.
    """
    if not 1 <= v <= g.n_vertices:
        raise HypergraphError(f"vertex {v} out of range 1..{g.n_vertices}")
    relabel = {u: (u if u < v else u - 1) for u in g.vertices if u != v}
    edges = tuple(tuple(relabel[u] for u in e) for e in g.edges if v not in e)
    return Hypergraph(g.n_vertices - 1, edges), relabel


def complete_uniform(n: int, k: int) -> Hypergraph:
    if not 1 <= k <= n:
        raise HypergraphError(f"need 1 <= k <= n, got n={n}, k={k}")
    return Hypergraph(n, tuple(combinations(range(1, n + 1), k)))


def random_hypergraph(n: int, size_weights: Mapping[int, float], seed: int) -> Hypergraph:
    """Include each ``k``-subset of ``1..n`` independently with probability ``size_weights[k]``.

    One uniform draw is consumed per candidate subset, in order of size and
    then lexicographically, so the result depends only on the arguments.
    """
    for k, w in size_weights.items():
        if not 0.0 <= w <= 1.0:
            raise HypergraphError(f"weight for size {k} must lie in [0, 1], got {w}")
    rng = random.Random(seed)
    edges = []
    for k in sorted(size_weights):
        if k < 1 or k > n:
            continue
        w = size_weights[k]
        for subset in combinations(range(1, n + 1), k):
            if rng.random() < w:
                edges.append(subset)
    return Hypergraph(n, tuple(edges))


def relabel(g: Hypergraph, perm: Mapping[int, int]) -> Hypergraph:
    """Apply a vertex bijection ``perm`` (old -> new) to ``g``."""
    if sorted(perm) != list(g.vertices) or sorted(perm.values()) != list(g.vertices):
        raise HypergraphError("relabelling must be a permutation of the vertex set")
    return Hypergraph.from_edges(g.n_vertices, ([perm[v] for v in e] for e in g.edges))

