"""Hypergraph isomorphism by backtracking, plus invariant fingerprints.

``G`` and ``G'`` are isomorphic exactly when ``L(G)`` and ``L(G')`` are
isomorphic as L-infinity algebras, so the algebraic question is decided on
the hypergraph side. Fingerprints collect invariants (incidence data and a
prefix of the Betti numbers); equal fingerprints are necessary for
isomorphism but not sufficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional

from .cohomology import DEFAULT_MONOMIAL_CAP, betti_table
from .hypergraph import Hypergraph

DEFAULT_VERTEX_CAP = 12


class SizeLimitError(RuntimeError):
    pass


def incidence_vectors(g: Hypergraph) -> dict[int, tuple[int, ...]]:
    """Per vertex, the number of incident ``k``-edges for ``k = 1..max edge size``."""
    top = g.max_edge_size
    vecs = {v: [0] * top for v in g.vertices}
    for e in g.edges:
        for v in e:
            vecs[v][len(e) - 1] += 1
    return {v: tuple(c) for v, c in vecs.items()}


def is_isomorphism(g1: Hypergraph, g2: Hypergraph, phi: Mapping[int, int]) -> bool:
    if g1.n_vertices != g2.n_vertices or g1.n_edges != g2.n_edges:
        return False
    if sorted(phi) != list(g1.vertices) or sorted(phi.values()) != list(g2.vertices):
        return False
    return all(g2.has_edge(phi[v] for v in e) for e in g1.edges)


def are_isomorphic(g1: Hypergraph, g2: Hypergraph, vertex_cap: int = DEFAULT_VERTEX_CAP) -> Optional[dict[int, int]]:
    """An edge-preserving bijection ``V(g1) -> V(g2)``, or ``None``.

    Vertices of ``g1`` are assigned most-constrained first; candidates must
    share the incidence vector, and each assignment is checked against every
    edge (of either side) that becomes fully mapped.
    """
    if max(g1.n_vertices, g2.n_vertices) > vertex_cap:
        raise SizeLimitError(f"isomorphism search limited to {vertex_cap} vertices")
    if g1.n_vertices != g2.n_vertices or g1.profile().counts_by_size != g2.profile().counts_by_size:
        return None
    inc1, inc2 = incidence_vectors(g1), incidence_vectors(g2)
    if sorted(inc1.values()) != sorted(inc2.values()):
        return None
    classes: dict[tuple[int, ...], list[int]] = {}
    for v, vec in inc2.items():
        classes.setdefault(vec, []).append(v)

    # most constrained first: small classes, then high degree
    order = sorted(g1.vertices, key=lambda v: (len(classes[inc1[v]]), -sum(inc1[v]), v))
    position = {v: i for i, v in enumerate(order)}
    # edges of g1 become checkable once their last vertex (in search order) is placed
    closing: dict[int, list] = {v: [] for v in g1.vertices}
    for e in g1.edges:
        closing[max(e, key=position.__getitem__)].append(e)
    incident2: dict[int, list] = {v: [] for v in g2.vertices}
    for e in g2.edges:
        for v in e:
            incident2[v].append(e)

    phi: dict[int, int] = {}
    inverse: dict[int, int] = {}

    def consistent(v: int, w: int) -> bool:
        for e in closing[v]:
            if not g2.has_edge(phi[u] for u in e):
                return False
        for e in incident2[w]:
            if all(u in inverse for u in e) and not g1.has_edge(inverse[u] for u in e):
                return False
        return True

    def search(depth: int) -> bool:
        if depth == len(order):
            return True
        v = order[depth]
        for w in classes[inc1[v]]:
            if w in inverse:
                continue
            phi[v], inverse[w] = w, v
            if consistent(v, w) and search(depth + 1):
                return True
            del phi[v], inverse[w]
        return False

    if search(0):
        return dict(sorted(phi.items()))
    return None


@dataclass(frozen=True)
class Fingerprint:
    vertex_invariants: tuple[tuple[int, ...], ...]
    edge_size_profile: tuple[tuple[int, int], ...]
    betti_prefix: tuple[int, ...]

    def to_dict(self) -> dict:
        return {
            "vertex_invariants": [list(v) for v in self.vertex_invariants],
            "edge_size_profile": {str(k): c for k, c in self.edge_size_profile},
            "betti_prefix": list(self.betti_prefix),
        }


def fingerprint(g: Hypergraph, depth: int = 3, monomial_cap: int = DEFAULT_MONOMIAL_CAP) -> Fingerprint:
    if depth < 0:
        raise ValueError("depth must be non-negative")
    return Fingerprint(
        vertex_invariants=tuple(sorted(incidence_vectors(g).values())),
        edge_size_profile=tuple(g.profile().counts_by_size.items()),
        betti_prefix=betti_table(g, depth, monomial_cap).values,
    )
