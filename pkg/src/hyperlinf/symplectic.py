"""Systems of distinct representatives and symplectic forms on ``L(G)``.

``L(G)`` is symplectic exactly when ``|V| + |E|`` is even and ``G`` has a
system of distinct representatives ``f``. The certificate form pairs each
edge with its representative and the leftover vertices among themselves:
``omega = sum_I x_I* x_f(I)* + sum_{i < s(i)} x_i* x_s(i)*``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional, Union

from .hypergraph import Edge, Hypergraph
from .mcalg import Generator, MCAlgebra, Polynomial, mc_algebra
from .sparse import SparseIntMatrix, determinant, rank


@dataclass(frozen=True)
class SDR:
    """An injective choice ``assignment[e] in e`` of a representative per edge."""

    assignment: Mapping[Edge, int]

    def is_valid_for(self, g: Hypergraph) -> bool:
        if set(self.assignment) != set(g.edges):
            return False
        if any(v not in e for e, v in self.assignment.items()):
            return False
        return len(set(self.assignment.values())) == len(self.assignment)


@dataclass(frozen=True)
class HallViolator:
    """``r`` edges whose union has fewer than ``r`` vertices."""

    edges: tuple[Edge, ...]
    union_size: int

    def is_valid_for(self, g: Hypergraph) -> bool:
        union = set().union(*self.edges) if self.edges else set()
        return (
            all(g.has_edge(e) for e in self.edges)
            and len(union) == self.union_size
            and self.union_size < len(self.edges)
        )


def find_sdr(g: Hypergraph) -> Union[SDR, HallViolator]:
    """Maximum matching of edges into vertices by augmenting paths.

    Edges are processed in canonical order and vertices tried in increasing
    order. If some edge stays unmatched, the edges reachable from it by
    alternating paths cover strictly fewer vertices than their number.
    """
    match_vertex: dict[int, Edge] = {}
    match_edge: dict[Edge, int] = {}

    def augment(e: Edge, seen: set[int]) -> bool:
        for v in e:
            if v in seen:
                continue
            seen.add(v)
            if v not in match_vertex or augment(match_vertex[v], seen):
                match_vertex[v] = e
                match_edge[e] = v
                return True
        return False

    unmatched = []
    for e in g.edges:
        if not augment(e, set()):
            unmatched.append(e)
    if not unmatched:
        return SDR(dict(sorted(match_edge.items(), key=lambda kv: (len(kv[0]), kv[0]))))

    reached_edges = [unmatched[0]]
    reached_vertices: set[int] = set()
    queue = [unmatched[0]]
    while queue:
        e = queue.pop(0)
        for v in e:
            if v in reached_vertices:
                continue
            reached_vertices.add(v)
            partner = match_vertex[v]  # a free vertex here would be an augmenting path
            reached_edges.append(partner)
            queue.append(partner)
    edges = tuple(sorted(reached_edges, key=lambda e: (len(e), e)))
    return HallViolator(edges, len(reached_vertices))


@dataclass(frozen=True)
class SymplecticForm:
    """A quadratic element of the Maurer-Cartan algebra and its bilinear matrix.

    Rows and columns of ``matrix`` follow the basis order of ``L(G)``
    (vertices, then edges), which is also the generator id order of
    ``algebra``. ``pairing`` is the involution used on leftover vertices.
    """

    algebra: MCAlgebra
    element: Polynomial
    matrix: SparseIntMatrix
    pairing: Optional[Mapping[int, int]] = None

    def dump(self) -> str:
        return self.algebra.dump(self.element)


def bilinear_matrix(alg: MCAlgebra, element: Polynomial) -> SparseIntMatrix:
    """Matrix of a quadratic element with graded symmetry.

    A term ``c * a b`` (``a < b`` by id) sets ``M[a][b] = c`` and
    ``M[b][a] = (-1)^{|a||b|} c`` with ``|.|`` the generator degree; a term
    ``c * a^2`` with ``a`` even sets ``M[a][a] = 2c``.
    """
    n = alg.n_generators
    entries: dict[tuple[int, int], int] = {}

    def add(r, c, v):
        entries[(r, c)] = entries.get((r, c), 0) + v

    for mono, c in element.terms.items():
        if len(mono) == 2 and mono[0][1] == 1 and mono[1][1] == 1:
            (a, _), (b, _) = mono
            ga, gb = alg.generators[a], alg.generators[b]
            add(a, b, c)
            add(b, a, -c if ga.is_odd and gb.is_odd else c)
        elif len(mono) == 1 and mono[0][1] == 2:
            add(mono[0][0], mono[0][0], 2 * c)
        else:
            raise ValueError(f"term {alg.dump(Polynomial.monomial(mono, c))} is not quadratic")
    return SparseIntMatrix(n, n, entries)


def _generator_index(alg: MCAlgebra) -> dict[tuple[str, tuple[int, ...]], Generator]:
    return {(gen.kind, gen.support): gen for gen in alg.generators}


def form_from_element(g: Hypergraph, element: Polynomial, alg: Optional[MCAlgebra] = None) -> SymplecticForm:
    alg = alg or mc_algebra(g)
    return SymplecticForm(alg, element, bilinear_matrix(alg, element))


def build_omega(g: Hypergraph, sdr: SDR) -> SymplecticForm:
    if (g.n_vertices + g.n_edges) % 2:
        raise ValueError("|V| + |E| is odd; no symplectic form exists")
    if not sdr.is_valid_for(g):
        raise ValueError("not a system of distinct representatives for this hypergraph")
    alg = mc_algebra(g)
    index = _generator_index(alg)

    def dual(kind, support):
        return alg.gen(index[(kind, tuple(support))].id)

    element = Polynomial()
    for e in g.edges:
        element = element + alg.multiply(dual("edge", e), dual("vertex", (sdr.assignment[e],)))
    used = set(sdr.assignment.values())
    leftover = [v for v in g.vertices if v not in used]
    pairing = {}
    for i, j in zip(leftover[::2], leftover[1::2]):
        pairing[i], pairing[j] = j, i
        element = element + alg.multiply(dual("vertex", (i,)), dual("vertex", (j,)))
    return SymplecticForm(alg, element, bilinear_matrix(alg, element), pairing)


@dataclass(frozen=True)
class SymplecticDecision:
    symplectic: bool
    reason: Optional[str] = None
    sdr: Optional[SDR] = None
    form: Optional[SymplecticForm] = None
    violator: Optional[HallViolator] = None


def is_symplectic(g: Hypergraph) -> SymplecticDecision:
    """Decide symplecticity: even ``|V| + |E|`` and an SDR, with a certificate form."""
    found = find_sdr(g)
    violator = found if isinstance(found, HallViolator) else None
    sdr = found if isinstance(found, SDR) else None
    if (g.n_vertices + g.n_edges) % 2:
        return SymplecticDecision(False, "odd_parity", sdr=sdr, violator=violator)
    if violator is not None:
        return SymplecticDecision(False, "hall_violator", violator=violator)
    return SymplecticDecision(True, sdr=sdr, form=build_omega(g, sdr))


@dataclass(frozen=True)
class SymplecticCheck:
    closed: bool
    nondegenerate: bool
    isotropic_commutator: bool
    matrix_consistent: bool
    edges_at_most_vertices: bool
    determinant: int
    differential: Polynomial

    @property
    def ok(self) -> bool:
        return self.closed and self.nondegenerate and self.isotropic_commutator and self.matrix_consistent


def verify_symplectic(g: Hypergraph, form: SymplecticForm) -> SymplecticCheck:
    """Closedness, invertibility of the matrix, and isotropy of the commutator.

    The commutator of ``L(G)`` is the span of the edges, so isotropy means
    every edge-edge entry vanishes. ``|E| <= |V|`` is a necessary condition
    reported alongside.
    """
    alg = form.algebra
    d_omega = alg.differential(form.element)
    try:
        recomputed = bilinear_matrix(alg, form.element)
        consistent = recomputed.entries == form.matrix.entries
    except ValueError:
        consistent = False
    m = form.matrix
    edge_ids = {gen.id for gen in alg.generators if gen.kind == "edge"}
    isotropic = all(not (r in edge_ids and c in edge_ids) for (r, c) in m.entries)
    full_rank = m.rows == m.cols and rank(m) == m.rows
    det = determinant(m) if m.rows == m.cols else 0
    return SymplecticCheck(
        closed=not d_omega,
        nondegenerate=full_rank,
        isotropic_commutator=isotropic,
        matrix_consistent=consistent,
        edges_at_most_vertices=g.n_edges <= g.n_vertices,
        determinant=det,
        differential=d_omega,
    )
