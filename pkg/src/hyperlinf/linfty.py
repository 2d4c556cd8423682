"""The 2-step nilpotent L-infinity algebra attached to a hypergraph.

The graded space has one basis vector ``x_v`` in degree 0 per vertex and one
basis vector ``x_I`` in degree ``2 - |I|`` per edge. The only nonvanishing
operations are ``l_k(x_{i1}, ..., x_{ik}) = +-x_I`` for ``I = {i1..ik}`` an
edge; any argument of edge kind kills the bracket.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, product
from typing import Iterable, Mapping, Optional, Sequence, Union

from .hypergraph import Edge, Hypergraph

Rational = Union[int, Fraction]


@dataclass(frozen=True, order=True)
class BasisElement:
    """``Vertex(v)`` when ``kind == "vertex"`` (support ``(v,)``), else ``Edge(I)``."""

    kind: str
    support: tuple[int, ...]

    @classmethod
    def vertex(cls, v: int) -> "BasisElement":
        return cls("vertex", (v,))

    @classmethod
    def edge(cls, edge: Iterable[int]) -> "BasisElement":
        return cls("edge", tuple(sorted(edge)))

    @property
    def is_vertex(self) -> bool:
        return self.kind == "vertex"

    @property
    def degree(self) -> int:
        return 0 if self.is_vertex else 2 - len(self.support)

    def __str__(self):
        if self.is_vertex:
            return f"x{self.support[0]}"
        return "x{" + ",".join(map(str, self.support)) + "}"


class Element:
    """A finite linear combination of basis elements with exact coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[BasisElement, Rational]] = None):
        self.terms: dict[BasisElement, Rational] = {b: c for b, c in (terms or {}).items() if c != 0}

    @classmethod
    def basis(cls, b: BasisElement, coeff: Rational = 1) -> "Element":
        return cls({b: coeff})

    def __add__(self, other: "Element") -> "Element":
        terms = dict(self.terms)
        for b, c in other.terms.items():
            terms[b] = terms.get(b, 0) + c
        return Element(terms)

    def __neg__(self) -> "Element":
        return Element({b: -c for b, c in self.terms.items()})

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def __rmul__(self, scalar: Rational) -> "Element":
        return Element({b: scalar * c for b, c in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, Element) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*{b}" for b, c in sorted(self.terms.items()))


def _sort_sign(seq: Sequence[int]) -> int:
    """Sign of the permutation sorting ``seq`` (0 when ``seq`` has repeats)."""
    if len(set(seq)) != len(seq):
        return 0
    inversions = sum(1 for i, j in combinations(range(len(seq)), 2) if seq[i] > seq[j])
    return -1 if inversions % 2 else 1


@dataclass(frozen=True)
class LInftyAlgebra:
    hypergraph: Hypergraph
    basis: tuple[BasisElement, ...]
    brackets: Mapping[int, Mapping[Edge, BasisElement]]

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def max_arity(self) -> int:
        return max(self.brackets, default=0)

    def bracket_on_vertices(self, vertices: Sequence[int]) -> Element:
        """``l_k(x_{v1}, ..., x_{vk})`` on vertex generators."""
        table = self.brackets.get(len(vertices))
        if not table:
            return Element()
        sign = _sort_sign(vertices)
        if sign == 0:
            return Element()
        target = table.get(tuple(sorted(vertices)))
        if target is None:
            return Element()
        return Element.basis(target, sign)


def build_linfty(g: Hypergraph) -> LInftyAlgebra:
    basis = [BasisElement.vertex(v) for v in g.vertices]
    brackets: dict[int, dict[Edge, BasisElement]] = {}
    for e in g.edges:
        b = BasisElement.edge(e)
        basis.append(b)
        brackets.setdefault(len(e), {})[e] = b
    return LInftyAlgebra(g, tuple(basis), brackets)


def bracket(alg: LInftyAlgebra, args: Sequence[Element]) -> Element:
    """Multilinear ``l_k`` with ``k = len(args)``.

    Any edge-kind component contributes zero; on vertex components the result
    is the sign of the sorting permutation times the edge basis vector.
    """
    if len(args) < 1:
        raise ValueError("bracket needs at least one argument")
    vertex_parts = []
    for arg in args:
        part = [(b.support[0], c) for b, c in arg.terms.items() if b.is_vertex]
        if not part:
            return Element()
        vertex_parts.append(part)
    acc: dict[BasisElement, Rational] = {}
    for choice in product(*vertex_parts):
        value = alg.bracket_on_vertices([v for v, _ in choice])
        if not value:
            continue
        coeff = 1
        for _, c in choice:
            coeff *= c
        for b, c in value.terms.items():
            acc[b] = acc.get(b, 0) + coeff * c
    return Element(acc)


def _basis_bracket(alg: LInftyAlgebra, elems: Sequence[BasisElement]) -> Element:
    return bracket(alg, [Element.basis(b) for b in elems])


def _compositions_as_partitions(total: int, max_parts: int):
    """Multisets of positive parts summing to ``total`` (at most ``max_parts`` parts)."""

    def rec(remaining, largest, parts):
        if remaining == 0:
            yield tuple(parts)
            return
        if len(parts) == max_parts:
            return
        for p in range(min(remaining, largest), 0, -1):
            yield from rec(remaining - p, p, parts + [p])

    yield from rec(total, total, [])


def _argument_tuples(parts: Sequence[int], filtration: Mapping[int, Sequence[BasisElement]]):
    # graded antisymmetry: argument order within a block of equal filtration index only affects signs
    blocks = Counter(parts)
    per_block = [combinations_with_replacement(filtration[i], m) for i, m in sorted(blocks.items())]
    for choice in product(*per_block):
        yield tuple(b for block in choice for b in block)


def _l1_closure(alg: LInftyAlgebra, span: set[BasisElement]) -> set[BasisElement]:
    while True:
        grown = set(span)
        for b in span:
            grown.update(_basis_bracket(alg, [b]).terms)
        if grown == span:
            return span
        span = grown


def _depth_filtration(alg: LInftyAlgebra) -> list[int]:
    # F^i = sum_k l_k(F^{i-1}, g, ..., g): brackets with a bracket-depth i-1 argument
    top = alg.max_arity
    previous = alg.basis
    dims = [len(alg.basis)]
    while previous:
        span: set[BasisElement] = set()
        for k in range(1, top + 1):
            for first in previous:
                for rest in combinations_with_replacement(alg.basis, k - 1):
                    span.update(_basis_bracket(alg, (first,) + rest).terms)
        previous = tuple(sorted(span))
        dims.append(len(span))
    if len(dims) > 3:
        raise AssertionError(f"F^3 has dimension {dims[2]}; 2-step nilpotency violated")
    return dims


def _weighted_filtration(alg: LInftyAlgebra) -> list[int]:
    top = max(alg.max_arity, 1)
    filtration: dict[int, tuple[BasisElement, ...]] = {1: alg.basis}
    dims = [len(alg.basis)]
    for i in range(2, top + 2):
        span: set[BasisElement] = set()
        for parts in _compositions_as_partitions(i, top):
            if len(parts) == 1:
                continue
            for args in _argument_tuples(parts, filtration):
                span.update(_basis_bracket(alg, args).terms)
        span = _l1_closure(alg, span)
        filtration[i] = tuple(sorted(span))
        dims.append(len(span))
    if dims[-1] != 0:
        raise AssertionError(f"F^{top + 1} is nonzero; 2-step nilpotency violated")
    return dims


def lower_central_filtration(alg: LInftyAlgebra, convention: str = "depth") -> list[int]:
    """Dimensions of the lower central filtration, ending with the first zero.

    ``convention="depth"`` (default): ``F^1 = g`` and ``F^i`` is spanned by
    ``l_k(F^{i-1}, g, ..., g)`` over all ``k``, i.e. brackets nested ``i-1``
    deep. For ``L(G)`` this is ``[|V|+|E|, |E|, 0]`` (or ``[|V|, 0]`` without
    edges), and ``F^3 = 0`` is exactly 2-step nilpotency, which is asserted.

    ``convention="weighted"``: ``F^i`` is spanned by ``l_k(F^{i1}, ..., F^{ik})``
    with ``i1 + ... + ik = i``, the ``k = 1`` term handled by ``l_1``-closure.
    For ``L(G)`` this gives ``F^i = span(E_i)`` for ``i >= 2``; the pieces are
    not nested, so the result runs to ``F^(m+1) = 0`` with ``m`` the largest
    arity, which is asserted.

    Brackets of basis vectors are signed basis vectors, so every piece is
    spanned by a subset of the basis and dimensions are subset sizes.
    """
    if convention == "depth":
        return _depth_filtration(alg)
    if convention == "weighted":
        return _weighted_filtration(alg)
    raise ValueError(f"unknown convention {convention!r}")


@dataclass(frozen=True)
class NilpotencyReport:
    holds: bool
    witness: Optional[tuple] = None


def check_2step(alg: LInftyAlgebra) -> NilpotencyReport:
    """Evaluate every nested bracket ``l_k(l_j(...), ...)`` on basis vectors.

    Arities above the largest edge size give identically zero brackets, so
    both ``j`` and ``k`` range up to ``max_arity``.
    """
    top = alg.max_arity
    for j in range(1, top + 1):
        for inner_args in combinations(alg.basis, j):
            inner = _basis_bracket(alg, inner_args)
            if not inner:
                continue
            for k in range(1, top + 1):
                for rest in combinations_with_replacement(alg.basis, k - 1):
                    outer = bracket(alg, [inner] + [Element.basis(b) for b in rest])
                    if outer:
                        return NilpotencyReport(False, (j, inner_args, k, rest, outer))
    return NilpotencyReport(True)


def commutator_dims(alg: LInftyAlgebra) -> tuple[int, int]:
    """``(dim l(g), dim g / l(g))`` where ``l(g)`` is the span of all bracket images."""
    image: set[BasisElement] = set()
    for k in range(1, alg.max_arity + 1):
        for args in combinations(alg.basis, k):
            image.update(_basis_bracket(alg, args).terms)
    return len(image), alg.dim - len(image)
