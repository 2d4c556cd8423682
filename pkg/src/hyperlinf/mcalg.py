"""Free graded-commutative algebras on dual generators and their differentials.

A monomial is a tuple of ``(generator id, exponent)`` pairs sorted by id;
odd generators carry exponent 1. Products are normalized to this order and
pick up the Koszul sign ``(-1)^t``, ``t`` the number of odd-odd transpositions
needed. This fixes one sign convention for the Maurer-Cartan algebra; any
other consistent choice yields an isomorphic complex.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping, Optional, Sequence, Union

from .hypergraph import Hypergraph
from .linfty import LInftyAlgebra, build_linfty
from . import series

Rational = Union[int, Fraction]
Monomial = tuple[tuple[int, int], ...]

ONE: Monomial = ()


@dataclass(frozen=True)
class Generator:
    """A dual generator.

    ``kind`` is ``"vertex"`` for ``x_v*`` (degree 1) and ``"edge"`` for
    ``x_I*`` (degree ``|I| - 1``); ``support`` is ``(v,)`` or ``I``.
    """

    id: int
    kind: str
    support: tuple[int, ...]
    degree: int

    @property
    def parity(self) -> int:
        return self.degree % 2

    @property
    def is_odd(self) -> bool:
        return self.degree % 2 == 1

    @property
    def label(self) -> str:
        if self.kind == "vertex":
            return f"x{self.support[0]}*"
        return "e{" + ",".join(map(str, self.support)) + "}*"


class Polynomial:
    """Sparse exact linear combination of monomials.

    Only linear structure lives here; products and the differential need the
    generator parities and are methods of :class:`MCAlgebra`.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[Monomial, Rational]] = None):
        self.terms: dict[Monomial, Rational] = {m: c for m, c in (terms or {}).items() if c != 0}

    @classmethod
    def monomial(cls, m: Monomial, coeff: Rational = 1) -> "Polynomial":
        return cls({m: coeff})

    @classmethod
    def one(cls) -> "Polynomial":
        return cls({ONE: 1})

    def __add__(self, other: "Polynomial") -> "Polynomial":
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, 0) + c
        return Polynomial(terms)

    def __neg__(self) -> "Polynomial":
        return Polynomial({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __rmul__(self, scalar: Rational) -> "Polynomial":
        return Polynomial({m: scalar * c for m, c in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[Monomial, Rational]]:
        return iter(sorted(self.terms.items()))

    def __repr__(self):
        return f"Polynomial({dict(sorted(self.terms.items()))!r})"


class MCAlgebra:
    """A free graded-commutative algebra with a derivation given on generators.

    ``diff_table[i]`` is the value of ``d`` on generator ``i``; generators
    absent from the table are closed. Generator ids must be ``0..n-1``.
    """

    def __init__(self, generators: Sequence[Generator], diff_table: Mapping[int, Polynomial]):
        self.generators = tuple(generators)
        if [g.id for g in self.generators] != list(range(len(self.generators))):
            raise ValueError("generator ids must be dense and ordered")
        self.diff_table = {i: p for i, p in diff_table.items() if p}
        self._odd = tuple(g.is_odd for g in self.generators)
        self._deg = tuple(g.degree for g in self.generators)
        self._dcache: dict[Monomial, dict[Monomial, Rational]] = {}

    def __eq__(self, other):
        return (
            isinstance(other, MCAlgebra)
            and self.generators == other.generators
            and self.diff_table == other.diff_table
        )

    def __repr__(self):
        return f"MCAlgebra({len(self.generators)} generators)"

    @property
    def n_generators(self) -> int:
        return len(self.generators)

    def generator(self, label: str) -> Polynomial:
        for g in self.generators:
            if g.label == label:
                return Polynomial.monomial(((g.id, 1),))
        raise KeyError(label)

    def gen(self, i: int) -> Polynomial:
        return Polynomial.monomial(((i, 1),))

    def mono_degree(self, m: Monomial) -> int:
        return sum(e * self._deg[i] for i, e in m)

    def degree(self, p: Polynomial) -> int:
        """Degree of a homogeneous polynomial (``ValueError`` otherwise)."""
        degrees = {self.mono_degree(m) for m in p.terms}
        if len(degrees) != 1:
            raise ValueError("polynomial is zero or not homogeneous")
        return degrees.pop()

    def mul_monomials(self, a: Monomial, b: Monomial) -> tuple[int, Monomial]:
        """Return ``(sign, a*b)`` with ``sign`` 0 when an odd generator repeats."""
        odd = self._odd
        odd_left = sum(1 for i, _ in a if odd[i])
        out = []
        t = 0
        ia = ib = 0
        while ia < len(a) and ib < len(b):
            ga, ea = a[ia]
            gb, eb = b[ib]
            if ga < gb:
                out.append(a[ia])
                if odd[ga]:
                    odd_left -= 1
                ia += 1
            elif gb < ga:
                out.append(b[ib])
                if odd[gb]:
                    t += odd_left
                ib += 1
            else:
                if odd[ga]:
                    return 0, ONE
                out.append((ga, ea + eb))
                ia += 1
                ib += 1
        out.extend(a[ia:])
        out.extend(b[ib:])
        return (-1 if t % 2 else 1), tuple(out)

    def multiply(self, p: Polynomial, q: Polynomial) -> Polynomial:
        acc: dict[Monomial, Rational] = {}
        for ma, ca in p.terms.items():
            for mb, cb in q.terms.items():
                sign, m = self.mul_monomials(ma, mb)
                if sign:
                    acc[m] = acc.get(m, 0) + sign * ca * cb
        return Polynomial(acc)

    def d_monomial(self, m: Monomial) -> dict[Monomial, Rational]:
        """``d`` of a single monomial as a ``{monomial: coefficient}`` dict (cached).

        Leibniz rule with the factors in id order: the ``j``-th factor
        contributes ``(-1)^{deg(prefix)} * e_j * prefix * g_j^{e_j-1} * d(g_j) * suffix``.
        """
        cached = self._dcache.get(m)
        if cached is not None:
            return cached
        acc: dict[Monomial, Rational] = {}
        prefix_degree = 0
        for j, (gid, e) in enumerate(m):
            dg = self.diff_table.get(gid)
            if dg is not None:
                left = m[:j] + (((gid, e - 1),) if e > 1 else ())
                right = m[j + 1:]
                base = -e if prefix_degree % 2 else e
                for mono, c in dg.terms.items():
                    s1, lm = self.mul_monomials(left, mono)
                    if not s1:
                        continue
                    s2, full = self.mul_monomials(lm, right)
                    if not s2:
                        continue
                    acc[full] = acc.get(full, 0) + s1 * s2 * base * c
            prefix_degree += e * self._deg[gid]
        result = {k: v for k, v in acc.items() if v != 0}
        self._dcache[m] = result
        return result

    def differential(self, p: Polynomial) -> Polynomial:
        acc: dict[Monomial, Rational] = {}
        for m, c in p.terms.items():
            for dm, dc in self.d_monomial(m).items():
                acc[dm] = acc.get(dm, 0) + c * dc
        return Polynomial(acc)

    def is_closed_generator(self, i: int) -> bool:
        return i not in self.diff_table

    def dump(self, p: Polynomial) -> str:
        """Canonical one-line text form, e.g. ``+1 x1* x2* | -1 x3* e{1,2}*``."""
        if not p:
            return "0"
        parts = []
        for m, c in p:
            factors = []
            for i, e in m:
                label = self.generators[i].label
                factors.append(label if e == 1 else f"{label}^{e}")
            sign = "+" if c > 0 else "-"
            parts.append(" ".join([f"{sign}{abs(c)}"] + (factors or ["1"])))
        return " | ".join(parts)


def maurer_cartan(alg: LInftyAlgebra) -> MCAlgebra:
    """The Maurer-Cartan algebra of ``L(G)``: transpose the bracket tables.

    Vertex duals get ids ``0..n-1`` in vertex order, then edge duals in the
    canonical edge order. ``l_k(x_{i1},...,x_{ik}) = s * x_I`` on increasing
    indices contributes ``s * x_{i1}* ... x_{ik}*`` to ``d(x_I*)``.
    """
    generators = []
    index = {}
    for i, b in enumerate(alg.basis):
        generators.append(Generator(i, b.kind, b.support, 1 - b.degree))
        index[b] = i
    diff: dict[int, dict[Monomial, Rational]] = {}
    vertex_id = {b.support[0]: index[b] for b in alg.basis if b.is_vertex}
    for k, table in alg.brackets.items():
        for key in table:
            value = alg.bracket_on_vertices(key)
            mono = tuple((vertex_id[v], 1) for v in key)
            for target, coeff in value.terms.items():
                slot = diff.setdefault(index[target], {})
                slot[mono] = slot.get(mono, 0) + coeff
    return MCAlgebra(generators, {i: Polynomial(t) for i, t in diff.items()})


def mc_algebra(g: Hypergraph) -> MCAlgebra:
    return maurer_cartan(build_linfty(g))


def reduce_algebra(alg: MCAlgebra) -> MCAlgebra:
    """Eliminate contractible pairs ``(y, x)`` with ``deg y = 0`` and ``d y = c * x``.

    Every term of another generator's differential that contains such an
    ``x`` has the form ``x * m`` with ``m`` closed, so it equals
    ``d(c^-1 * y * m)``; subtracting that correction from the generator is a
    triangular change of generators that deletes the term. The algebra then
    splits as a tensor product of the acyclic pieces ``k[y] (x) Lambda[x]``
    with the algebra on the surviving generators, which has the same
    cohomology.
    """
    x_of_y: dict[int, int] = {}
    for g in alg.generators:
        if g.degree != 0:
            continue
        dg = alg.diff_table.get(g.id)
        if dg is None or len(dg) != 1:
            continue
        (mono, c), = dg.terms.items()
        if len(mono) != 1 or mono[0][1] != 1:
            continue
        x = mono[0][0]
        if alg.is_closed_generator(x) and x not in x_of_y.values():
            x_of_y[g.id] = x
    if not x_of_y:
        return alg
    dropped_x = set(x_of_y.values())
    dropped = set(x_of_y) | dropped_x

    new_diff: dict[int, Polynomial] = {}
    for i, p in alg.diff_table.items():
        if i in dropped:
            continue
        kept = {}
        for mono, c in p.terms.items():
            ids = [gid for gid, _ in mono]
            if any(gid in x_of_y for gid in ids):
                raise ValueError(f"differential of generator {i} involves an eliminated degree-0 generator")
            hit = [gid for gid in ids if gid in dropped_x]
            if not hit:
                kept[mono] = c
                continue
            residual = [gid for gid in ids if gid != hit[0]]
            if not all(alg.is_closed_generator(gid) for gid in residual):
                raise ValueError(f"cannot eliminate: residual of generator {i} is not closed")
        new_diff[i] = Polynomial(kept)

    survivors = [g for g in alg.generators if g.id not in dropped]
    renumber = {g.id: n for n, g in enumerate(survivors)}
    generators = [Generator(renumber[g.id], g.kind, g.support, g.degree) for g in survivors]
    diff = {}
    for old, p in new_diff.items():
        terms = {}
        for mono, c in p.terms.items():
            terms[tuple((renumber[gid], e) for gid, e in mono)] = c
        diff[renumber[old]] = Polynomial(terms)
    return reduce_algebra(MCAlgebra(generators, diff))


def koszul_reduce(g: Hypergraph) -> MCAlgebra:
    """Reduced Maurer-Cartan algebra of ``L(G)`` with all 1-edge pairs eliminated.

    Keeps ``x_v*`` for vertices without a 1-edge and ``x_I*`` for ``|I| >= 2``;
    ``d x_I*`` is the product of its vertex duals unless ``I`` meets a
    1-edged vertex, in which case it is 0. All generators have degree >= 1.
    """
    return reduce_algebra(mc_algebra(g))


class CapRequired(ValueError):
    pass


def enumerate_basis(alg: MCAlgebra, degree: int, cap: Optional[int] = None) -> list[Monomial]:
    """All monomials of total degree ``degree`` in id-lexicographic order.

    Degree-0 generators make each graded piece infinite; ``cap`` then bounds
    their total exponent and is mandatory.
    """
    gens = alg.generators
    if any(g.degree == 0 for g in gens) and cap is None:
        raise CapRequired("algebra has degree-0 generators; a truncation cap is required")
    cap = cap if cap is not None else 0
    n = len(gens)
    # reach[j]: max degree attainable from generators j.. (None when unbounded)
    reach: list[Optional[int]] = [0] * (n + 1)
    for j in range(n - 1, -1, -1):
        g = gens[j]
        if reach[j + 1] is None or (not g.is_odd and g.degree > 0):
            reach[j] = None
        else:
            reach[j] = reach[j + 1] + g.degree
    zero_after = [False] * (n + 1)
    for j in range(n - 1, -1, -1):
        zero_after[j] = zero_after[j + 1] or gens[j].degree == 0
    out: list[Monomial] = []

    def rec(j: int, remaining: int, budget: int, acc: list):
        if remaining == 0 and not zero_after[j]:
            out.append(tuple(acc))
            return
        if j == n:
            if remaining == 0:
                out.append(tuple(acc))
            return
        if reach[j] is not None and reach[j] < remaining:
            return
        g = gens[j]
        if g.degree == 0:
            for e in range(budget + 1):
                if e:
                    acc.append((g.id, e))
                rec(j + 1, remaining, budget - e, acc)
                if e:
                    acc.pop()
            return
        rec(j + 1, remaining, budget, acc)
        top = 1 if g.is_odd else remaining // g.degree
        for e in range(1, top + 1):
            if e * g.degree > remaining:
                break
            acc.append((g.id, e))
            rec(j + 1, remaining - e * g.degree, budget, acc)
            acc.pop()

    if degree >= 0:
        rec(0, degree, cap, [])
    out.sort()
    return out


def dim_series(g: Hypergraph, max_degree: int) -> list[int]:
    """Coefficients ``c_0..c_max`` of the graded dimension of ``C(L(G))``.

    ``(1+t)^|V| * prod_p (1+t^(2p-1))^|E_2p| / prod_q (1-t^(2q))^|E_(2q+1)|``;
    only defined without 1-edges.
    """
    profile = g.profile()
    if profile.count(1):
        raise ValueError("graded pieces are infinite-dimensional when 1-edges are present")
    s = series.binomial_power(1, g.n_vertices, max_degree)
    for k, count in profile.counts_by_size.items():
        if k % 2 == 0:
            s = series.mul(s, series.binomial_power(k - 1, count, max_degree), max_degree)
        else:
            s = series.mul(s, series.geometric_power(k - 1, count, max_degree), max_degree)
    return s


def reduced_dim_series(g: Hypergraph, max_degree: int) -> list[int]:
    """Graded dimension of the reduced algebra: the same product with the
    1-edged vertices and the 1-edges dropped."""
    profile = g.profile()
    s = series.binomial_power(1, g.n_vertices - profile.count(1), max_degree)
    for k, count in profile.counts_by_size.items():
        if k == 1:
            continue
        if k % 2 == 0:
            s = series.mul(s, series.binomial_power(k - 1, count, max_degree), max_degree)
        else:
            s = series.mul(s, series.geometric_power(k - 1, count, max_degree), max_degree)
    return s


@dataclass(frozen=True)
class DSquaredReport:
    holds: bool
    witness: Optional[Polynomial] = None


def random_polynomial(
    alg: MCAlgebra,
    rng: random.Random,
    degree: Optional[int] = None,
    n_terms: int = 4,
    max_factors: int = 4,
    max_exponent: int = 3,
) -> Polynomial:
    """A random polynomial with small integer coefficients.

    With ``degree`` given the result is homogeneous of that degree (possibly
    zero if no monomial of that degree is hit).
    """
    if not alg.generators:
        return Polynomial.one()
    acc = Polynomial()
    attempts = 0
    while len(acc) < n_terms and attempts < 50 * n_terms:
        attempts += 1
        chosen: dict[int, int] = {}
        for _ in range(rng.randint(0, max_factors)):
            g = rng.choice(alg.generators)
            if g.is_odd:
                chosen[g.id] = 1
            else:
                chosen[g.id] = chosen.get(g.id, 0) + rng.randint(1, max_exponent)
        mono = tuple(sorted(chosen.items()))
        if degree is not None and alg.mono_degree(mono) != degree:
            continue
        acc = acc + Polynomial.monomial(mono, rng.choice([-3, -2, -1, 1, 2, 3]))
    return acc


def check_d_squared(alg: MCAlgebra, trials: int = 50, seed: int = 0) -> DSquaredReport:
    """Verify ``d(d(x)) = 0`` on every generator and on ``trials`` random polynomials."""
    for i in range(alg.n_generators):
        dd = alg.differential(alg.differential(alg.gen(i)))
        if dd:
            return DSquaredReport(False, alg.gen(i))
    rng = random.Random(seed)
    for _ in range(trials):
        p = random_polynomial(alg, rng)
        if alg.differential(alg.differential(p)):
            return DSquaredReport(False, p)
    return DSquaredReport(True)

