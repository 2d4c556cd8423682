import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperlinf import Hypergraph, complete_uniform
from hyperlinf.mcalg import (
    CapRequired,
    Generator,
    MCAlgebra,
    Polynomial,
    check_d_squared,
    dim_series,
    enumerate_basis,
    koszul_reduce,
    mc_algebra,
    random_polynomial,
    reduce_algebra,
    reduced_dim_series,
)
from oracles import count_monomials, series_from_factors
from strategies import hypergraphs


def koszul_sign_by_sorting(alg, a, b):
    """Sign of ``a*b`` by bubble-sorting the expanded factor word."""
    word = [i for i, e in a for _ in range(e)] + [i for i, e in b for _ in range(e)]
    sign = 1
    for i in range(len(word)):
        for j in range(len(word) - 1 - i):
            if word[j] > word[j + 1]:
                if alg.generators[word[j]].is_odd and alg.generators[word[j + 1]].is_odd:
                    sign = -sign
                word[j], word[j + 1] = word[j + 1], word[j]
    for u, v in zip(word, word[1:]):
        if u == v and alg.generators[u].is_odd:
            return 0
    return sign


MIXED = Hypergraph.from_edges(4, [[1], [1, 2], [2, 3, 4], [1, 2, 3, 4]])


def test_generator_degrees():
    alg = mc_algebra(MIXED)
    degrees = {g.label: g.degree for g in alg.generators}
    assert degrees == {"x1*": 1, "x2*": 1, "x3*": 1, "x4*": 1, "e{1}*": 0, "e{1,2}*": 1, "e{2,3,4}*": 2, "e{1,2,3,4}*": 3}
    assert [g.id for g in alg.generators] == list(range(8))


def test_multiplication_examples():
    alg = mc_algebra(Hypergraph.from_edges(2, [[1], [1, 2]]))
    x1, x2, y = alg.generator("x1*"), alg.generator("x2*"), alg.generator("e{1}*")
    assert alg.multiply(x1, x2) == Polynomial.monomial(((0, 1), (1, 1)))
    assert alg.multiply(x2, x1) == -alg.multiply(x1, x2)
    assert not alg.multiply(x1, x1)
    cube = alg.multiply(alg.multiply(y, y), y)
    assert cube == Polynomial.monomial(((2, 3),))


def monomials_of(alg):
    odd = [g.id for g in alg.generators if g.is_odd]
    even = [g.id for g in alg.generators if not g.is_odd]
    return st.tuples(
        st.sets(st.sampled_from(odd)) if odd else st.just(set()),
        st.dictionaries(st.sampled_from(even), st.integers(1, 3)) if even else st.just({}),
    ).map(lambda t: tuple(sorted([(i, 1) for i in t[0]] + list(t[1].items()))))


ALG = mc_algebra(MIXED)


@given(monomials_of(ALG), monomials_of(ALG))
def test_sign_matches_sorting_oracle(a, b):
    sign, m = ALG.mul_monomials(a, b)
    assert sign == koszul_sign_by_sorting(ALG, a, b)


@given(monomials_of(ALG), monomials_of(ALG))
def test_graded_commutativity(a, b):
    pa, pb = Polynomial.monomial(a), Polynomial.monomial(b)
    da, db = ALG.mono_degree(a), ALG.mono_degree(b)
    expected = ALG.multiply(pb, pa)
    if da % 2 and db % 2:
        expected = -expected
    assert ALG.multiply(pa, pb) == expected


@given(monomials_of(ALG), monomials_of(ALG), monomials_of(ALG))
def test_associativity(a, b, c):
    pa, pb, pc = (Polynomial.monomial(m) for m in (a, b, c))
    assert ALG.multiply(ALG.multiply(pa, pb), pc) == ALG.multiply(pa, ALG.multiply(pb, pc))


@given(monomials_of(ALG), monomials_of(ALG))
def test_derivation_law(a, b):
    pa, pb = Polynomial.monomial(a), Polynomial.monomial(b)
    lhs = ALG.differential(ALG.multiply(pa, pb))
    second = ALG.multiply(pa, ALG.differential(pb))
    if ALG.mono_degree(a) % 2:
        second = -second
    assert lhs == ALG.multiply(ALG.differential(pa), pb) + second


def test_differential_examples():
    two = mc_algebra(Hypergraph.from_edges(2, [[1, 2]]))
    e12, x1, x2 = two.generator("e{1,2}*"), two.generator("x1*"), two.generator("x2*")
    assert two.differential(e12) == two.multiply(x1, x2)
    assert not two.differential(two.multiply(x2, e12))

    one = mc_algebra(Hypergraph.from_edges(1, [[1]]))
    y, x = one.generator("e{1}*"), one.generator("x1*")
    power = Polynomial.monomial(((1, 4),))
    expected = 4 * one.multiply(Polynomial.monomial(((1, 3),)), x)
    assert one.differential(power) == expected
    assert one.differential(y) == x


def test_dump_format():
    two = mc_algebra(Hypergraph.from_edges(2, [[1, 2]]))
    p = two.multiply(two.generator("x1*"), two.generator("x2*")) - 3 * two.generator("e{1,2}*")
    assert two.dump(p) == "+1 x1* x2* | -3 e{1,2}*"
    assert two.dump(Polynomial()) == "0"
    y = mc_algebra(Hypergraph.from_edges(1, [[1]]))
    assert y.dump(Polynomial.monomial(((1, 2),), -1)) == "-1 e{1}*^2"
    assert y.dump(Polynomial.one()) == "+1 1"


@given(hypergraphs(max_n=6, max_edges=8))
@settings(max_examples=30, deadline=None)
def test_d_squared_on_random_hypergraphs(g):
    alg = mc_algebra(g)
    assert check_d_squared(alg, trials=20, seed=1).holds
    assert check_d_squared(koszul_reduce(g), trials=20, seed=1).holds


def test_d_squared_edgeless():
    alg = mc_algebra(Hypergraph(3))
    assert alg.diff_table == {}
    assert check_d_squared(alg).holds


def test_d_squared_negative_control():
    gens = [Generator(0, "vertex", (1,), 1), Generator(1, "edge", (1, 2), 2), Generator(2, "edge", (1, 2, 3), 3)]
    corrupted = MCAlgebra(gens, {0: Polynomial.monomial(((1, 1),)), 1: Polynomial.monomial(((2, 1),))})
    report = check_d_squared(corrupted)
    assert not report.holds
    assert report.witness == corrupted.gen(0)


def test_generator_ids_must_be_dense():
    with pytest.raises(ValueError):
        MCAlgebra([Generator(1, "vertex", (1,), 1)], {})


def test_reduce_one_vertex_one_loop():
    reduced = koszul_reduce(Hypergraph.from_edges(1, [[1]]))
    assert reduced.generators == () and reduced.diff_table == {}
    assert enumerate_basis(reduced, 0) == [()]
    assert enumerate_basis(reduced, 1) == []


def test_reduce_loop_and_edge():
    reduced = koszul_reduce(Hypergraph.from_edges(2, [[1], [1, 2]]))
    assert [g.label for g in reduced.generators] == ["x2*", "e{1,2}*"]
    assert reduced.diff_table == {}


def test_reduce_is_identity_without_loops(diamond_triple):
    alg = mc_algebra(diamond_triple)
    assert reduce_algebra(alg) is alg


@given(hypergraphs(max_n=5))
@settings(max_examples=40, deadline=None)
def test_reduce_shape(g):
    reduced = koszul_reduce(g)
    ones = g.profile().one_edged_vertices
    labels = [gen.label for gen in reduced.generators]
    expected = [f"x{v}*" for v in g.vertices if v not in ones]
    expected += ["e{" + ",".join(map(str, e)) + "}*" for e in g.edges if len(e) > 1]
    assert labels == expected
    assert all(gen.degree >= 1 for gen in reduced.generators)
    for gen in reduced.generators:
        if gen.kind == "edge":
            closed = bool(set(gen.support) & ones)
            assert reduced.is_closed_generator(gen.id) == closed
    assert reduce_algebra(reduced) == reduced


def test_reduce_rejects_non_closed_residual():
    # y -> x with another generator's differential x*z where z is not closed
    gens = [
        Generator(0, "edge", (1,), 0),
        Generator(1, "vertex", (1,), 1),
        Generator(2, "vertex", (2,), 1),
        Generator(3, "edge", (1, 2), 2),
        Generator(4, "edge", (1, 2, 3), 3),
    ]
    table = {
        0: Polynomial.monomial(((1, 1),)),
        2: Polynomial.monomial(((3, 1),)),
        4: Polynomial.monomial(((1, 1), (2, 1), (3, 0 + 1))),
    }
    with pytest.raises(ValueError):
        reduce_algebra(MCAlgebra(gens, table))


def test_enumerate_basis_examples():
    two = mc_algebra(Hypergraph.from_edges(2, [[1, 2]]))
    assert [two.dump(Polynomial.monomial(m)) for m in enumerate_basis(two, 2)] == [
        "+1 x1* x2*", "+1 x1* e{1,2}*", "+1 x2* e{1,2}*",
    ]
    three = mc_algebra(Hypergraph.from_edges(3, [[1, 2, 3]]))
    assert len(enumerate_basis(three, 2)) == 4
    assert enumerate_basis(two, 0) == [()]
    assert enumerate_basis(two, -1) == []


def test_enumerate_basis_requires_cap():
    alg = mc_algebra(Hypergraph.from_edges(1, [[1]]))
    with pytest.raises(CapRequired):
        enumerate_basis(alg, 1)
    assert len(enumerate_basis(alg, 1, cap=3)) == 4  # x1* y^j, j = 0..3
    assert len(enumerate_basis(alg, 0, cap=3)) == 4


@given(hypergraphs(max_n=5, sizes=(2, 3, 4)), st.integers(0, 6))
@settings(max_examples=40, deadline=None)
def test_enumerate_basis_matches_product_oracle(g, degree):
    alg = mc_algebra(g)
    monos = enumerate_basis(alg, degree)
    assert len(set(monos)) == len(monos)
    assert all(alg.mono_degree(m) == degree for m in monos)
    assert monos == sorted(monos)
    degrees = [gen.degree for gen in alg.generators]
    parities = [gen.is_odd for gen in alg.generators]
    assert len(monos) == count_monomials(degrees, parities, degree)


@pytest.mark.parametrize(
    "g, expected",
    [
        (Hypergraph.from_edges(2, [[1, 2]]), [1, 3, 3, 1, 0, 0]),
        (Hypergraph.from_edges(3, [[1, 2, 3]]), [1, 3, 4, 4, 4, 4]),
        (Hypergraph(2), [1, 2, 1, 0, 0, 0]),
    ],
)
def test_dim_series_examples(g, expected):
    assert dim_series(g, 5) == expected


@given(hypergraphs(max_n=6, sizes=(2, 3, 4), max_edges=8))
@settings(max_examples=30, deadline=None)
def test_dim_series_matches_factor_expansion(g):
    sizes = [len(e) for e in g.edges]
    assert dim_series(g, 7) == series_from_factors(g.n_vertices, sizes, 7)


def test_dim_series_rejects_loops():
    with pytest.raises(ValueError):
        dim_series(Hypergraph.from_edges(1, [[1]]), 3)


@given(hypergraphs(max_n=5))
@settings(max_examples=30, deadline=None)
def test_reduced_dim_series_matches_enumeration(g):
    reduced = koszul_reduce(g)
    predicted = reduced_dim_series(g, 6)
    assert predicted == [len(enumerate_basis(reduced, i)) for i in range(7)]


def test_random_polynomial_is_deterministic_and_homogeneous():
    alg = mc_algebra(complete_uniform(4, 3))
    a = random_polynomial(alg, random.Random(5), degree=3)
    b = random_polynomial(alg, random.Random(5), degree=3)
    assert a == b and a
    assert alg.degree(a) == 3


def test_degree_of_inhomogeneous_raises():
    alg = mc_algebra(Hypergraph.from_edges(2, [[1, 2]]))
    with pytest.raises(ValueError):
        alg.degree(alg.generator("x1*") + alg.multiply(alg.generator("x1*"), alg.generator("x2*")))
