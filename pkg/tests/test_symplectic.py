import random

import pytest
from hypothesis import given, settings

from hyperlinf import Hypergraph
from hyperlinf.mcalg import mc_algebra
from hyperlinf.symplectic import (
    SDR,
    HallViolator,
    bilinear_matrix,
    build_omega,
    find_sdr,
    form_from_element,
    is_symplectic,
    verify_symplectic,
)
from oracles import dense_det, hall_condition, has_sdr_brute
from strategies import hypergraphs

ONE_EDGE = Hypergraph.from_edges(3, [[1, 2]])


def planted(n, n_edges, seed):
    """A hypergraph whose edges each contain a distinct planted representative."""
    rng = random.Random(seed)
    reps = rng.sample(range(1, n + 1), n_edges)
    edges = set()
    for r in reps:
        while True:
            size = rng.randint(1, min(4, n))
            others = rng.sample([v for v in range(1, n + 1) if v != r], size - 1)
            e = tuple(sorted([r] + others))
            if e not in edges:
                edges.add(e)
                break
    return Hypergraph.from_edges(n, edges)


def test_diamond_triple_violator(diamond_triple):
    result = find_sdr(diamond_triple)
    assert isinstance(result, HallViolator)
    assert result.edges == ((1, 2), (1, 3), (2, 3), (2, 4), (3, 4))
    assert result.union_size == 4
    assert result.is_valid_for(diamond_triple)


def test_sdr_examples(k3):
    assert find_sdr(ONE_EDGE).assignment == {(1, 2): 1}
    sdr = find_sdr(k3)
    assert sdr.assignment == {(1, 2): 1, (1, 3): 3, (2, 3): 2}
    assert sdr.is_valid_for(k3)
    assert find_sdr(Hypergraph(3)).assignment == {}


@given(hypergraphs(max_n=5, max_edges=6))
@settings(max_examples=150, deadline=None)
def test_find_sdr_against_brute_force(g):
    result = find_sdr(g)
    assert has_sdr_brute(g.edges) == hall_condition(g.edges)
    if has_sdr_brute(g.edges):
        assert isinstance(result, SDR) and result.is_valid_for(g)
    else:
        assert isinstance(result, HallViolator) and result.is_valid_for(g)


def test_is_symplectic_examples(diamond_triple):
    yes = is_symplectic(ONE_EDGE)
    assert yes.symplectic and yes.form is not None
    no = is_symplectic(diamond_triple)
    assert not no.symplectic and no.reason == "hall_violator" and no.violator.union_size == 4
    odd = is_symplectic(Hypergraph.from_edges(2, [[1, 2]]))
    assert not odd.symplectic and odd.reason == "odd_parity"


def test_omega_single_edge():
    form = build_omega(ONE_EDGE, find_sdr(ONE_EDGE))
    alg = form.algebra
    expected = alg.multiply(alg.generator("e{1,2}*"), alg.generator("x1*")) + alg.multiply(
        alg.generator("x2*"), alg.generator("x3*")
    )
    assert form.element == expected
    assert form.dump() == "-1 x1* e{1,2}* | +1 x2* x3*"
    assert form.pairing == {2: 3, 3: 2}
    check = verify_symplectic(ONE_EDGE, form)
    assert check.ok and check.closed and abs(check.determinant) == 1
    # the edge-vertex term is closed on its own: d(e12* x1*) = x1* x2* x1* = 0
    assert not alg.differential(alg.multiply(alg.generator("e{1,2}*"), alg.generator("x1*")))


def test_omega_k3_and_two_edges(k3):
    form = build_omega(k3, find_sdr(k3))
    assert form.pairing == {}
    assert len(form.element) == 3
    assert verify_symplectic(k3, form).ok

    g = Hypergraph.from_edges(4, [[1, 2], [3, 4]])
    form = build_omega(g, SDR({(1, 2): 1, (3, 4): 3}))
    alg = form.algebra
    expected = (
        alg.multiply(alg.generator("e{1,2}*"), alg.generator("x1*"))
        + alg.multiply(alg.generator("e{3,4}*"), alg.generator("x3*"))
        + alg.multiply(alg.generator("x2*"), alg.generator("x4*"))
    )
    assert form.element == expected
    check = verify_symplectic(g, form)
    assert check.ok and abs(check.determinant) == 1


def test_matrix_against_dense_determinant(k3):
    form = build_omega(k3, find_sdr(k3))
    assert dense_det(form.matrix.to_dense()) == verify_symplectic(k3, form).determinant


def test_build_omega_rejects():
    with pytest.raises(ValueError):
        build_omega(Hypergraph.from_edges(2, [[1, 2]]), SDR({(1, 2): 1}))
    with pytest.raises(ValueError):
        build_omega(ONE_EDGE, SDR({(1, 2): 3}))


def test_degenerate_form(k3):
    alg = mc_algebra(k3)
    form = form_from_element(k3, alg.multiply(alg.generator("x1*"), alg.generator("x2*")), alg)
    check = verify_symplectic(k3, form)
    assert check.closed and not check.nondegenerate and not check.ok


def test_non_closed_form():
    alg = mc_algebra(ONE_EDGE)
    element = alg.multiply(alg.generator("e{1,2}*"), alg.generator("x3*")) + alg.multiply(
        alg.generator("x1*"), alg.generator("x2*")
    )
    check = verify_symplectic(ONE_EDGE, form_from_element(ONE_EDGE, element, alg))
    assert not check.closed and not check.ok
    x1x2x3 = alg.multiply(alg.multiply(alg.generator("x1*"), alg.generator("x2*")), alg.generator("x3*"))
    assert check.differential in (x1x2x3, -x1x2x3)


def test_edge_edge_block_detected():
    g = Hypergraph.from_edges(2, [[1], [2]])
    alg = mc_algebra(g)
    element = alg.multiply(alg.generator("e{1}*"), alg.generator("e{2}*")) + alg.multiply(
        alg.generator("x1*"), alg.generator("x2*")
    )
    check = verify_symplectic(g, form_from_element(g, element, alg))
    assert not check.isotropic_commutator and not check.ok


def test_bilinear_matrix_rejects_cubic(k3):
    alg = mc_algebra(k3)
    cubic = alg.multiply(alg.multiply(alg.generator("x1*"), alg.generator("x2*")), alg.generator("x3*"))
    with pytest.raises(ValueError):
        bilinear_matrix(alg, cubic)


def test_square_of_even_generator():
    alg = mc_algebra(Hypergraph.from_edges(1, [[1]]))
    square = alg.multiply(alg.generator("e{1}*"), alg.generator("e{1}*"))
    assert bilinear_matrix(alg, square).entries == {(1, 1): 2}


@pytest.mark.parametrize("seed", range(20))
def test_planted_sdr_gives_verified_forms(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 6)
    m = rng.randint(0, n)
    if (n + m) % 2:
        m = m - 1 if m else 1
    g = planted(n, m, seed)
    decision = is_symplectic(g)
    assert decision.symplectic
    check = verify_symplectic(g, decision.form)
    assert check.ok and check.edges_at_most_vertices and abs(check.determinant) == 1
    assert 2 * g.n_edges <= g.n_vertices + g.n_edges


@given(hypergraphs(max_n=5, max_edges=6))
@settings(max_examples=60, deadline=None)
def test_is_symplectic_consistent(g):
    decision = is_symplectic(g)
    if (g.n_vertices + g.n_edges) % 2:
        assert decision.reason == "odd_parity"
    elif has_sdr_brute(g.edges):
        assert decision.symplectic and verify_symplectic(g, decision.form).ok
    else:
        assert decision.reason == "hall_violator" and decision.violator.is_valid_for(g)
