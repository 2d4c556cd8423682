"""Build L(G) for a small hypergraph and look at its brackets.

The hypergraph has five 2-edges on 1..4 and one 3-edge {4,5,6}. Every
bracket lands on an edge vector, and any bracket with an edge argument is
zero, which is why the lower central filtration stops after two steps.
"""

from hyperlinf import BasisElement, Element, Hypergraph, bracket, build_linfty, lower_central_filtration
from hyperlinf.linfty import check_2step, commutator_dims


def x(v):
    return Element.basis(BasisElement.vertex(v))


g = Hypergraph.from_edges(6, [[1, 2], [1, 3], [2, 3], [3, 4], [2, 4], [4, 5, 6]])
alg = build_linfty(g)
print("basis:", ", ".join(f"{b} (deg {b.degree})" for b in alg.basis))

print("l2(x1, x2)     =", bracket(alg, [x(1), x(2)]))
print("l2(x2, x1)     =", bracket(alg, [x(2), x(1)]))
print("l3(x4, x5, x6) =", bracket(alg, [x(4), x(5), x(6)]))
print("l2(x1, x4)     =", bracket(alg, [x(1), x(4)]))

inner = bracket(alg, [x(1), x(2)])
print("l2(l2(x1, x2), x3) =", bracket(alg, [inner, x(3)]))

print("2-step nilpotent:", check_2step(alg).holds)
print("commutator dim, quotient dim:", commutator_dims(alg))
print("lower central filtration (nesting depth):", lower_central_filtration(alg))
print("lower central filtration (arity weighted):", lower_central_filtration(alg, "weighted"))
