"""Deciding symplecticity and checking the certificate form.

L(G) carries a symplectic form exactly when |V|+|E| is even and the edges
have distinct representatives. The form pairs each edge with its
representative and the leftover vertices with each other.
"""

from hyperlinf import Hypergraph, complete_uniform, is_symplectic, verify_symplectic

cases = {
    "one edge on 3 vertices": Hypergraph.from_edges(3, [[1, 2]]),
    "triangle": complete_uniform(3, 2),
    "two disjoint edges": Hypergraph.from_edges(4, [[1, 2], [3, 4]]),
    "single 2-edge": complete_uniform(2, 2),
    "five edges on 4 vertices + {4,5,6}": Hypergraph.from_edges(
        6, [[1, 2], [1, 3], [2, 3], [3, 4], [2, 4], [4, 5, 6]]
    ),
}
for name, g in cases.items():
    decision = is_symplectic(g)
    if decision.symplectic:
        check = verify_symplectic(g, decision.form)
        print(f"{name}: omega = {decision.form.dump()}")
        print(f"    closed={check.closed} nondegenerate={check.nondegenerate} "
              f"isotropic={check.isotropic_commutator} det={check.determinant}")
    elif decision.reason == "hall_violator":
        v = decision.violator
        print(f"{name}: no SDR, edges {[list(e) for e in v.edges]} cover {v.union_size} vertices")
    else:
        print(f"{name}: {decision.reason} (|V|+|E| = {g.n_vertices + g.n_edges})")
