"""Isomorphism of hypergraphs, and why Betti numbers are not enough.

Two hypergraphs have isomorphic L-infinity algebras exactly when they are
isomorphic, so the search runs on vertices. A 1-edge on an extra vertex
does not change any Betti number, which is the standard counterexample to
using them as a complete invariant.
"""

from hyperlinf import Hypergraph, are_isomorphic, complete_uniform, disjoint_union, fingerprint, relabel

g = Hypergraph.from_edges(6, [[1, 2], [1, 3], [2, 3], [3, 4], [2, 4], [4, 5, 6]])
h = relabel(g, {1: 6, 6: 1, 2: 5, 5: 2, 3: 4, 4: 3})
print("relabelled copy:", are_isomorphic(g, h))

cycle = Hypergraph.from_edges(6, [[1, 2], [2, 3], [3, 4], [4, 5], [5, 6], [1, 6]])
triangles = disjoint_union(complete_uniform(3, 2), complete_uniform(3, 2))
print("6-cycle vs two triangles:", are_isomorphic(cycle, triangles))
print("  fingerprints:", fingerprint(cycle).to_dict(), fingerprint(triangles).to_dict(), sep="\n    ")

padded = disjoint_union(Hypergraph.from_edges(1, [[1]]), g)
print("with an extra 1-edged vertex:")
print("  betti prefix", fingerprint(padded, 4).betti_prefix, "vs", fingerprint(g, 4).betti_prefix)
print("  isomorphic:", are_isomorphic(padded, g))
