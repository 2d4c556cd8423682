"""Betti numbers of a few hypergraphs, checked against closed forms.

For the smallest edge size N there are two candidate formulas for b_N. The
cocycle-count version agrees with the rank computation here; the other one
undercounts on the triangle and is reported as a warning.
"""

from math import comb

from hyperlinf import Hypergraph, betti_table, complete_uniform, poincare
from hyperlinf.cohomology import closed_form_bN

cases = {
    "single 2-edge": complete_uniform(2, 2),
    "single 3-edge": complete_uniform(3, 3),
    "single 4-edge": complete_uniform(4, 4),
    "triangle K3": complete_uniform(3, 2),
    "path 1-2-3": Hypergraph.from_edges(3, [[1, 2], [2, 3]]),
}
for name, g in cases.items():
    print(f"{name:>14}: {poincare(g, 7)}")

print()
print("b_N against the two closed forms")
for name, g in list(cases.items())[3:] + [("K^(3)_4", complete_uniform(4, 3)), ("K^(3)_5", complete_uniform(5, 3))]:
    n_size = g.profile().min_edge_size
    forms = closed_form_bN(g)
    computed = betti_table(g, n_size).values[n_size]
    print(f"{name:>10}: computed b_{n_size} = {computed}, cocycle count = {forms.cocycle_count}, "
          f"covering = {forms.covering}")

n, k = 5, 3
print(f"complete {k}-uniform on {n}: k*C(n+1,k+1) = {k * comb(n + 1, k + 1)}")
print("warnings for K3:", poincare(complete_uniform(3, 2), 3).warnings)
