"""
Matching polynomials and matching energy
========================================

Count matchings exactly, then compute the matching energy two ways:
from the zeros of the matching polynomial and from the Coulson-type
integral.  Run with ``python notebooks/01_matching_energy.py``.
"""

import math

from matchkit import Graph, match_vector, matching_polynomial, me_quadrature, me_roots
from matchkit.families import family_graph, family_id

# %% K4 has 6 edges and 3 perfect matchings
k4 = Graph.from_edges(4, [(a, b) for a in range(4) for b in range(a)])
mv = match_vector(k4)
print("m(K4) =", mv, "  alpha =", matching_polynomial(mv))

# %% For trees the matching energy is the ordinary energy; paths make a clean check
for n in (4, 8, 12):
    p = family_graph(family_id("path", n))
    exact = sum(abs(2 * math.cos(k * math.pi / (n + 1))) for k in range(1, n + 1))
    print(f"P{n}: roots {me_roots(match_vector(p)).value:.12f}  "
          f"integral {me_quadrature(match_vector(p)).value:.12f}  eigenvalues {exact:.12f}")

# %% The tricyclic minimum: S_n** and K_4^{n-4} share all matching counts
for n in range(5, 9):
    a = match_vector(family_graph(family_id("snstarstar", n)))
    b = match_vector(family_graph(family_id("k4pendant", n)))
    print(f"n={n}: {a}  {b}  equal={a == b}  ME={me_quadrature(a).value:.4f}")
