"""
Comparing the two maximal families for large n
==============================================

The families g1(n) and g2(n) are incomparable in the quasi-order for
n >= 12, so their energies have to be compared analytically.  Both obey
the same three-term recurrence; the difference of energies reduces to
sign statements about a few explicit kernels.
"""

import numpy as np

from matchkit import asymptotics as asy
from matchkit.energy import me_quadrature
from matchkit.families import g1_mvector, g2_mvector

# %% Energies and their difference
for n in (12, 15, 20, 30, 40):
    a, b = me_quadrature(g1_mvector(n)).value, me_quadrature(g2_mvector(n)).value
    print(f"n={n}: ME(g1)={a:.4f}  ME(g2)={b:.4f}  diff={a - b:+.5f}")

# %% The odd-n numerator K0 = (f2 g1 - f1 g2) x, expanded exactly
k0 = asy.k0_polynomial()
print("K0 coefficients (x^0..x^18):", k0)
print("printed version differs at:",
      [d for d, (c, p) in enumerate(zip(k0, asy.K0_PUBLISHED)) if c != p])

# %% Kernels stay negative on a wide grid
x = np.logspace(-3, 2, 7)
print("odd  n=15:", np.array2string(asy.odd_case_ratio(15, x), precision=3))
print("even n=16:", np.array2string(asy.even_case_kernel(16, x), precision=3))
print("limit integral:", round(asy.limit_ratio_integral(), 5))

# %% The n = 11 ordering does not follow from the printed data
print(asy.n11_report()["note"])
