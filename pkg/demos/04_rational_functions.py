"""
Fourier coefficients of positive rational functions
===================================================

If F = |h|^2 with h in the model space of the poles b_i, then
|c_k| <= c_0 w2(R^k) with R the backward shift on Ker q(S*).
"""

import numpy as np

from opradii import check_rational_bound, fourier_coeffs, model_space_function, single_pole_function
from opradii.rational import random_model_space_function

# Single pole: F = |1/(1 - z/2)|^2 has c_k = 2^{-|k|} / (1 - 1/4).
F = single_pole_function(0.5)
c = fourier_coeffs(F, 4)
print("c_{-4..4} =", np.round(c.real, 12))
rep = check_rational_bound(F, 4)
print("margins (equality case):", np.round(rep.margins, 14))

# Two poles with a numerator; the model is two-dimensional.
F = model_space_function([0.3, 0.5j], [1.0, -0.7 + 0.2j])
rep = check_rational_bound(F, 6)
print("\n k   |c_k|      c_0 w2(R^k)")
for k, (x, w) in enumerate(zip(rep.coeffs, rep.radii), start=1):
    print(f"{k:2d}  {abs(x):.6f}   {rep.c0 * w:.6f}")

# A small random corpus.
rng = np.random.default_rng(0)
worst = min(
    min(r.margins) / r.c0
    for r in (check_rational_bound(G, 6) for G in (random_model_space_function(rng) for _ in range(50)))
)
print(f"\nworst relative margin over 50 random functions: {worst:.2e}")
