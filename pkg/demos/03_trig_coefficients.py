"""
Coefficients of positive trigonometric polynomials
==================================================

For P >= 0 of degree n-1 the coefficients satisfy
|c_k| <= c_0 cos(pi/([(n-1)/k] + 2)), with equality attained.
"""

import numpy as np

from opradii import (
    TrigPoly,
    certify_positive,
    check_classical_bounds,
    check_two_coeff,
    es_omega,
    extremal_witness,
    fejer_riesz,
    from_analytic,
    random_positive,
)

# |Q|^2 for Q = 1 + z is 2 + 2 cos t: nonnegative, with a zero at t = pi.
P = from_analytic([1.0, 1.0])
print("coefficients:", P.coeffs.real, " certificate:", certify_positive(P).status)

# A random |Q|^2 and its coefficient margins.
P = random_positive(6, seed=7)
rep = check_classical_bounds(P)
for k, r, b in zip(rep.ks, rep.ratios, rep.bounds):
    print(f"k={k}  |c_k|/c_0 = {r:.4f}  bound {b / P.c0:.4f}")

# The extremal witness attains each bound.
print("\n n  k   ratio      bound")
for n, k in [(4, 1), (6, 2), (9, 3), (9, 4)]:
    W = extremal_witness(n, k)
    print(f"{n:2d} {k:2d}  {abs(W.c(k)) / W.c0:.8f} {es_omega(n, k):.8f}")

# Factorization P = |Q|^2 of a strictly positive polynomial.
P = TrigPoly.from_nonnegative([1.0, 0.4])
q = fejer_riesz(P)
print("\nQ =", np.round(q, 10), " round-trip error:", np.abs(from_analytic(q).coeffs - P.coeffs).max())

# Two coefficients at once: |c_1| + |c_8| against the sharp and closed-form bounds.
P = random_positive(9, seed=3)
r = check_two_coeff(P, 1, 8)
print(f"\n|c_1| + |c_8| = {r.lhs:.4f} <= sharp {r.sharp:.4f} <= closed {r.closed:.4f}  (closed/c_0 = {r.closed / P.c0:.6f})")
