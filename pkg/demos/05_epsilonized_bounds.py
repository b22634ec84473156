"""
Almost nilpotent contractions
=============================

If ||T^n|| <= eps, the numerical radius stays close to cos(pi/(n+1)).
Two bounds are available; the Fejer-type one is far sharper for small eps.
"""

import math

from opradii import combined_bound, eps_fejer_bound, herrero_delta, hh_bound, jordan_cell, numerical_radius

n = 3
print(f"n = {n}: cos(pi/(n+1)) = {hh_bound(n):.6f}\n")
print("  eps       fejer     herrero chain")
for eps in (0.0, 1e-9, 1e-6, 1e-3, 1e-1):
    print(f"{eps:8.0e}  {eps_fejer_bound(n, eps):.6f}  {hh_bound(n) + herrero_delta(n, eps):.6f}")

# T = c S_m* with m > n has ||T^n|| = c^n and w2(T) = c cos(pi/(m+1)).
print("\n  c    m   w2(T)     combined bound")
for c, m in [(0.9, 6), (0.5, 5), (0.99, 10)]:
    T = c * jordan_cell(m).matrix
    eps = c**n
    print(f"{c:4}  {m:2d}  {numerical_radius(T).value:.6f}  {combined_bound(n, m, eps):.6f}")
print("\nc cos(pi/7) at c = 0.9:", 0.9 * math.cos(math.pi / 7))
