"""
Operator radii of small matrices
================================

The family w_rho interpolates between the operator norm (rho = 1), the
numerical radius (rho = 2) and the spectral radius (rho -> infinity).
"""

import math

import numpy as np

from opradii import jordan_cell, numerical_radius, omega_rho, operator_norm, spectral_radius

# The nilpotent Jordan cell S_n* has numerical radius cos(pi/(n+1)).
for n in (2, 3, 5, 8):
    w = numerical_radius(jordan_cell(n).matrix, tol=1e-12)
    print(f"w2(S_{n}*) = {w.value:.12f}   cos(pi/{n + 1}) = {math.cos(math.pi / (n + 1)):.12f}")

# The result also carries the maximizing angle and a unit witness vector x
# with Re(e^{i theta} <A x, x>) = w2(A).
J = jordan_cell(4).matrix
w = numerical_radius(J, tol=1e-12)
x = w.vector
print("witness check:", abs(np.vdot(x, J @ x)), "vs", w.value)

# w_rho decreases in rho, from the norm down towards the spectral radius.
A = np.array([[1.0, 1.0], [0.0, -1.0]])
print("\nrho    w_rho(A)")
for rho in (0.5, 1.0, 1.5, 2.0, 3.0, 10.0):
    print(f"{rho:<5}  {omega_rho(A, rho, tol=1e-9).value:.9f}")
print("norm", operator_norm(A), " spectral radius", spectral_radius(A))

# For this matrix the values have a closed form; compare at rho = 3.
s = 1.25
closed = (math.sqrt(s) + math.sqrt(s + 3.0)) / 3.0
print(f"\nclosed form at rho = 3: {closed:.9f}")

# Compressions need not shrink w_rho once rho > 2.  Compress A to the line
# spanned by its numerical-radius witness e: V*AV is the 1x1 matrix <Ae, e>.
e = numerical_radius(A, tol=1e-12).vector
c = np.array([[np.vdot(e, A @ e)]])
print(f"w_3(V*AV) = {omega_rho(c, 3.0, tol=1e-9).value:.7f} > w_3(A) = {omega_rho(A, 3.0, tol=1e-9).value:.7f}")

# Reciprocity: w_{1/2}(A) = 3 w_{3/2}(A) for every A.
rng = np.random.default_rng(1)
B = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
print(f"\nw_0.5(B) = {omega_rho(B, 0.5).value:.6f},  3 w_1.5(B) = {3 * omega_rho(B, 1.5).value:.6f}")
