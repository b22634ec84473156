"""
Extremal model operators
========================

Restrictions of the backward shift to finite-dimensional invariant
subspaces: Jordan cells, Bergman cells and kernels of q(S*).
"""

import math

import numpy as np

from opradii import bergman_cell, hereditary_kernel_model, kernel_model, numerical_radius

# Bergman cells carry the weights sqrt(k/(k+1)) on the superdiagonal.
B = bergman_cell(3).matrix
print(np.round(B.real, 6))
print(f"w2(B_3*)   = {numerical_radius(B, tol=1e-12).value:.10f}  sqrt(7/24) = {math.sqrt(7 / 24):.10f}")
print(f"w2(B_3*^2) = {numerical_radius(B @ B, tol=1e-12).value:.10f}  sqrt(1/12) = {math.sqrt(1 / 12):.10f}")

# S* on Ker q(S*) for q with roots inside the disc.  The matrix is written in
# an orthonormal basis of the span of the (confluent) geometric sequences.
roots = [0.5, -0.3 + 0.4j, -0.3 + 0.4j]
q = np.poly(roots)[::-1]  # coefficients low to high
model = kernel_model(q)
print("\nroots found:", [(complex(np.round(b, 10)), m) for b, m in model.roots])
print("eigenvalues of the model:", np.round(np.linalg.eigvals(model.matrix), 8))
print("Gram condition number:", f"{model.meta['gram_condition']:.2e}")

# An independent check: compress S* on C^200 to the same span.
N = 200
k = np.arange(N)
V = np.stack(
    [0.5**k, (-0.3 + 0.4j) ** k, k * (-0.3 + 0.4j) ** (k - 1.0)],
    axis=1,
)
Q, _ = np.linalg.qr(V)
T = Q.conj().T @ np.diag(np.ones(N - 1), 1) @ Q
print("singular values (model):    ", np.round(np.linalg.svd(model.matrix, compute_uv=False), 12))
print("singular values (truncated):", np.round(np.linalg.svd(T, compute_uv=False), 12))

# A hereditary constraint Q(S, S*) = 0.  Q maps (a, b) to the coefficient of
# w^a z^b (w for S, z for S*); here Q = z^2 + 0.1 w z - 0.25.  With d = 2,
# S*^2 Q(S, S*) reduces to z^2 (z^2 - 0.15), so the kernel has dimension 4.
Qh = {(0, 2): 1.0, (1, 1): 0.1, (0, 0): -0.25}
H = hereditary_kernel_model(Qh)
print("\nhereditary model dimension:", H.dim, " w2 =", round(numerical_radius(H.matrix).value, 10))
