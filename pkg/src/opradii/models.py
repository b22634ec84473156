"""Finite matrices of the extremal model operators.

All models are restrictions of the backward shift ``S*`` on ``l^2`` to a
finite-dimensional invariant subspace, written in an orthonormal basis:

* ``jordan_cell(n)``: ``S*`` on ``Ker S*^n``, the nilpotent Jordan cell.
* ``bergman_cell(n)``: the Bergman backward shift on ``Ker B*^n``.
* ``kernel_model(q)``: ``S*`` on ``Ker q(S*)`` for ``q`` with all roots in
  the open unit disc.
* ``hereditary_kernel_model(Q)``: ``S*`` on ``Ker S*^d Q(S, S*)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from math import factorial
from typing import Mapping

import numpy as np
from scipy.linalg import cholesky, solve_triangular

from .errors import ModelError, ValidationError
from .roots import cluster_roots, poly_roots, refine_multiple_roots

__all__ = [
    "ModelOperator",
    "jordan_cell",
    "bergman_cell",
    "confluent_gram",
    "kernel_model",
    "kernel_model_from_roots",
    "inside_kernel_model",
    "hereditary_reduction",
    "hereditary_kernel_model",
]

ROOT_MARGIN = 1e-8


@dataclass(frozen=True)
class ModelOperator:
    matrix: np.ndarray
    kind: str  # "jordan" | "bergman" | "kernel_of_q" | "hereditary_kernel"
    roots: tuple[tuple[complex, int], ...] = ()
    meta: dict = field(default_factory=dict)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


def jordan_cell(n: int) -> ModelOperator:
    """The ``n x n`` nilpotent Jordan cell (ones on the superdiagonal)."""
    if n < 1:
        raise ValidationError("jordan_cell needs n >= 1")
    M = np.diag(np.ones(n - 1, dtype=complex), 1) if n > 1 else np.zeros((1, 1), dtype=complex)
    return ModelOperator(M, "jordan", ((0j, n),), {"n": n})


def bergman_cell(n: int) -> ModelOperator:
    """Backward Bergman shift compressed to its first ``n`` basis vectors.

    The Bergman shift acts by ``B e_p = sqrt((p+1)/(p+2)) e_{p+1}``, so the
    superdiagonal of ``B_n*`` is ``sqrt(1/2), sqrt(2/3), ..., sqrt((n-1)/n)``.
    """
    if n < 2:
        raise ValidationError("bergman_cell needs n >= 2")
    k = np.arange(1, n, dtype=float)
    M = np.diag(np.sqrt(k / (k + 1.0)).astype(complex), 1)
    return ModelOperator(M, "bergman", ((0j, n),), {"n": n})


def confluent_gram(roots: list[tuple[complex, int]]) -> np.ndarray:
    """Gram matrix ``G = V* V`` of the confluent geometric sequences.

    For a root ``beta`` of multiplicity ``m`` the basis vectors are
    ``v_s = (C(k, s) beta^(k-s))_k`` for ``s < m`` (normalized derivatives
    of ``(beta^k)_k``).  Their inner products are the normalized mixed
    derivatives of ``1 / (1 - x y)`` at ``x = beta``, ``y = conj(gamma)``:

        <v_s(beta), v_t(gamma)> = sum_{j <= min(s, t)}
            (s+t-j)! / (j! (s-j)! (t-j)!) x^(t-j) y^(s-j) / (1 - x y)^(s+t-j+1)
    """
    labels = [(beta, s) for beta, m in roots for s in range(m)]
    d = len(labels)
    G = np.empty((d, d), dtype=complex)
    for i, (x, s) in enumerate(labels):
        for j, (g, t) in enumerate(labels):
            y = np.conj(g)
            den = 1.0 - x * y
            total = 0j
            for r in range(min(s, t) + 1):
                coef = factorial(s + t - r) / (factorial(r) * factorial(s - r) * factorial(t - r))
                total += coef * x ** (t - r) * y ** (s - r) / den ** (s + t - r + 1)
            G[j, i] = total  # (V* V)[j, i] = <v_i, v_j>
    return G


def _jordan_action(roots: list[tuple[complex, int]]) -> np.ndarray:
    # S* v_s = beta v_s + v_{s-1}
    d = sum(m for _, m in roots)
    D = np.zeros((d, d), dtype=complex)
    pos = 0
    for beta, m in roots:
        for s in range(m):
            D[pos + s, pos + s] = beta
            if s > 0:
                D[pos + s - 1, pos + s] = 1.0
        pos += m
    return D


def kernel_model_from_roots(roots, kind: str = "kernel_of_q") -> ModelOperator:
    """Matrix of ``S*`` on ``Ker q(S*)`` for ``q`` with the given roots.

    ``roots`` is a list of ``(beta, multiplicity)`` pairs with ``|beta| < 1``.
    With ``G = L L*`` the Cholesky factor of the confluent Gram matrix and
    ``D`` the Jordan action of ``S*`` on the confluent basis, the result in
    the orthonormal basis ``V L^{-*}`` is ``L* D L^{-*}``.
    """
    roots = [(complex(b), int(m)) for b, m in roots]
    if not roots:
        raise ModelError("no roots inside the unit disc: the kernel is {0}")
    for b, m in roots:
        if m < 1:
            raise ValidationError("root multiplicities must be positive")
        if not abs(b) < 1.0 - ROOT_MARGIN:
            raise ModelError(
                f"root {b:.6g} has modulus {abs(b):.12g} >= 1 - {ROOT_MARGIN:g}: its geometric "
                "sequence is not square summable (or the Gram matrix is too ill-conditioned)"
            )
    G = confluent_gram(roots)
    G = 0.5 * (G + G.conj().T)
    try:
        L = cholesky(G, lower=True)
    except np.linalg.LinAlgError as exc:
        raise ModelError("Gram matrix of the kernel basis is numerically singular; roots too close") from exc
    D = _jordan_action(roots)
    U = L.conj().T
    M = solve_triangular(L, (U @ D).conj().T, lower=True).conj().T
    meta = {"gram_condition": float(np.linalg.cond(G))}
    return ModelOperator(M, kind, tuple(roots), meta)


CLUSTER_TOLS = (1e-7, 1e-6, 1e-5, 1e-4)
MAX_GRAM_CONDITION = 1e13


def _model_from_computed_roots(coeffs, kind: str, cluster_tol: float | None, keep=None) -> ModelOperator:
    # Root finders spread an m-fold root over a circle of radius ~ eps^(1/m).
    # Without an explicit tolerance, the smallest clustering tolerance whose
    # Gram matrix is well conditioned decides the numerical multiplicities.
    roots = poly_roots(coeffs)
    tols = CLUSTER_TOLS if cluster_tol is None else (cluster_tol,)
    err = None
    for tol in tols:
        groups = refine_multiple_roots(coeffs, cluster_roots(roots, tol))
        if keep is not None:
            groups = keep(groups)
        try:
            model = kernel_model_from_roots(groups, kind)
        except ModelError as exc:
            if "too close" not in str(exc):
                raise
            err = exc
            continue
        if cluster_tol is None and model.meta["gram_condition"] > MAX_GRAM_CONDITION and tol != tols[-1]:
            continue
        return ModelOperator(model.matrix, kind, model.roots, {**model.meta, "cluster_tol": tol})
    raise ModelError(f"{err}; pass a larger cluster_tol to merge nearly coincident roots")


def kernel_model(q, cluster_tol: float | None = None) -> ModelOperator:
    """Matrix of ``S*`` restricted to ``Ker q(S*)`` (coefficients low to high).

    Every root of ``q`` must lie strictly inside the unit disc.  Roots closer
    than ``cluster_tol`` are merged into one root of higher multiplicity; by
    default the tolerance is chosen from ``1e-7 .. 1e-4`` as the smallest
    giving a well-conditioned basis.
    """
    c = np.atleast_1d(np.asarray(q, dtype=complex))
    if np.count_nonzero(c[1:]) == 0:
        raise ValidationError("q must be a nonconstant polynomial")
    model = _model_from_computed_roots(c, "kernel_of_q", cluster_tol)
    return ModelOperator(model.matrix, "kernel_of_q", model.roots, {**model.meta, "q": c.tolist()})


def inside_kernel_model(coeffs, kind: str = "kernel_of_q", cluster_tol: float | None = None) -> ModelOperator:
    """Model of ``S*`` on ``Ker q_in(S*)`` where ``q_in`` collects the roots of
    ``q`` inside the open disc (roots outside contribute nothing in ``l^2``).
    """

    def inside(groups):
        return [(b, m) for b, m in groups if abs(b) < 1.0]

    return _model_from_computed_roots(np.asarray(coeffs, dtype=complex), kind, cluster_tol, keep=inside)


def hereditary_reduction(Q: Mapping[tuple[int, int], complex], d: int | None = None) -> np.ndarray:
    """One-variable polynomial ``r`` with ``S*^d Q(S, S*) = r(S*)``.

    ``Q`` maps ``(a, b)`` to the coefficient of ``w^a z^b`` with ``w`` taking
    the role of ``S`` and ``z`` of ``S*``.  Since ``S* S = I``,
    ``S*^d S^a S*^b = S*^(d - a + b)`` for ``a <= d``.
    """
    if not Q:
        raise ValidationError("Q has no coefficients")
    max_a = max(a for a, _ in Q)
    max_b = max(b for _, b in Q)
    if d is None:
        d = max(max_a, max_b)
    if any(a < 0 or b < 0 for a, b in Q):
        raise ValidationError("exponents in Q must be nonnegative")
    if max_a > d:
        raise ValidationError(f"degree d = {d} is smaller than the power {max_a} of w in Q")
    r = np.zeros(d + max_b + 1, dtype=complex)
    for (a, b), c in Q.items():
        r[d - a + b] += complex(c)
    return r


def hereditary_kernel_model(
    Q: Mapping[tuple[int, int], complex],
    d: int | None = None,
    circle_tol: float = 1e-8,
    cluster_tol: float | None = None,
) -> ModelOperator:
    """Model on ``E = Ker S*^d Q(S, S*)`` (of dimension at most ``2d``)."""
    t = np.linspace(0.0, 2.0 * math.pi, 512, endpoint=False)
    vals = sum(complex(c) * np.exp(1j * (b - a) * t) for (a, b), c in Q.items())
    scale = max(abs(complex(c)) for c in Q.values()) if Q else 0.0
    if scale == 0.0 or np.max(np.abs(vals)) <= 1e-12 * scale:
        raise ModelError("Q(exp(-it), exp(it)) vanishes identically: the kernel is not finite-dimensional")
    r = hereditary_reduction(Q, d)
    if not np.any(r):
        raise ModelError("S*^d Q(S, S*) reduces to the zero operator")
    if np.count_nonzero(r[1:]) == 0:
        raise ModelError("S*^d Q(S, S*) reduces to a nonzero constant: the kernel is {0}")
    roots = cluster_roots(poly_roots(r))
    on_circle = [b for b, _ in roots if abs(abs(b) - 1.0) <= circle_tol]
    if on_circle:
        raise ModelError(
            f"reduced polynomial has roots on the unit circle ({len(on_circle)} of them); "
            "their solution sequences are periodic, not square summable, so the kernel in l^2 "
            "is degenerate. For the constraint T*^m = T^n use jordan_cell(m + n) instead."
        )
    inside = [(b, m) for b, m in roots if abs(b) < 1.0]
    if not inside:
        raise ModelError("all roots of the reduced polynomial lie outside the disc: the kernel is {0}")
    model = inside_kernel_model(r, "hereditary_kernel", cluster_tol)
    return ModelOperator(model.matrix, "hereditary_kernel", model.roots, {**model.meta, "r": r.tolist()})
