"""Dense complex matrix helpers shared by every other module.

Matrices are plain ``numpy`` arrays of dtype ``complex128``.  The functions
here validate their input once (square, finite) and never mutate it.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping

import numpy as np

from .errors import ValidationError

__all__ = [
    "HermitianEigenResult",
    "as_matrix",
    "herm_eig",
    "jacobi_eigh",
    "operator_norm",
    "spectral_radius",
    "mat_poly",
    "hereditary_eval",
    "matrix_to_json",
    "matrix_from_json",
    "load_matrix",
    "save_matrix",
]

HERMITIAN_RTOL = 1e-12


def as_matrix(A, name: str = "matrix") -> np.ndarray:
    """Return ``A`` as a finite square ``complex128`` array.

    Raises
    ------
    ValidationError
        If ``A`` is not a non-empty square 2-D array or has non-finite entries.
    """
    M = np.array(A, dtype=complex, copy=True)
    if M.ndim == 0:
        M = M.reshape(1, 1)
    if M.ndim != 2 or M.shape[0] != M.shape[1] or M.shape[0] == 0:
        raise ValidationError(f"{name} must be a non-empty square matrix, got shape {M.shape}")
    if not np.all(np.isfinite(M)):
        i, j = np.argwhere(~np.isfinite(M))[0]
        raise ValidationError(f"{name} has a non-finite entry at ({i}, {j})")
    return M


@dataclass(frozen=True)
class HermitianEigenResult:
    """Spectral decomposition ``A = V diag(w) V*`` with ``w`` ascending."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def lambda_max(self) -> float:
        return float(self.eigenvalues[-1])

    @property
    def lambda_min(self) -> float:
        return float(self.eigenvalues[0])


def _check_hermitian(A: np.ndarray) -> np.ndarray:
    scale = max(np.abs(A).max(), 1.0)
    diff = np.abs(A - A.conj().T)
    if diff.max() > HERMITIAN_RTOL * scale:
        i, j = np.unravel_index(np.argmax(diff), diff.shape)
        raise ValidationError(
            f"matrix is not Hermitian: entries ({i}, {j}) and ({j}, {i}) "
            f"differ by {diff[i, j]:.3e} after conjugation"
        )
    return 0.5 * (A + A.conj().T)


def jacobi_eigh(A, sweep_tol: float = 1e-14, max_sweeps: int = 100) -> HermitianEigenResult:
    """Cyclic Jacobi eigensolver for a complex Hermitian matrix.

    Each rotation first removes the phase of the pivot ``a_pq`` with a
    diagonal unitary and then applies the real symmetric Jacobi rotation.
    Sweeps stop once the off-diagonal Frobenius mass falls below
    ``sweep_tol * ||A||_F``.
    """
    H = _check_hermitian(as_matrix(A))
    n = H.shape[0]
    V = np.eye(n, dtype=complex)
    scale = np.linalg.norm(H)
    if scale == 0.0:
        return HermitianEigenResult(np.zeros(n), V)
    for _ in range(max_sweeps):
        off = math.sqrt(max(np.linalg.norm(H) ** 2 - np.sum(np.abs(np.diag(H)) ** 2), 0.0))
        if off <= sweep_tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = H[p, q]
                mag = abs(apq)
                if mag <= 1e-300:
                    continue
                phase = apq / mag
                tau = (H[q, q].real - H[p, p].real) / (2.0 * mag)
                t = math.copysign(1.0, tau) / (abs(tau) + math.hypot(1.0, tau)) if tau != 0.0 else 1.0
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                # U restricted to (p, q): [[c, s], [-s*conj(phase), c*conj(phase)]]
                u_pp, u_pq = c, s
                u_qp, u_qq = -s * phase.conjugate(), c * phase.conjugate()
                colp = H[:, p].copy()
                colq = H[:, q].copy()
                H[:, p] = colp * u_pp + colq * u_qp
                H[:, q] = colp * u_pq + colq * u_qq
                rowp = H[p, :].copy()
                rowq = H[q, :].copy()
                H[p, :] = np.conj(u_pp) * rowp + np.conj(u_qp) * rowq
                H[q, :] = np.conj(u_pq) * rowp + np.conj(u_qq) * rowq
                H[p, q] = H[q, p] = 0.0
                H[p, p] = H[p, p].real
                H[q, q] = H[q, q].real
                vp = V[:, p].copy()
                vq = V[:, q].copy()
                V[:, p] = vp * u_pp + vq * u_qp
                V[:, q] = vp * u_pq + vq * u_qq
    w = np.real(np.diag(H))
    order = np.argsort(w, kind="stable")
    return HermitianEigenResult(w[order], V[:, order])


def herm_eig(A, method: str = "lapack") -> HermitianEigenResult:
    """Full eigendecomposition of a Hermitian matrix.

    ``A`` must be Hermitian to ``1e-12`` relative; it is symmetrized before
    the solve.  ``method="lapack"`` calls ``numpy.linalg.eigh``;
    ``method="jacobi"`` runs :func:`jacobi_eigh`.
    """
    if method == "jacobi":
        return jacobi_eigh(A)
    if method != "lapack":
        raise ValidationError(f"unknown eigensolver method {method!r}")
    H = _check_hermitian(as_matrix(A))
    w, V = np.linalg.eigh(H)
    return HermitianEigenResult(w, V)


def operator_norm(A) -> float:
    """Largest singular value, computed as ``sqrt(lambda_max(A* A))``."""
    A = as_matrix(A)
    G = A.conj().T @ A
    lam = np.linalg.eigvalsh(0.5 * (G + G.conj().T))[-1]
    return math.sqrt(max(float(lam), 0.0))


def spectral_radius(A, tol: float = 1e-10, max_doublings: int = 64) -> float:
    """Spectral radius from the Gelfand formula with repeated squaring.

    The estimates ``L_k = log||A^(2^k)|| / 2^k`` are Richardson-extrapolated
    (``2 L_k - L_{k-1}``) and iteration stops when two consecutive
    extrapolated radii agree within ``tol``.  Powers are renormalized at each
    squaring so nothing overflows.
    """
    if tol <= 0:
        raise ValidationError("tol must be positive")
    B = as_matrix(A)
    n = B.shape[0]
    log_scale = 0.0  # B_k = A^(2^k) / exp(log_scale)
    prev_log = None
    prev_extrap = None
    for k in range(max_doublings):
        nrm = operator_norm(B)
        if nrm == 0.0:
            return 0.0
        log_est = (math.log(nrm) + log_scale) / 2.0**k
        if prev_log is not None:
            extrap = math.exp(2.0 * log_est - prev_log)
            # before 2^k reaches the dimension a nilpotent part can stall the norms
            if prev_extrap is not None and 2**k > n and abs(extrap - prev_extrap) <= tol:
                return extrap
            prev_extrap = extrap
        prev_log = log_est
        B = B / nrm
        log_scale = 2.0 * (log_scale + math.log(nrm))
        B = B @ B
    return prev_extrap if prev_extrap is not None else math.exp(prev_log)


def mat_poly(A, coeffs) -> np.ndarray:
    """Evaluate ``p(A)`` by Horner's scheme; ``coeffs`` run low to high degree."""
    A = as_matrix(A)
    c = np.atleast_1d(np.asarray(coeffs, dtype=complex))
    if c.size == 0:
        raise ValidationError("polynomial coefficient list is empty")
    n = A.shape[0]
    I = np.eye(n, dtype=complex)
    out = c[-1] * I
    for ck in c[-2::-1]:
        out = out @ A + ck * I
    return out


def hereditary_eval(A, coeffs: Mapping[tuple[int, int], complex]) -> np.ndarray:
    """Hereditary calculus ``P(A*, A) = sum c[a, b] (A*)^a A^b``.

    ``coeffs`` maps exponent pairs ``(a, b)`` (power of the adjoint first) to
    coefficients.  Each power is computed once.
    """
    A = as_matrix(A)
    n = A.shape[0]
    Ah = A.conj().T
    pw: dict[int, np.ndarray] = {0: np.eye(n, dtype=complex)}
    pw_adj: dict[int, np.ndarray] = {0: np.eye(n, dtype=complex)}

    def power(cache, base, k):
        if k < 0:
            raise ValidationError(f"negative exponent {k} in hereditary polynomial")
        top = max(cache)
        while top < k:
            cache[top + 1] = cache[top] @ base
            top += 1
        return cache[k]

    out = np.zeros((n, n), dtype=complex)
    for (a, b), c in coeffs.items():
        if c == 0:
            continue
        out += complex(c) * (power(pw_adj, Ah, int(a)) @ power(pw, A, int(b)))
    return out


# --------------------------------------------------------------------------
# JSON interchange: {"dim": n, "entries": [[re, im], ...]} row-major


def matrix_to_json(A) -> dict:
    A = as_matrix(A)
    return {
        "dim": int(A.shape[0]),
        "entries": [[float(z.real), float(z.imag)] for z in A.ravel()],
    }


def matrix_from_json(obj) -> np.ndarray:
    """Parse the matrix interchange object, naming the offending field on error."""
    if not isinstance(obj, dict):
        raise ValidationError("matrix file: top level must be a JSON object")
    if "dim" not in obj:
        raise ValidationError("matrix file: missing field 'dim'")
    if "entries" not in obj:
        raise ValidationError("matrix file: missing field 'entries'")
    dim = obj["dim"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise ValidationError(f"matrix file: field 'dim' must be a positive integer, got {dim!r}")
    entries = obj["entries"]
    if not isinstance(entries, list):
        raise ValidationError("matrix file: field 'entries' must be a list")
    if len(entries) != dim * dim:
        raise ValidationError(
            f"matrix file: field 'entries' has length {len(entries)}, expected dim^2 = {dim * dim}"
        )
    vals = np.empty(dim * dim, dtype=complex)
    for idx, pair in enumerate(entries):
        if (
            not isinstance(pair, (list, tuple))
            or len(pair) != 2
            or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in pair)
        ):
            raise ValidationError(f"matrix file: entries[{idx}] must be a [re, im] pair of numbers")
        vals[idx] = complex(pair[0], pair[1])
    return as_matrix(vals.reshape(dim, dim))


def load_matrix(path) -> np.ndarray:
    try:
        obj = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ValidationError(f"matrix file {path}: invalid JSON ({exc})") from exc
    return matrix_from_json(obj)


def save_matrix(path, A) -> None:
    Path(path).write_text(json.dumps(matrix_to_json(A)))
