"""Polynomial roots by the Aberth-Ehrlich simultaneous iteration."""

from __future__ import annotations

import numpy as np

from .errors import ValidationError

__all__ = ["poly_roots", "cluster_roots", "refine_multiple_roots", "poly_from_roots"]


def _trim(coeffs) -> np.ndarray:
    c = np.atleast_1d(np.asarray(coeffs, dtype=complex))
    if c.ndim != 1:
        raise ValidationError("polynomial coefficients must be a 1-D sequence")
    if not np.all(np.isfinite(c)):
        raise ValidationError("polynomial coefficients must be finite")
    nz = np.flatnonzero(c)
    if nz.size == 0:
        raise ValidationError("the zero polynomial has no well-defined roots")
    return c[: nz[-1] + 1]


def poly_roots(coeffs, tol: float = 1e-15, maxiter: int = 1000) -> np.ndarray:
    """All complex roots of ``sum coeffs[k] z^k`` (coefficients low to high).

    Exact zero roots (vanishing low-order coefficients) are split off first.
    The remaining roots start on a circle of radius given by the Cauchy bound
    and are updated with Aberth's correction

        w_k = N_k / (1 - N_k * sum_{j != k} 1 / (z_k - z_j)),   N_k = p(z_k)/p'(z_k)

    until every root either has a correction below ``tol`` relative to
    ``max(1, |z_k|)`` or a residual at rounding level,
    ``|p(z_k)| <= 4 eps sum |c_j| |z_k|^j``; multiple roots only ever meet
    the second test.
    """
    c = _trim(coeffs)
    n_zero = int(np.flatnonzero(c)[0])
    c = c[n_zero:]
    deg = c.size - 1
    if deg == 0:
        return np.zeros(n_zero, dtype=complex)
    monic = c / c[-1]
    desc = monic[::-1]
    ddesc = np.polyder(desc)
    adesc = np.abs(desc)
    eps = np.finfo(float).eps
    cauchy = 1.0 + np.max(np.abs(monic[:-1]))
    # a smaller start radius helps when all roots are small; keep within the bound
    r0 = min(cauchy, max(np.abs(monic[0]) ** (1.0 / deg), 1e-3) * 1.5 + 0.1)
    k = np.arange(deg)
    z = r0 * np.exp(1j * (2.0 * np.pi * k / deg + 0.4))
    for _ in range(maxiter):
        p = np.polyval(desc, z)
        dp = np.polyval(ddesc, z)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = np.where(dp != 0, p / dp, p)
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, 1.0)
            inv = 1.0 / diff
            np.fill_diagonal(inv, 0.0)
            s = inv.sum(axis=1)
            w = ratio / (1.0 - ratio * s)
        w = np.where(np.isfinite(w), w, 0.0)
        done = (np.abs(w) <= tol * np.maximum(1.0, np.abs(z - w))) | (
            np.abs(p) <= 4.0 * eps * np.polyval(adesc, np.abs(z))
        )
        z = z - w
        if np.all(done):
            break
    return np.concatenate([np.zeros(n_zero, dtype=complex), z])


def cluster_roots(roots, tol: float = 1e-7) -> list[tuple[complex, int]]:
    """Group approximations closer than ``tol`` into (centroid, multiplicity).

    Groups are formed by single linkage and listed in order of first
    appearance; exact zeros stay exact.
    """
    roots = np.asarray(roots, dtype=complex)
    n = roots.size
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if abs(roots[i] - roots[j]) <= tol:
                parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    out = []
    for members in sorted(groups.values(), key=lambda m: m[0]):
        vals = roots[members]
        centre = 0j if np.all(vals == 0) else complex(vals.mean())
        out.append((centre, len(members)))
    return out


def refine_multiple_roots(coeffs, groups, maxiter: int = 20) -> list[tuple[complex, int]]:
    """Polish centroids of ``m``-fold clusters by Newton on ``p^(m-1)``.

    An ``m``-fold root of ``p`` is a simple root of its ``(m-1)``-th
    derivative, so Newton converges quadratically there while the centroid
    of the perturbed cluster is only accurate to about ``eps^(1/m)``.  A
    polished value is kept only if it stays within the cluster's reach.
    """
    desc = _trim(coeffs)[::-1]
    out = []
    for z0, m in groups:
        if m == 1 or z0 == 0:
            out.append((z0, m))
            continue
        d = np.polyder(desc, m - 1)
        dd = np.polyder(d)
        z = complex(z0)
        for _ in range(maxiter):
            den = np.polyval(dd, z)
            if den == 0:
                break
            step = np.polyval(d, z) / den
            z -= step
            if abs(step) <= 1e-15 * max(1.0, abs(z)):
                break
        out.append((z if np.isfinite(z) and abs(z - z0) <= 1e-3 * max(1.0, abs(z0)) else z0, m))
    return out


def poly_from_roots(roots, lead: complex = 1.0) -> np.ndarray:
    """Coefficients (low to high) of ``lead * prod (z - r)``."""
    desc = np.poly(np.asarray(roots, dtype=complex)) if len(roots) else np.array([1.0 + 0j])
    return lead * np.asarray(desc, dtype=complex)[::-1]
