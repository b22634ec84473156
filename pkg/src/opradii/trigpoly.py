"""Positive trigonometric polynomials on the unit circle.

A :class:`TrigPoly` of degree ``m`` stores ``c_{-m}, ..., c_m`` with
``c_{-k} = conj(c_k)``, so ``P(t) = sum_k c_k e^{ikt}`` is real.  An
analytic polynomial ``Q`` (coefficients low to high) gives the positive
polynomial ``|Q(e^{it})|^2`` whose coefficients are the autocorrelations

    c_k = sum_j q_{j+k} conj(q_j) = <S*^k q, q>.

That identity links coefficient bounds to numerical radii of powers of the
Jordan cell, which is what the checkers here exploit.
"""

from __future__ import annotations

import functools
import json
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .bounds import es_omega, two_coeff_closed
from .errors import FactorizationError, ValidationError
from .models import jordan_cell
from .radii import numerical_radius
from .roots import poly_roots

__all__ = [
    "TrigPoly",
    "PositivityCertificate",
    "ClassicalBoundReport",
    "TwoCoeffReport",
    "from_analytic",
    "certify_positive",
    "fejer_riesz",
    "check_classical_bounds",
    "two_power_radius",
    "check_two_coeff",
    "extremal_witness",
    "random_analytic",
    "random_positive",
    "trigpoly_to_json",
    "trigpoly_from_json",
    "load_trigpoly",
]

SYMMETRY_TOL = 1e-12


@dataclass(frozen=True)
class TrigPoly:
    """Real trigonometric polynomial given by ``coeffs = [c_{-m}, ..., c_m]``."""

    coeffs: np.ndarray

    def __post_init__(self):
        c = np.atleast_1d(np.asarray(self.coeffs, dtype=complex))
        if c.ndim != 1 or c.size % 2 == 0:
            raise ValidationError("TrigPoly needs an odd-length coefficient vector c_{-m}..c_m")
        if not np.all(np.isfinite(c)):
            raise ValidationError("TrigPoly coefficients must be finite")
        scale = max(np.abs(c).max(), 1e-300)
        asym = np.abs(c - np.conj(c[::-1]))
        if asym.max() > SYMMETRY_TOL * scale:
            i = int(np.argmax(asym))
            m = c.size // 2
            raise ValidationError(
                f"coefficients are not Hermitian symmetric: c_{i - m} and conj(c_{m - i}) "
                f"differ by {asym[i]:.3e}"
            )
        object.__setattr__(self, "coeffs", 0.5 * (c + np.conj(c[::-1])))

    @classmethod
    def from_nonnegative(cls, c) -> "TrigPoly":
        """Build from ``[c_0, c_1, ..., c_m]``; negative indices by symmetry."""
        c = np.atleast_1d(np.asarray(c, dtype=complex))
        return cls(np.concatenate([np.conj(c[:0:-1]), [c[0].real], c[1:]]))

    @property
    def degree(self) -> int:
        return self.coeffs.size // 2

    @property
    def c0(self) -> float:
        return float(self.coeffs[self.degree].real)

    def c(self, k: int) -> complex:
        m = self.degree
        if abs(k) > m:
            return 0j
        return complex(self.coeffs[m + k])

    def __call__(self, t) -> np.ndarray:
        t = np.asarray(t, dtype=float)
        k = np.arange(-self.degree, self.degree + 1)
        return np.real(np.exp(1j * np.multiply.outer(t, k)) @ self.coeffs)

    def trimmed(self, rtol: float = 0.0) -> "TrigPoly":
        """Drop outer coefficients with modulus ``<= rtol * c_0``."""
        m = self.degree
        thresh = rtol * abs(self.c0)
        while m > 0 and abs(self.c(m)) <= thresh:
            m -= 1
        mid = self.degree
        return TrigPoly(self.coeffs[mid - m : mid + m + 1])


@dataclass(frozen=True)
class PositivityCertificate:
    status: str  # "positive" | "violated" | "inconclusive"
    min_value: float
    min_point: float
    margin: float


def from_analytic(q) -> TrigPoly:
    """``|Q(e^{it})|^2`` as a trigonometric polynomial."""
    q = np.atleast_1d(np.asarray(q, dtype=complex))
    if q.ndim != 1 or not np.any(q):
        raise ValidationError("Q must be a nonzero 1-D coefficient vector")
    return TrigPoly(np.convolve(q, np.conj(q[::-1])))


def certify_positive(P: TrigPoly, tol: float = 1e-12) -> PositivityCertificate:
    """Grid test of positivity backed by Bernstein's inequality.

    ``P`` is sampled on ``64 (m+1)`` points.  Since ``|P'| <= m ||P||_inf``,
    the true minimum is at least the grid minimum minus ``m ||P||_inf h/2``.
    The status is ``positive`` when that lower bound is positive,
    ``violated`` when a sample falls below ``-tol * c_0`` and ``inconclusive``
    otherwise (after one refinement by a factor 4).
    """
    if tol <= 0:
        raise ValidationError("tol must be positive")
    m = P.degree
    scale = max(abs(P.c0), 1e-300)
    cert = None
    for refine in (1, 4):
        N = 64 * (m + 1) * refine
        t = 2.0 * math.pi * np.arange(N) / N
        v = P(t)
        h = 2.0 * math.pi / N
        i = int(np.argmin(v))
        vmin = float(v[i])
        # sup-norm bound from the grid max: ||P|| <= max|v| / (1 - m h / 2)
        sup = float(np.abs(v).max()) / (1.0 - m * h / 2.0)
        margin = vmin - m * sup * h / 2.0
        if vmin < -tol * scale:
            return PositivityCertificate("violated", vmin, float(t[i]), margin)
        if margin > 0:
            return PositivityCertificate("positive", vmin, float(t[i]), margin)
        cert = PositivityCertificate("inconclusive", vmin, float(t[i]), margin)
    return cert


def fejer_riesz(P: TrigPoly, tol: float = 1e-8, pair_tol: float = 1e-6) -> np.ndarray:
    """Analytic ``Q`` of degree ``m`` with ``|Q|^2 = P`` on the circle.

    The roots of ``z^m P(z)`` come in pairs ``(alpha, 1/conj(alpha))``; the
    member inside the disc is kept and the constant is fixed so that
    ``||Q||_2^2 = c_0``.  Returns coefficients low to high.

    Raises
    ------
    FactorizationError
        If ``P`` is not certified strictly positive, if roots cannot be paired
        or if the round trip misses ``P`` by more than ``tol * c_0``.
    """
    cert = certify_positive(P)
    if cert.status != "positive":
        raise FactorizationError(
            f"P is not certified strictly positive (status {cert.status}, "
            f"min {cert.min_value:.3e} at t = {cert.min_point:.6f})"
        )
    P = P.trimmed()
    m = P.degree
    if m == 0:
        return np.array([math.sqrt(P.c0)], dtype=complex)
    roots = poly_roots(P.coeffs)
    inside = roots[np.abs(roots) < 1.0]
    outside = list(roots[np.abs(roots) >= 1.0])
    if inside.size != m or len(outside) != m:
        raise FactorizationError(
            f"expected {m} roots on each side of the circle, found {inside.size} inside; "
            "increase the positivity margin"
        )
    for a in inside:
        target = 1.0 / np.conj(a)
        j = int(np.argmin([abs(b - target) for b in outside]))
        if abs(outside[j] - target) > pair_tol * max(1.0, abs(target)):
            raise FactorizationError(
                f"root {a:.6g} has no reflected partner near {target:.6g}; increase the positivity margin"
            )
        outside.pop(j)
    q = np.poly(inside)[::-1].astype(complex)
    q *= math.sqrt(P.c0 / float(np.sum(np.abs(q) ** 2)))
    err = np.abs(from_analytic(q).coeffs - P.coeffs).max()
    if err > tol * P.c0:
        raise FactorizationError(f"round-trip error {err:.3e} exceeds {tol:g} * c_0")
    return q


# --------------------------------------------------------------------------
# coefficient bounds


@dataclass(frozen=True)
class ClassicalBoundReport:
    n: int
    ks: tuple[int, ...]
    ratios: tuple[float, ...]  # |c_k| / c_0
    bounds: tuple[float, ...]  # c_0 * es_omega(n, k)
    margins: tuple[float, ...]  # bound - |c_k|

    @property
    def ok(self) -> bool:
        return all(mg >= -1e-10 for mg in self.margins)


def _resolve_n(P: TrigPoly, n: int | None) -> int:
    if n is None:
        n = P.degree + 1
    if P.degree > n - 1:
        raise ValidationError(f"P has degree {P.degree} > n - 1 = {n - 1}")
    if n < 2:
        raise ValidationError("n must be at least 2")
    return n


def check_classical_bounds(P: TrigPoly, n: int | None = None) -> ClassicalBoundReport:
    """Margins ``c_0 cos(pi/([(n-1)/k]+2)) - |c_k|`` for ``1 <= k <= n-1``."""
    n = _resolve_n(P, n)
    c0 = P.c0
    ks = tuple(range(1, n))
    ratios, bounds, margins = [], [], []
    for k in ks:
        ck = abs(P.c(k))
        b = c0 * es_omega(n, k)
        ratios.append(ck / c0 if c0 > 0 else 0.0)
        bounds.append(b)
        margins.append(b - ck)
    return ClassicalBoundReport(n, ks, tuple(ratios), tuple(bounds), tuple(margins))


@functools.lru_cache(maxsize=None)
def _two_power_radius_gamma0(n: int, k: int, l: int) -> float:
    J = jordan_cell(n).matrix
    A = np.linalg.matrix_power(J, k) + np.linalg.matrix_power(J, l)
    return numerical_radius(A, tol=1e-12).value


def two_power_radius(n: int, k: int, l: int, gamma: float = 0.0) -> float:
    """``w_2(S_n*^k + e^{i gamma} S_n*^l)``.

    Conjugating by ``diag(e^{i j phi})`` maps the matrix to
    ``e^{i k phi}(S*^k + e^{i(gamma + (l-k) phi)} S*^l)``, so the value does
    not depend on ``gamma`` and is computed (and cached) at ``gamma = 0``.
    """
    if k == l:
        raise ValidationError("k and l must be distinct")
    if not (0 <= k < n and 0 <= l < n):
        raise ValidationError(f"k and l must lie in 0..{n - 1}")
    return _two_power_radius_gamma0(n, min(k, l), max(k, l))


@dataclass(frozen=True)
class TwoCoeffReport:
    n: int
    k: int
    l: int
    gamma: float
    lhs: float  # |c_k| + |c_l|
    sharp: float  # c_0 * w_2(S_n*^k + e^{i gamma} S_n*^l)
    closed: float  # c_0 * two_coeff_closed(n, k, l)
    tol: float

    @property
    def sharp_ok(self) -> bool:
        return self.lhs <= self.sharp + self.tol

    @property
    def chain_ok(self) -> bool:
        return self.sharp <= self.closed + self.tol

    @property
    def ok(self) -> bool:
        return self.sharp_ok and self.chain_ok


def check_two_coeff(P: TrigPoly, k: int, l: int, n: int | None = None, tol: float = 1e-8) -> TwoCoeffReport:
    """Check ``|c_k| + |c_l| <= sharp <= closed`` for a positive ``P``.

    ``gamma = arg(c_k) - arg(c_l)`` is the phase with
    ``|c_k + e^{i gamma} c_l| = |c_k| + |c_l|``.
    """
    if k == l:
        raise ValidationError("k and l must be distinct")
    n = _resolve_n(P, n)
    ck, cl = P.c(k), P.c(l)
    gamma = float(np.angle(ck) - np.angle(cl))
    c0 = P.c0
    return TwoCoeffReport(
        n=n,
        k=k,
        l=l,
        gamma=gamma,
        lhs=abs(ck) + abs(cl),
        sharp=c0 * two_power_radius(n, k, l, gamma),
        closed=c0 * two_coeff_closed(n, k, l),
        tol=tol * max(c0, 1.0),
    )


def extremal_witness(n: int, k: int) -> TrigPoly:
    """Positive polynomial of degree ``n-1`` attaining ``|c_k| = c_0 w_2(S_n*^k)``.

    The numerical-radius witness vector of ``S_n*^k`` read as the
    coefficients of ``Q``; the variable is rotated so ``c_k >= 0``.
    """
    if n < 2 or not 1 <= k <= n - 1:
        raise ValidationError("extremal_witness needs n >= 2 and 1 <= k <= n-1")
    J = np.linalg.matrix_power(jordan_cell(n).matrix, k)
    q = numerical_radius(J, tol=1e-12).vector
    P = from_analytic(q)
    phi = -np.angle(P.c(k)) / k
    return from_analytic(q * np.exp(1j * phi * np.arange(n)))


def random_analytic(n: int, seed: int) -> np.ndarray:
    """``n`` i.i.d. complex standard normals ``(x + iy)/sqrt(2)`` from PCG64(seed)."""
    if n < 1:
        raise ValidationError("n must be at least 1")
    rng = np.random.default_rng(seed)
    return (rng.standard_normal(n) + 1j * rng.standard_normal(n)) / math.sqrt(2.0)


def random_positive(n: int, seed: int) -> TrigPoly:
    """``|Q|^2`` for a random ``Q`` of degree ``n-1`` (see :func:`random_analytic`)."""
    return from_analytic(random_analytic(n, seed))


# --------------------------------------------------------------------------
# JSON interchange: {"degree": m, "coeffs": [[re, im], ...]} for c_{-m}..c_m


def trigpoly_to_json(P: TrigPoly) -> dict:
    return {"degree": P.degree, "coeffs": [[float(z.real), float(z.imag)] for z in P.coeffs]}


def trigpoly_from_json(obj) -> TrigPoly:
    if not isinstance(obj, dict):
        raise ValidationError("trig polynomial file: top level must be a JSON object")
    for key in ("degree", "coeffs"):
        if key not in obj:
            raise ValidationError(f"trig polynomial file: missing field {key!r}")
    m = obj["degree"]
    if not isinstance(m, int) or isinstance(m, bool) or m < 0:
        raise ValidationError(f"trig polynomial file: field 'degree' must be a nonnegative integer, got {m!r}")
    coeffs = obj["coeffs"]
    if not isinstance(coeffs, list) or len(coeffs) != 2 * m + 1:
        got = len(coeffs) if isinstance(coeffs, list) else type(coeffs).__name__
        raise ValidationError(f"trig polynomial file: field 'coeffs' must list 2*degree+1 = {2 * m + 1} pairs, got {got}")
    vals = []
    for i, pair in enumerate(coeffs):
        if (
            not isinstance(pair, (list, tuple))
            or len(pair) != 2
            or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in pair)
        ):
            raise ValidationError(f"trig polynomial file: coeffs[{i}] must be a [re, im] pair of numbers")
        vals.append(complex(pair[0], pair[1]))
    return TrigPoly(np.array(vals))


def load_trigpoly(path) -> TrigPoly:
    try:
        obj = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ValidationError(f"trig polynomial file {path}: invalid JSON ({exc})") from exc
    return trigpoly_from_json(obj)
