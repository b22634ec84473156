"""Operator radii of square complex matrices.

Covers the operator norm, the numerical radius ``w_2``, the ``w_rho`` family
attached to the classes ``C_rho`` of operators with rho-dilations, and the
diameter of the numerical range.

The numerical radius is computed from

    w_2(A) = max_theta lambda_max((e^{i theta} A + e^{-i theta} A*) / 2),

and ``w_rho`` by bisection on ``r`` against a certified test of the
quadratic-form characterization of ``C_rho``:

    I - a (conj(lam) A* + lam A) + b |lam|^2 A*A >= 0   for all |lam| <= 1,

with ``a = 1 - 1/rho`` and ``b = 1 - 2/rho``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.optimize import minimize, minimize_scalar

from .errors import ValidationError
from .linalg import as_matrix, operator_norm, spectral_radius

__all__ = [
    "RadiusValue",
    "MembershipCertificate",
    "numerical_radius",
    "diam_numerical_range",
    "c_rho_membership",
    "omega_rho",
]

TWO_PI = 2.0 * math.pi
_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class RadiusValue:
    """A computed radius together with an optional witness.

    For the numerical radius the witness is the maximizing angle ``theta``
    and a unit vector ``vector`` with ``|<A x, x>| = value`` (up to
    ``tolerance``).  For ``w_rho`` with ``rho`` outside ``{1, 2}`` the
    witness records the worst point of the membership test at the upper
    bisection end.
    """

    value: float
    tolerance: float
    theta: float | None = None
    vector: np.ndarray | None = None

    def __float__(self) -> float:
        return self.value


@dataclass(frozen=True)
class MembershipCertificate:
    member: bool
    worst_lambda: complex
    worst_eigenvalue: float
    # grid minimum minus the Lipschitz slack of one grid cell
    certified_margin: float


def _hermitian_parts(A: np.ndarray, thetas: np.ndarray) -> np.ndarray:
    e = np.exp(1j * thetas)[:, None, None]
    X = e * A[None, :, :]
    return 0.5 * (X + np.conj(np.swapaxes(X, 1, 2)))


def _golden_max(f: Callable[[float], float], lo: float, hi: float, xtol: float) -> tuple[float, float]:
    a, b = lo, hi
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc, fd = f(c), f(d)
    while b - a > xtol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _GOLDEN * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _GOLDEN * (b - a)
            fd = f(d)
    return (c, fc) if fc >= fd else (d, fd)


def _maximize_on_circle(
    batch: Callable[[np.ndarray], np.ndarray],
    single: Callable[[float], float],
    period: float,
    lipschitz: float,
    tol: float,
    grid: int = 256,
    max_candidates: int = 16,
) -> tuple[float, float]:
    """Maximize a Lipschitz periodic function: grid scan plus local refinement.

    The maximizer lies within half a cell of some grid point, so only cells
    whose grid value is within ``lipschitz * h / 2`` of the grid maximum can
    hold it.  Those that are discrete local maxima are refined on the two
    adjacent cells by bounded Brent search in decreasing order,
    skipping any that can no longer beat the best value found.  Among
    maximizers (equal up to rounding) the smallest angle wins.
    """
    thetas = period * np.arange(grid) / grid
    vals = batch(thetas)
    h = period / grid
    slack = lipschitz * h / 2.0
    best = float(vals.max())
    local = (vals >= np.roll(vals, 1)) & (vals >= np.roll(vals, -1))
    cand = np.flatnonzero((vals >= best - slack) & local)
    cand = cand[np.argsort(-vals[cand], kind="stable")[:max_candidates]]
    xtol = max(tol / max(lipschitz, 1e-300), 1e-12)
    # every sample takes part in the tie break, so flat profiles give theta = 0
    found = [(float(t), float(v)) for t, v in zip(thetas, vals)]
    for i in cand:
        if vals[i] + slack < best - tol:
            continue
        t0 = thetas[i]
        res = minimize_scalar(
            lambda t: -single(t), bounds=(t0 - h, t0 + h), method="bounded", options={"xatol": xtol}
        )
        t, v = float(res.x), -float(res.fun)
        found.append((t % period, v))
        best = max(best, v)
    vmax = max(v for _, v in found)
    tie = [t for t, v in found if v >= vmax - 1e-12 * max(1.0, abs(vmax))]
    theta = min(tie)
    return theta, max(v for t, v in found if t == theta)


def numerical_radius(A, tol: float = 1e-8, grid: int = 256) -> RadiusValue:
    """Numerical radius ``w_2(A) = sup |<Ax, x>|`` over unit vectors.

    Examples
    --------
    >>> import numpy as np
    >>> round(numerical_radius(np.diag(np.ones(3), 1)).value, 7)
    0.7071068
    """
    if tol <= 0:
        raise ValidationError("tol must be positive")
    A = as_matrix(A)
    n = A.shape[0]
    nrm = operator_norm(A)
    if nrm == 0.0:
        x = np.zeros(n, dtype=complex)
        x[0] = 1.0
        return RadiusValue(0.0, tol, 0.0, x)

    def batch(thetas):
        return np.linalg.eigvalsh(_hermitian_parts(A, thetas))[:, -1]

    def single(theta):
        H = _hermitian_parts(A, np.array([theta]))[0]
        return float(np.linalg.eigvalsh(H)[-1])

    theta, _ = _maximize_on_circle(batch, single, TWO_PI, nrm, tol, grid)
    H = _hermitian_parts(A, np.array([theta]))[0]
    w, V = np.linalg.eigh(H)
    x = V[:, -1]
    return RadiusValue(float(max(w[-1], 0.0)), tol, float(theta), x)


def diam_numerical_range(A, tol: float = 1e-8, grid: int = 256) -> float:
    """Diameter of the numerical range ``W(A)``.

    Equals the largest width of ``W(A)`` over all directions, i.e. the
    maximum over ``theta`` in ``[0, pi)`` of the eigenvalue spread of the
    Hermitian part of ``e^{i theta} A``.
    """
    if tol <= 0:
        raise ValidationError("tol must be positive")
    A = as_matrix(A)
    nrm = operator_norm(A)
    if nrm == 0.0:
        return 0.0

    def batch(thetas):
        w = np.linalg.eigvalsh(_hermitian_parts(A, thetas))
        return w[:, -1] - w[:, 0]

    def single(theta):
        w = np.linalg.eigvalsh(_hermitian_parts(A, np.array([theta]))[0])
        return float(w[-1] - w[0])

    _, value = _maximize_on_circle(batch, single, math.pi, 2.0 * nrm, tol, grid)
    return max(value, 0.0)


# --------------------------------------------------------------------------
# classes C_rho


def _c_rho_kernels(A: np.ndarray, rho: float):
    a = 1.0 - 1.0 / rho
    b = 1.0 - 2.0 / rho
    Ah = A.conj().T
    G = Ah @ A
    n = A.shape[0]
    I = np.eye(n, dtype=complex)

    def lam_min(lams: np.ndarray) -> np.ndarray:
        lams = np.asarray(lams, dtype=complex)
        L = lams[:, None, None]
        P = I - a * (np.conj(L) * Ah + L * A) + b * (np.abs(L) ** 2) * G
        P = 0.5 * (P + np.conj(np.swapaxes(P, 1, 2)))
        return np.linalg.eigvalsh(P)[:, 0]

    return a, b, lam_min


def c_rho_membership(
    A, rho: float, tol: float = 1e-10, n_radii: int = 33, n_phases: int = 128
) -> MembershipCertificate:
    """Test whether ``A`` belongs to the class ``C_rho``.

    The smallest eigenvalue of the kernel ``P_lam(A*, A)`` is scanned over a
    polar grid of the closed unit disc (radii ``k/(n_radii-1)``, ``n_phases``
    phases) and refined locally around the best cells.  For ``rho <= 2`` the
    quadratic form is concave in ``lam`` for every fixed vector, so the
    minimum sits on the unit circle and only the outer ring is scanned.

    Local refinement runs only when the grid does not decide: a grid value
    below ``-tol`` is already a violation, and a grid minimum above the
    Lipschitz slack of one cell certifies membership.
    """
    if rho <= 0:
        raise ValidationError("rho must be positive")
    if tol <= 0:
        raise ValidationError("tol must be positive")
    A = as_matrix(A)
    a, b, lam_min = _c_rho_kernels(A, rho)
    nrm = operator_norm(A)
    lip = 2.0 * abs(a) * nrm + 2.0 * abs(b) * nrm**2
    phases = TWO_PI * np.arange(n_phases) / n_phases
    dphi = TWO_PI / n_phases

    if rho <= 2.0:
        lams = np.exp(1j * phases)
        vals = lam_min(lams)
        slack = lip * dphi / 2.0
        best_grid = float(vals.min())
        worst_lam, worst_val = complex(lams[np.argmin(vals)]), best_grid
        if best_grid < -tol or best_grid - slack >= -tol:
            return MembershipCertificate(best_grid >= -tol, worst_lam, best_grid, best_grid - slack)

        def f(phi):
            return float(lam_min(np.array([np.exp(1j * phi)]))[0])

        for i in np.argsort(vals, kind="stable")[:3]:
            phi, v = _golden_max(lambda t: -f(t), phases[i] - dphi, phases[i] + dphi, 1e-12)
            v = -v
            if v < worst_val:
                worst_val, worst_lam = v, complex(np.exp(1j * phi))
    else:
        radii = np.linspace(0.0, 1.0, n_radii)
        dr = radii[1] - radii[0]
        R, PH = np.meshgrid(radii, phases, indexing="ij")
        lams = (R * np.exp(1j * PH)).ravel()
        vals = lam_min(lams)
        slack = lip * math.hypot(dr, dphi) / 2.0
        best_grid = float(vals.min())
        worst_lam, worst_val = complex(lams[np.argmin(vals)]), best_grid
        if best_grid < -tol or best_grid - slack >= -tol:
            return MembershipCertificate(best_grid >= -tol, worst_lam, best_grid, best_grid - slack)

        def g(x):
            r = min(max(x[0], 0.0), 1.0)
            return float(lam_min(np.array([r * np.exp(1j * x[1])]))[0])

        for idx in np.argsort(vals, kind="stable")[:3]:
            r0, p0 = R.ravel()[idx], PH.ravel()[idx]
            bounds = [(max(r0 - dr, 0.0), min(r0 + dr, 1.0)), (p0 - dphi, p0 + dphi)]
            res = minimize(
                g,
                x0=np.array([r0, p0]),
                method="Nelder-Mead",
                bounds=bounds,
                options={"xatol": 1e-11, "fatol": 1e-15, "maxiter": 400},
            )
            if res.fun < worst_val:
                r = min(max(res.x[0], 0.0), 1.0)
                worst_val, worst_lam = float(res.fun), complex(r * np.exp(1j * res.x[1]))

    return MembershipCertificate(
        member=bool(worst_val >= -tol),
        worst_lambda=worst_lam,
        worst_eigenvalue=float(worst_val),
        certified_margin=best_grid - slack,
    )


def omega_rho(A, rho: float, tol: float = 1e-4, member_tol: float = 1e-12) -> RadiusValue:
    """The radius ``w_rho(A) = inf{r > 0 : A / r in C_rho}``.

    ``rho = 1`` returns the operator norm and ``rho = 2`` the numerical
    radius.  Otherwise the value is bracketed using monotonicity in ``rho``
    (``[w_2, ||A||]`` for ``1 < rho < 2``, ``[||A||, (2/rho - 1) ||A||]``
    for ``rho < 1`` and ``[r(A), w_2]`` for ``rho > 2``) and bisected to
    relative width ``tol``.
    """
    if rho <= 0:
        raise ValidationError("rho must be positive")
    if tol <= 0:
        raise ValidationError("tol must be positive")
    A = as_matrix(A)
    if rho == 1.0:
        return RadiusValue(operator_norm(A), 1e-10)
    if rho == 2.0:
        return numerical_radius(A, tol=min(tol, 1e-8))
    nrm = operator_norm(A)
    if nrm == 0.0:
        return RadiusValue(0.0, tol)

    def member(r):
        return c_rho_membership(A / r, rho, tol=member_tol)

    # w_rho is nonincreasing in rho and (2/rho - 1) w_{2-rho} = w_rho
    if rho < 1.0:
        lo, hi = nrm, (2.0 / rho - 1.0) * nrm
    elif rho < 2.0:
        lo, hi = numerical_radius(A).value, nrm
    else:
        lo, hi = spectral_radius(A), numerical_radius(A).value
    hi *= 1.0 + 1e-9
    cert = member(hi)
    while not cert.member:
        hi *= 2.0
        cert = member(hi)
    lo = min(lo * (1.0 - 1e-9), hi)
    while hi - lo > tol * hi:
        mid = 0.5 * (lo + hi)
        c = member(mid)
        if c.member:
            hi, cert = mid, c
        else:
            lo = mid
    return RadiusValue(0.5 * (lo + hi), tol * hi, theta=float(np.angle(cert.worst_lambda)) % TWO_PI)
