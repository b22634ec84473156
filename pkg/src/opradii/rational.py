"""Rational functions positive on the torus and their Fourier coefficients.

``F = num / den`` with ``deg num < deg den`` and no pole on the circle.
If ``F > 0`` on the circle then ``|c_k| <= c_0 w_2(R^k)``, where ``R`` is the
model operator built from the poles of ``F`` inside the disc.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import ValidationError
from .models import ModelOperator, inside_kernel_model
from .radii import numerical_radius
from .roots import cluster_roots, poly_roots

__all__ = [
    "RationalTorusFunction",
    "RationalBoundReport",
    "fourier_coeffs",
    "check_rational_bound",
    "single_pole_function",
    "model_space_function",
    "random_model_space_function",
    "rational_to_json",
    "rational_from_json",
    "load_rational",
]

POSITIVITY_GRID = 4096
MIN_POLE_MARGIN = 1e-6
MAX_FFT = 2**20


def _coeffs(c, name: str) -> np.ndarray:
    c = np.atleast_1d(np.asarray(c, dtype=complex))
    if c.ndim != 1 or c.size == 0:
        raise ValidationError(f"{name} must be a nonempty 1-D coefficient vector")
    if not np.all(np.isfinite(c)):
        raise ValidationError(f"{name} coefficients must be finite")
    nz = np.flatnonzero(c)
    if nz.size == 0:
        raise ValidationError(f"{name} is the zero polynomial")
    return c[: nz[-1] + 1]


@dataclass(frozen=True)
class RationalTorusFunction:
    """``F(z) = num(z) / den(z)`` on ``|z| = 1`` (coefficients low to high).

    Parameters
    ----------
    num, den : array_like
        Polynomial coefficients with ``deg num < deg den``.
    validate : bool
        Check that ``F`` is real and positive on a 4096-point grid.
    """

    num: np.ndarray
    den: np.ndarray
    validate: bool = True
    den_roots: np.ndarray = field(init=False, repr=False)
    pole_margin: float = field(init=False)

    def __post_init__(self):
        num = _coeffs(self.num, "num")
        den = _coeffs(self.den, "den")
        if num.size >= den.size:
            raise ValidationError(
                f"F must have no principal part: deg num = {num.size - 1} >= deg den = {den.size - 1}"
            )
        roots = poly_roots(den)
        margin = float(np.min(np.abs(np.abs(roots) - 1.0)))
        if margin <= MIN_POLE_MARGIN:
            raise ValidationError(f"den has a root within {MIN_POLE_MARGIN:g} of the unit circle")
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "den_roots", roots)
        object.__setattr__(self, "pole_margin", margin)
        if self.validate:
            t = 2.0 * math.pi * np.arange(POSITIVITY_GRID) / POSITIVITY_GRID
            v = self(np.exp(1j * t))
            scale = float(np.abs(v).max())
            if np.abs(v.imag).max() > 1e-9 * scale:
                raise ValidationError("F is not real on the unit circle")
            i = int(np.argmin(v.real))
            if v.real[i] <= 0:
                raise ValidationError(f"F is not positive on the unit circle: F = {v.real[i]:.3e} at t = {t[i]:.6f}")

    def __call__(self, z) -> np.ndarray:
        z = np.asarray(z, dtype=complex)
        return np.polyval(self.num[::-1], z) / np.polyval(self.den[::-1], z)

    def inside_poles(self, cluster_tol: float = 1e-7) -> list[tuple[complex, int]]:
        return [(b, m) for b, m in cluster_roots(self.den_roots, cluster_tol) if abs(b) < 1.0]


def _fft_coeffs(F: RationalTorusFunction, N: int, k_max: int) -> np.ndarray:
    z = np.exp(2j * math.pi * np.arange(N) / N)
    c = np.fft.fft(F(z)) / N
    k = np.arange(-k_max, k_max + 1)
    return c[k % N]


def fourier_coeffs(F: RationalTorusFunction, k_max: int, tol: float = 1e-12) -> np.ndarray:
    """Fourier coefficients ``c_{-k_max}, ..., c_{k_max}`` of ``F`` on the circle.

    Trapezoidal rule on ``N`` points.  ``F`` is analytic on the annulus
    ``r < |z| < 1/r`` with ``r = 1/(1 + pole_margin)``, so the aliasing error
    is about ``sup|F| r^(N - k_max) / (1 - r^N)``; ``N`` is the first power
    of two making that ``< tol``, then doubled until the coefficients agree
    to ``tol``.  Here ``tol`` is relative to ``max(1, sup|F|)`` so that it
    stays above the rounding floor of the FFT.  Hermitian symmetry is
    enforced by averaging.

    Raises
    ------
    ValidationError
        If ``N`` would have to exceed ``2**20``.
    """
    if tol <= 0:
        raise ValidationError("tol must be positive")
    if k_max < 0:
        raise ValidationError("k_max must be nonnegative")
    r = 1.0 / (1.0 + F.pole_margin)
    t = 2.0 * math.pi * np.arange(POSITIVITY_GRID) / POSITIVITY_GRID
    sup = float(np.abs(F(np.exp(1j * t))).max())
    tol = tol * max(1.0, sup)
    N = 16
    while N < 2 * k_max + 2 or sup * r ** (N - k_max) / (1.0 - r**N) >= tol:
        N *= 2
        if N > MAX_FFT:
            raise ValidationError(
                f"pole margin {F.pole_margin:.3e} is too small for tol {tol:g} with at most {MAX_FFT} nodes"
            )
    c = _fft_coeffs(F, N, k_max)
    while True:
        if 2 * N > MAX_FFT:
            raise ValidationError(f"Fourier coefficients did not settle to tol {tol:g} with {MAX_FFT} nodes")
        c2 = _fft_coeffs(F, 2 * N, k_max)
        done = np.abs(c2 - c).max() <= tol
        N, c = 2 * N, c2
        if done:
            break
    return 0.5 * (c + np.conj(c[::-1]))


@dataclass(frozen=True)
class RationalBoundReport:
    c0: float
    coeffs: tuple[complex, ...]  # c_1, ..., c_kmax
    radii: tuple[float, ...]  # w_2(R^k)
    margins: tuple[float, ...]  # c_0 w_2(R^k) - |c_k|
    model_dim: int
    trivial: bool
    tol: float

    @property
    def ok(self) -> bool:
        return all(m >= -self.tol for m in self.margins)


def check_rational_bound(F: RationalTorusFunction, k_max: int, tol: float = 1e-8) -> RationalBoundReport:
    """Check ``|c_k| <= c_0 w_2(R^k)`` for ``1 <= k <= k_max``.

    ``R`` is ``S*`` on the kernel of the inside factor of ``den``.  Swapping
    those roots for their conjugates conjugates ``R`` entrywise, which leaves
    every ``w_2(R^k)`` unchanged.  Without inside poles ``R`` acts on ``{0}``:
    all bounds are ``0`` and the report is marked ``trivial``.
    """
    if k_max < 1:
        raise ValidationError("k_max must be at least 1")
    c = fourier_coeffs(F, k_max)
    c0 = float(c[k_max].real)
    ck = c[k_max + 1 :]
    inside = F.inside_poles()
    if not inside:
        radii = (0.0,) * k_max
        dim = 0
    else:
        R: ModelOperator = inside_kernel_model(F.den)
        dim = R.dim
        radii, P = [], np.eye(dim, dtype=complex)
        for _ in range(k_max):
            P = P @ R.matrix
            radii.append(numerical_radius(P, tol=1e-12).value)
        radii = tuple(radii)
    margins = tuple(c0 * w - abs(x) for w, x in zip(radii, ck))
    return RationalBoundReport(c0, tuple(complex(x) for x in ck), radii, margins, dim, not inside, tol * max(c0, 1.0))


# --------------------------------------------------------------------------
# constructions


def single_pole_function(beta: complex) -> RationalTorusFunction:
    """``|1/(1 - beta z)|^2 = z / ((1 - beta z)(z - conj(beta)))`` on the circle.

    Its coefficients are ``c_k = beta^k / (1 - |beta|^2)`` for ``k >= 0``.
    """
    return model_space_function([beta], [1.0])


def model_space_function(poles, numerator) -> RationalTorusFunction:
    """``|h|^2`` on the circle for ``h = N(z) / prod(1 - b_i z)``.

    With ``deg N < len(poles)`` the function ``h`` lies in the span of the
    Cauchy kernels ``1/(1 - b_i z)^s``.  On ``|z| = 1``,
    ``conj(h) = z N~(z) / prod(z - conj(b_i))`` where ``N~`` is the conjugate
    reversal of ``N``, so ``|h|^2 = z N N~ / (prod(1 - b_i z) prod(z - conj(b_i)))``.
    """
    b = np.atleast_1d(np.asarray(poles, dtype=complex))
    nh = np.atleast_1d(np.asarray(numerator, dtype=complex))
    d = b.size
    if d == 0 or nh.size > d:
        raise ValidationError("need at least one pole and deg N < number of poles")
    if np.any(np.abs(b) >= 1.0) or np.any(b == 0):
        raise ValidationError("poles b_i must satisfy 0 < |b_i| < 1")
    nh = np.concatenate([nh, np.zeros(d - nh.size)])  # treat N as degree d-1
    n_rev = np.conj(nh[::-1])
    num = np.concatenate([[0.0], np.convolve(nh, n_rev)])
    dh = np.array([1.0 + 0j])
    dt = np.array([1.0 + 0j])
    for bi in b:
        dh = np.convolve(dh, [1.0, -bi])
        dt = np.convolve(dt, [-np.conj(bi), 1.0])
    return RationalTorusFunction(num, np.convolve(dh, dt))


def random_model_space_function(
    rng: np.random.Generator, max_poles: int = 3, max_modulus: float = 0.8, repeat_prob: float = 0.2
) -> RationalTorusFunction:
    """Random ``|h|^2`` with ``h`` in a model space of ``1..max_poles`` poles.

    Poles are uniform in the annulus ``0.05 <= |b| <= max_modulus`` (by
    area); with probability ``repeat_prob`` the last pole repeats an earlier
    one.  The numerator has i.i.d. complex normal coefficients.
    """
    d = int(rng.integers(1, max_poles + 1))
    rad = np.sqrt(rng.uniform(0.05**2, max_modulus**2, d))
    b = rad * np.exp(2j * math.pi * rng.uniform(size=d))
    if d > 1 and rng.uniform() < repeat_prob:
        b[-1] = b[int(rng.integers(0, d - 1))]
    nh = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    return model_space_function(b, nh)


# --------------------------------------------------------------------------
# JSON interchange: {"num": [[re, im], ...], "den": [[re, im], ...]} low to high


def rational_to_json(F: RationalTorusFunction) -> dict:
    return {
        "num": [[float(z.real), float(z.imag)] for z in F.num],
        "den": [[float(z.real), float(z.imag)] for z in F.den],
    }


def _pairs(obj, key: str) -> np.ndarray:
    if key not in obj:
        raise ValidationError(f"rational file: missing field {key!r}")
    vals = obj[key]
    if not isinstance(vals, list) or not vals:
        raise ValidationError(f"rational file: field {key!r} must be a nonempty list of [re, im] pairs")
    out = []
    for i, pair in enumerate(vals):
        if (
            not isinstance(pair, (list, tuple))
            or len(pair) != 2
            or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in pair)
        ):
            raise ValidationError(f"rational file: {key}[{i}] must be a [re, im] pair of numbers")
        out.append(complex(pair[0], pair[1]))
    return np.array(out)


def rational_from_json(obj, validate: bool = True) -> RationalTorusFunction:
    if not isinstance(obj, dict):
        raise ValidationError("rational file: top level must be a JSON object")
    return RationalTorusFunction(_pairs(obj, "num"), _pairs(obj, "den"), validate=validate)


def load_rational(path, validate: bool = True) -> RationalTorusFunction:
    try:
        obj = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ValidationError(f"rational file {path}: invalid JSON ({exc})") from exc
    return rational_from_json(obj, validate)
