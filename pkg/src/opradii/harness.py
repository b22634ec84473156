"""Randomized verification suites and the table of reproduced constants.

Every suite draws trial ``i`` from ``numpy.random.default_rng(seed ^ i)``
(PCG64), evaluates a pure margin function on the drawn inputs and records a
violation whenever a margin falls below its tolerance.  Violations carry the
serialized inputs, and :func:`replay` recomputes their margins.

Report schema (``VerificationReport.to_json``)::

    {
      "suite": str,
      "config": {"seed", "trials", "n_range", "tolerances"},
      "n_trials": int,
      "ok": bool,
      "min_margins": {check: float},
      "margins": {check: [float per trial]},      # omitted in summaries
      "violations": [{"trial", "check", "margin", "tol", "inputs"}],
      "constants": [{"name", "expected", "computed", "diff", "tol", "ok"}],
      "wall_clock": float                        # seconds
    }

A margin is ``bound - value`` (nonnegative when the inequality holds).
"""

from __future__ import annotations

import functools
import json
import math
import time
from dataclasses import asdict, dataclass, field
from typing import Callable

import numpy as np

from .bounds import (
    combined_bound,
    eps_fejer_bound,
    es_omega,
    herrero_delta,
    hh_bound,
    two_coeff_closed,
)
from .errors import ValidationError
from .linalg import mat_poly, matrix_from_json, matrix_to_json, operator_norm
from .models import bergman_cell, jordan_cell
from .radii import diam_numerical_range, numerical_radius, omega_rho
from .rational import (
    check_rational_bound,
    fourier_coeffs,
    random_model_space_function,
    rational_from_json,
    rational_to_json,
    single_pole_function,
)
from .trigpoly import (
    TrigPoly,
    check_classical_bounds,
    check_two_coeff,
    random_analytic,
    trigpoly_from_json,
    trigpoly_to_json,
    two_power_radius,
)

__all__ = [
    "SuiteConfig",
    "VerificationReport",
    "DEFAULT_TRIALS",
    "DEFAULT_N_RANGE",
    "DEFAULT_TOLERANCES",
    "random_nilpotent",
    "nilpotent_margins",
    "section_kernel_min",
    "sections_margins",
    "epsilonized_margins",
    "run_nilpotent_suite",
    "run_kernel_sections_suite",
    "run_epsilonized_suite",
    "run_trig_suite",
    "run_rational_suite",
    "reproduce_constants",
    "run_all",
    "replay",
    "SUITES",
]

DEFAULT_TRIALS = {
    "nilpotent": 200,
    "sections": 200,
    "epsilonized": 500,
    "trig": 10_000,
    "rational": 500,
}
DEFAULT_N_RANGE = {
    "nilpotent": (2, 8),
    "sections": (2, 6),
    "epsilonized": (2, 8),
    "trig": (2, 10),
    "rational": (1, 3),  # number of poles
}
DEFAULT_TOLERANCES = {
    "bound": 1e-8,  # absolute slack on every inequality
    "omega_rho_rel": 1e-5,  # extra relative slack for bisected w_rho values
    "hypothesis": 1e-10,  # slack on the positivity hypothesis of section kernels
}
OMEGA_RHO_TOL = 1e-6
RHOS = (1.0, 1.5, 2.0)


@dataclass(frozen=True)
class SuiteConfig:
    """Parameters of a verification run.

    ``trials`` and ``n_range`` left as ``None`` take the per-suite defaults;
    for the trig suite ``trials`` counts polynomials per degree.  Tolerances
    not given fall back to :data:`DEFAULT_TOLERANCES`.
    """

    seed: int = 0
    trials: int | None = None
    n_range: tuple[int, int] | None = None
    tolerances: dict = field(default_factory=dict)

    def __post_init__(self):
        if not isinstance(self.seed, (int, np.integer)) or self.seed < 0 or self.seed >= 2**64:
            raise ValidationError("seed must be an integer in [0, 2**64)")
        if self.trials is not None and self.trials < 1:
            raise ValidationError("trials must be at least 1")
        if self.n_range is not None:
            lo, hi = self.n_range
            if lo > hi or lo < 1:
                raise ValidationError(f"invalid n_range {self.n_range}")
        unknown = set(self.tolerances) - set(DEFAULT_TOLERANCES)
        if unknown:
            raise ValidationError(f"unknown tolerance names: {sorted(unknown)}")

    def resolved(self, suite: str) -> "SuiteConfig":
        return SuiteConfig(
            seed=int(self.seed),
            trials=self.trials or DEFAULT_TRIALS[suite],
            n_range=tuple(self.n_range or DEFAULT_N_RANGE[suite]),
            tolerances={**DEFAULT_TOLERANCES, **self.tolerances},
        )

    def rng(self, index: int) -> np.random.Generator:
        return np.random.default_rng(int(self.seed) ^ index)


@dataclass
class VerificationReport:
    suite: str
    config: dict
    n_trials: int = 0
    margins: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)
    constants: list = field(default_factory=list)
    wall_clock: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations and all(row["ok"] for row in self.constants)

    @property
    def min_margins(self) -> dict:
        return {k: (min(v) if v else None) for k, v in sorted(self.margins.items())}

    def to_dict(self, include_margins: bool = True) -> dict:
        d = {
            "suite": self.suite,
            "config": self.config,
            "n_trials": self.n_trials,
            "ok": self.ok,
            "min_margins": self.min_margins,
            "violations": self.violations,
            "constants": self.constants,
            "wall_clock": self.wall_clock,
        }
        if include_margins:
            d["margins"] = {k: v for k, v in sorted(self.margins.items())}
        return d

    def to_json(self, include_margins: bool = True, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(include_margins), sort_keys=True, indent=indent)


def _record(report: VerificationReport, trial: int, margins: dict, tols: dict, inputs: dict) -> None:
    for check, m in margins.items():
        report.margins.setdefault(check, []).append(float(m))
        if m < -tols[check]:
            report.violations.append(
                {"trial": trial, "check": check, "margin": float(m), "tol": float(tols[check]), "inputs": inputs}
            )


def _config_dict(cfg: SuiteConfig) -> dict:
    d = asdict(cfg)
    d["n_range"] = list(cfg.n_range)
    return d


def _cvec_json(v) -> list:
    return [[float(z.real), float(z.imag)] for z in np.asarray(v, dtype=complex)]


def _cvec_from_json(v) -> np.ndarray:
    return np.array([complex(a, b) for a, b in v])


# --------------------------------------------------------------------------
# nilpotent contractions


def random_nilpotent(rng: np.random.Generator, n: int) -> np.ndarray:
    """Strictly upper triangular complex normal matrix scaled to norm 0.999."""
    if n < 2:
        raise ValidationError("n must be at least 2")
    T = np.triu(rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n)), 1)
    return T * (0.999 / operator_norm(T))


@functools.lru_cache(maxsize=None)
def _jordan_power_radius(n: int, m: int) -> float:
    J = np.linalg.matrix_power(jordan_cell(n).matrix, m)
    return numerical_radius(J, tol=1e-12).value


def nilpotent_margins(T, p) -> dict:
    """Margins for a contraction ``T`` with ``T^n = 0`` (``n = dim T``).

    ``power_radius``: ``min_m es_omega(n, m) - w_2(T^m)``.
    ``omega_rho_<rho>``: ``w_rho(p(S_n*)) - w_rho(p(T))``.
    """
    T = np.asarray(T, dtype=complex)
    n = T.shape[0]
    out = {}
    P = np.eye(n, dtype=complex)
    worst = math.inf
    for m in range(1, n):
        P = P @ T
        worst = min(worst, es_omega(n, m) - numerical_radius(P).value)
    out["power_radius"] = worst
    S = jordan_cell(n).matrix
    pT, pS = mat_poly(T, p), mat_poly(S, p)
    for rho in RHOS:
        wT = omega_rho(pT, rho, tol=OMEGA_RHO_TOL).value
        wS = omega_rho(pS, rho, tol=OMEGA_RHO_TOL).value
        out[f"omega_rho_{rho:g}"] = wS - wT
    return out


def _nilpotent_tols(cfg: SuiteConfig, T, p) -> dict:
    tb, rel = cfg.tolerances["bound"], cfg.tolerances["omega_rho_rel"]
    n = T.shape[0]
    scale = operator_norm(mat_poly(jordan_cell(n).matrix, p))
    tols = {"power_radius": tb}
    for rho in RHOS:
        # bisection widths of both values, relative to the upper bracket
        tols[f"omega_rho_{rho:g}"] = tb + (rel if rho not in (1.0, 2.0) else 0.0) * max(1.0, 2.0 / rho) * scale
    return tols


def _nilpotent_trial(cfg: SuiteConfig, i: int):
    rng = cfg.rng(i)
    lo, hi = cfg.n_range
    n = int(rng.integers(max(lo, 2), max(hi, 2) + 1))
    T = random_nilpotent(rng, n)
    d = int(rng.integers(1, n))
    p = rng.standard_normal(d + 1) + 1j * rng.standard_normal(d + 1)
    return {"T": matrix_to_json(T), "p": _cvec_json(p)}


def _nilpotent_eval(cfg: SuiteConfig, inputs: dict):
    T = matrix_from_json(inputs["T"])
    p = _cvec_from_json(inputs["p"])
    return nilpotent_margins(T, p), _nilpotent_tols(cfg, T, p)


def _run(suite: str, cfg: SuiteConfig | None, draw, evaluate) -> VerificationReport:
    cfg = (cfg or SuiteConfig()).resolved(suite)
    t0 = time.perf_counter()
    report = VerificationReport(suite, _config_dict(cfg))
    for i in range(cfg.trials):
        inputs = draw(cfg, i)
        margins, tols = evaluate(cfg, inputs)
        _record(report, i, margins, tols, inputs)
    report.n_trials = cfg.trials
    report.wall_clock = time.perf_counter() - t0
    return report


def run_nilpotent_suite(cfg: SuiteConfig | None = None) -> VerificationReport:
    """Random nilpotent contractions against the Jordan cell.

    Checks ``w_2(T^m) <= es_omega(n, m)`` and
    ``w_rho(p(T)) <= w_rho(p(S_n*))`` for ``rho in {1, 1.5, 2}`` and a random
    polynomial ``p`` of degree at most ``n - 1``.
    """
    return _run("nilpotent", cfg, _nilpotent_trial, _nilpotent_eval)


# --------------------------------------------------------------------------
# positive section kernels


def section_kernel_min(T, weights, n_lambda: int = 256) -> float:
    """``min_lambda lambda_min(R_lambda(T*, T))`` on ``n_lambda`` points of the circle.

    ``R_lambda = I + sum_k (lambda^k T*^k + conj(lambda)^k T^k) / rho_k``
    for ``1 <= k <= n - 1``, with ``weights = (rho_1, ..., rho_{n-1})``.
    """
    T = np.asarray(T, dtype=complex)
    d = T.shape[0]
    lam = np.exp(2j * math.pi * np.arange(n_lambda) / n_lambda)
    R = np.broadcast_to(np.eye(d, dtype=complex), (n_lambda, d, d)).copy()
    P = np.eye(d, dtype=complex)
    for k, rk in enumerate(weights, start=1):
        P = P @ T
        X = (np.conj(lam) ** k)[:, None, None] * (P / rk)[None]
        R += X + np.conj(np.swapaxes(X, 1, 2))
    return float(np.linalg.eigvalsh(R)[:, 0].min())


_NU: dict[str, Callable[[np.ndarray], float]] = {
    "norm": operator_norm,
    "w2": lambda A: numerical_radius(A).value,
    "diam": diam_numerical_range,
}


@functools.lru_cache(maxsize=None)
def _jordan_nu(name: str, n: int, m: int, l: int | None) -> float:
    J = jordan_cell(n).matrix
    A = np.linalg.matrix_power(J, m)
    if l is not None:
        A = A + np.linalg.matrix_power(J, l)
    return _NU[name](A)


def sections_margins(T, n: int, weights, pair: tuple[int, int] | None) -> dict:
    """Margins for an operator whose section kernels of order ``n`` are positive.

    ``hypothesis``: smallest eigenvalue of ``R_lambda`` on the grid.
    ``es_power``: ``min_m rho_m cos(pi/([(n-1)/m]+2)) - w_2(T^m)``.
    ``<nu>_power``: ``min_m rho_m nu(S_n*^m) - nu(T^m)``.
    ``<nu>_pair``: ``rho_m nu(S_n*^m + S_n*^l) - nu(T^m + T^l)`` when
    ``rho_m = rho_l``.
    """
    T = np.asarray(T, dtype=complex)
    rho = (1.0,) + tuple(float(w) for w in weights)
    out = {"hypothesis": section_kernel_min(T, weights)}
    powers = [np.eye(T.shape[0], dtype=complex)]
    for _ in range(1, n):
        powers.append(powers[-1] @ T)
    out["es_power"] = min(rho[m] * es_omega(n, m) - numerical_radius(powers[m]).value for m in range(1, n))
    for name, nu in _NU.items():
        out[f"{name}_power"] = min(rho[m] * _jordan_nu(name, n, m, None) - nu(powers[m]) for m in range(1, n))
    if pair is not None:
        m, l = pair
        if not math.isclose(rho[m], rho[l], rel_tol=1e-12):
            raise ValidationError("the pair bound needs rho_m = rho_l")
        for name, nu in _NU.items():
            out[f"{name}_pair"] = rho[m] * _jordan_nu(name, n, min(m, l), max(m, l)) - nu(powers[m] + powers[l])
    return out


def _compressed_jordan(rng: np.random.Generator, n: int) -> np.ndarray:
    # S_n* (+) S_n* compressed to the span of N*-orbits of random vectors;
    # that span is N*-invariant, so powers of the compression compress powers
    N = np.kron(np.eye(2), jordan_cell(n).matrix)
    r = int(rng.integers(1, 3))
    X = rng.standard_normal((2 * n, r)) + 1j * rng.standard_normal((2 * n, r))
    K = np.hstack([np.linalg.matrix_power(N.conj().T, j) @ X for j in range(n)])
    U, s, _ = np.linalg.svd(K, full_matrices=False)
    V = U[:, s > 1e-10 * s[0]]
    return V.conj().T @ N @ V


def _sections_trial(cfg: SuiteConfig, i: int):
    rng = cfg.rng(i)
    lo, hi = cfg.n_range
    n = int(rng.integers(max(lo, 2), max(hi, 2) + 1))
    kind = ("nilpotent", "compressed", "weighted")[i % 3]
    if kind == "nilpotent":
        T, weights = random_nilpotent(rng, n), [1.0] * (n - 1)
    elif kind == "compressed":
        T, weights = _compressed_jordan(rng, n), [1.0] * (n - 1)
    else:
        c = float(rng.uniform(0.5, 1.0))
        T = c * random_nilpotent(rng, n)
        weights = [c**k for k in range(1, n)]
    pair = None
    if kind != "weighted":
        m, l = rng.choice(n, size=2, replace=False)
        pair = [int(m), int(l)]
    return {"kind": kind, "n": n, "T": matrix_to_json(T), "weights": weights, "pair": pair}


def _sections_eval(cfg: SuiteConfig, inputs: dict):
    T = matrix_from_json(inputs["T"])
    pair = tuple(inputs["pair"]) if inputs["pair"] is not None else None
    margins = sections_margins(T, inputs["n"], inputs["weights"], pair)
    tols = {k: cfg.tolerances["bound"] for k in margins}
    tols["hypothesis"] = cfg.tolerances["hypothesis"]
    return margins, tols


def run_kernel_sections_suite(cfg: SuiteConfig | None = None) -> VerificationReport:
    """Operators with positive section kernels against ``S_n*``.

    Trials cycle through random nilpotent contractions, compressions of
    ``S_n* (+) S_n*`` to random co-invariant subspaces and scaled nilpotent
    contractions ``c N`` with weights ``rho_k = c^k``.
    """
    return _run("sections", cfg, _sections_trial, _sections_eval)


# --------------------------------------------------------------------------
# epsilonized nilpotency


def epsilonized_margins(n: int, m: int, c: float) -> dict:
    """Margins of the three bounds for ``T = c S_m*`` with ``eps = ||T^n||``."""
    T = c * jordan_cell(m).matrix
    eps = c**n if n < m else 0.0
    w = numerical_radius(T).value
    return {
        "eps_fejer": eps_fejer_bound(n, eps) - w,
        "herrero_chain": hh_bound(n) + herrero_delta(n, eps) - w,
        "combined": combined_bound(n, m, eps) - w,
    }


def _epsilonized_trial(cfg: SuiteConfig, i: int):
    rng = cfg.rng(i)
    lo, hi = cfg.n_range
    n = int(rng.integers(max(lo, 2), max(hi, 2) + 1))
    if i % 10 == 0:
        m, c = n, 1.0
    else:
        m = n + int(rng.integers(1, 7))
        c = float(rng.uniform(0.05, 1.0))
    return {"n": n, "m": m, "c": c}


def _epsilonized_eval(cfg: SuiteConfig, inputs: dict):
    margins = epsilonized_margins(inputs["n"], inputs["m"], inputs["c"])
    return margins, {k: cfg.tolerances["bound"] for k in margins}


def run_epsilonized_suite(cfg: SuiteConfig | None = None) -> VerificationReport:
    """Scaled Jordan cells ``T = c S_m*`` against the epsilonized bounds."""
    return _run("epsilonized", cfg, _epsilonized_trial, _epsilonized_eval)


# --------------------------------------------------------------------------
# positive trigonometric polynomials


def _autocorrelations(Q: np.ndarray) -> np.ndarray:
    # rows of Q are analytic coefficient vectors; returns c_0..c_{n-1}
    n = Q.shape[1]
    return np.stack([np.einsum("ij,ij->i", Q[:, k:], np.conj(Q[:, : n - k])) for k in range(n)], axis=1)


def _trig_trial_margins(c: np.ndarray, n: int) -> dict:
    """Vectorized classical and two-coefficient margins for rows ``c_0..c_{n-1}``."""
    c0 = c[:, 0].real
    a = np.abs(c)
    classical = np.min(c0[:, None] * np.array([es_omega(n, k) for k in range(1, n)])[None] - a[:, 1:], axis=1)
    sharp = np.full(c.shape[0], np.inf)
    chain = np.full(c.shape[0], np.inf)
    for k in range(n):
        for l in range(k + 1, n):
            lhs = a[:, k] + a[:, l]
            s = c0 * two_power_radius(n, k, l)
            sharp = np.minimum(sharp, s - lhs)
            chain = np.minimum(chain, c0 * two_coeff_closed(n, k, l) - s)
    return {"classical": classical, "two_coeff_sharp": sharp, "two_coeff_chain": chain}


def _trig_margins_scalar(P: TrigPoly, n: int) -> dict:
    rep = check_classical_bounds(P, n)
    sharp, chain = math.inf, math.inf
    for k in range(n):
        for l in range(k + 1, n):
            r = check_two_coeff(P, k, l, n)
            sharp = min(sharp, r.sharp - r.lhs)
            chain = min(chain, r.closed - r.sharp)
    return {"classical": min(rep.margins), "two_coeff_sharp": sharp, "two_coeff_chain": chain}


def run_trig_suite(cfg: SuiteConfig | None = None) -> VerificationReport:
    """Random ``|Q|^2`` against the classical and two-coefficient bounds.

    For each ``n`` in ``n_range`` (clipped to ``n >= 2``) there are
    ``trials`` polynomials of degree ``n - 1``; polynomial ``j`` overall uses
    ``random_positive(n, seed ^ j)``.  Tolerances scale with ``c_0``.
    """
    cfg = (cfg or SuiteConfig()).resolved("trig")
    t0 = time.perf_counter()
    report = VerificationReport("trig", _config_dict(cfg))
    lo, hi = cfg.n_range
    tb = cfg.tolerances["bound"]
    idx = 0
    for n in range(max(lo, 2), hi + 1):
        Q = np.stack([random_analytic(n, int(cfg.seed) ^ (idx + j)) for j in range(cfg.trials)])
        c = _autocorrelations(Q)
        margins = _trig_trial_margins(c, n)
        tols = tb * np.maximum(c[:, 0].real, 1.0)
        for check, m in margins.items():
            report.margins.setdefault(check, []).extend(float(x) for x in m)
            for j in np.flatnonzero(m < -tols):
                P = TrigPoly(np.concatenate([np.conj(c[j, :0:-1]), c[j]]))
                report.violations.append(
                    {
                        "trial": idx + int(j),
                        "check": check,
                        "margin": float(m[j]),
                        "tol": float(tols[j]),
                        "inputs": {"n": n, "P": trigpoly_to_json(P)},
                    }
                )
        idx += cfg.trials
    report.n_trials = idx
    report.wall_clock = time.perf_counter() - t0
    return report


def _trig_eval(cfg: SuiteConfig, inputs: dict):
    P = trigpoly_from_json(inputs["P"])
    margins = _trig_margins_scalar(P, inputs["n"])
    tol = cfg.tolerances["bound"] * max(P.c0, 1.0)
    return margins, {k: tol for k in margins}


# --------------------------------------------------------------------------
# rational functions


def _rational_trial(cfg: SuiteConfig, i: int):
    rng = cfg.rng(i)
    lo, hi = cfg.n_range
    F = random_model_space_function(rng, max_poles=max(hi, 1))
    d = (F.den.size - 1) // 2
    return {"F": rational_to_json(F), "k_max": 2 * d + 2}


def _rational_eval(cfg: SuiteConfig, inputs: dict):
    F = rational_from_json(inputs["F"])
    rep = check_rational_bound(F, inputs["k_max"])
    return {"coefficient": min(rep.margins)}, {"coefficient": cfg.tolerances["bound"] * max(rep.c0, 1.0)}


def run_rational_suite(cfg: SuiteConfig | None = None) -> VerificationReport:
    """``|h|^2`` for random ``h`` in model spaces against ``|c_k| <= c_0 w_2(R^k)``.

    ``n_range[1]`` is the largest number of poles; coefficients are checked
    up to ``k = 2 d + 2`` for ``d`` poles.
    """
    return _run("rational", cfg, _rational_trial, _rational_eval)


# --------------------------------------------------------------------------
# constants


def _ando_nishio(b: float, rho: float) -> float:
    s = b * b / 4.0 + 1.0
    return (math.sqrt(s) + math.sqrt(s + rho * (rho - 2.0))) / rho


def _constant_rows() -> list[tuple[str, float, Callable[[], float], float]]:
    rows = []
    for n in range(2, 13):
        rows.append((f"w2(S_{n}*)", math.cos(math.pi / (n + 1)), functools.partial(_jordan_power_radius, n, 1), 1e-8))
    for n in range(3, 13):
        for m in range(2, n):
            rows.append((f"w2(S_{n}*^{m})", es_omega(n, m), functools.partial(_jordan_power_radius, n, m), 1e-8))
    B = bergman_cell(3).matrix
    rows.append(("w2(B_3*)", math.sqrt(7.0 / 24.0), lambda: numerical_radius(B, tol=1e-12).value, 1e-8))
    rows.append(("w2(B_3*^2)", math.sqrt(1.0 / 12.0), lambda: numerical_radius(B @ B, tol=1e-12).value, 1e-8))
    for b in (0.5, 1.0, 2.0):
        A = np.array([[1.0, b], [0.0, -1.0]])
        for rho in (1.0, 1.5, 2.0, 3.0):
            rows.append(
                (
                    f"w_{rho:g}([[1,{b:g}],[0,-1]])",
                    _ando_nishio(b, rho),
                    functools.partial(lambda A, rho: omega_rho(A, rho, tol=1e-7).value, A, rho),
                    1e-4,
                )
            )

    def compressed():
        T = np.array([[1.0, 1.0], [0.0, -1.0]])
        e = numerical_radius(T, tol=1e-12).vector
        return omega_rho(np.array([[np.vdot(e, T @ e)]]), 3.0, tol=1e-9).value

    rows.append(("w_3(V*TV), b=1", math.sqrt(1.25), compressed, 1e-6))
    J9 = jordan_cell(9).matrix
    rows.append(
        (
            "w2(S_9*^3 + S_9*^7)",
            math.cos(math.pi / 10.0),
            lambda: numerical_radius(np.linalg.matrix_power(J9, 3) + np.linalg.matrix_power(J9, 7), tol=1e-12).value,
            1e-6,
        )
    )
    for n in range(4, 11):
        rows.append((f"two_coeff_closed({n},1,{n - 1})", math.sqrt(1.5), functools.partial(two_coeff_closed, n, 1, n - 1), 1e-12))
    for n in range(2, 11):
        rows.append((f"eps_fejer_bound({n},0)", hh_bound(n), functools.partial(eps_fejer_bound, n, 0.0), 0.0))
    rows.append(("herrero_delta(2,0.02)", 0.2, functools.partial(herrero_delta, 2, 0.02), 1e-12))
    rows.append(("herrero_delta(3,1e-4)", math.sqrt(1e-4 + 4e-2), functools.partial(herrero_delta, 3, 1e-4), 1e-12))
    F = single_pole_function(0.5)
    rows.append(("c_0 of |1/(1-z/2)|^2", 4.0 / 3.0, lambda: float(fourier_coeffs(F, 1)[1].real), 1e-10))
    rows.append(("c_1 of |1/(1-z/2)|^2", 2.0 / 3.0, lambda: float(fourier_coeffs(F, 1)[2].real), 1e-10))
    return rows


def reproduce_constants() -> VerificationReport:
    """Closed-form constants against their computed counterparts."""
    t0 = time.perf_counter()
    report = VerificationReport("constants", {})
    for name, expected, fn, tol in _constant_rows():
        computed = float(fn())
        diff = abs(computed - expected)
        report.constants.append(
            {"name": name, "expected": expected, "computed": computed, "diff": diff, "tol": tol, "ok": diff <= tol}
        )
    report.wall_clock = time.perf_counter() - t0
    return report


# --------------------------------------------------------------------------

SUITES: dict[str, Callable[[SuiteConfig | None], VerificationReport]] = {
    "nilpotent": run_nilpotent_suite,
    "sections": run_kernel_sections_suite,
    "epsilonized": run_epsilonized_suite,
    "trig": run_trig_suite,
    "rational": run_rational_suite,
}

_EVAL = {
    "nilpotent": _nilpotent_eval,
    "sections": _sections_eval,
    "epsilonized": _epsilonized_eval,
    "trig": _trig_eval,
    "rational": _rational_eval,
}


def run_all(cfg: SuiteConfig | None = None) -> list[VerificationReport]:
    """Every randomized suite followed by the constants table."""
    return [run(cfg) for run in SUITES.values()] + [reproduce_constants()]


def replay(suite: str, violation: dict, cfg: SuiteConfig | None = None) -> float:
    """Recompute the margin of a recorded violation from its inputs."""
    if suite not in _EVAL:
        raise ValidationError(f"unknown suite {suite!r}")
    cfg = (cfg or SuiteConfig()).resolved(suite)
    margins, _ = _EVAL[suite](cfg, violation["inputs"])
    return float(margins[violation["check"]])
