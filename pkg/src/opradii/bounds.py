"""Closed-form constants of the constrained inequalities."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass

import numpy as np

from .errors import ValidationError

__all__ = [
    "floor_part",
    "hh_bound",
    "es_omega",
    "two_coeff_closed",
    "interp_inf_sup",
    "interp_bound",
    "eps_fejer_bound",
    "eps_fejer_bound_coarse",
    "herrero_delta",
    "combined_bound",
    "BoundRow",
    "bound_table",
    "bound_table_csv",
]


def floor_part(x: float) -> int:
    """Integer part of a nonnegative number."""
    if x < 0:
        raise ValidationError(f"integer part is only used for nonnegative arguments, got {x}")
    return math.floor(x)


def hh_bound(n: int) -> float:
    """``cos(pi/(n+1))``: numerical radius bound for contractions with ``T^n = 0``."""
    if n < 2:
        raise ValidationError("hh_bound needs n >= 2")
    return math.cos(math.pi / (n + 1))


def es_omega(n: int, p: int) -> float:
    """Numerical radius of the ``p``-th power of the ``n x n`` Jordan cell.

    ``cos(pi / ([(n-1)/p] + 2))`` for ``1 <= p <= n-1`` and ``0`` for
    ``p > n-1`` (the power vanishes).
    """
    if n < 1 or p < 1:
        raise ValidationError(f"es_omega needs n >= 1 and p >= 1, got n={n}, p={p}")
    if p > n - 1:
        return 0.0
    return math.cos(math.pi / (floor_part((n - 1) / p) + 2))


def two_coeff_closed(n: int, k: int, l: int) -> float:
    """Closed bound on ``(|c_k| + |c_l|) / c_0`` for degree ``n-1`` positive trig polynomials."""
    if k == l:
        raise ValidationError("k and l must be distinct")
    if not (0 <= k < n and 0 <= l < n):
        raise ValidationError(f"k and l must lie in 0..{n - 1}")
    return math.sqrt(1.0 + es_omega(n, k + l)) * math.sqrt(1.0 + es_omega(n, abs(k - l)))


def interp_inf_sup(p, n: int, n_theta: int = 1024) -> float:
    """``inf_theta max{|p(zeta)| : zeta^(2n-1) = e^{i theta}}`` on a theta grid."""
    c = np.atleast_1d(np.asarray(p, dtype=complex))
    m = 2 * n - 1
    theta = 2.0 * math.pi * np.arange(n_theta) / n_theta
    j = np.arange(m)
    zeta = np.exp(1j * (theta[:, None] + 2.0 * math.pi * j[None, :]) / m)
    vals = np.abs(np.polyval(c[::-1], zeta))
    return float(vals.max(axis=1).min())


def interp_bound(rho: float, p, n: int, n_grid: int = 4096, n_theta: int = 1024) -> float:
    """Interpolated bound on ``w_rho(p(T))`` for contractions with ``T^n = 0``.

    With ``M = ||p||_inf`` and ``m`` the inf-sup over the ``(2n-1)``-th roots
    of ``e^{i theta}``:

    * ``rho in (0, 1]``: ``(2/rho - 1) M^rho m^(1-rho)``
    * ``rho in [1, 2]``: ``M^(2-rho) m^(rho-1)``
    """
    if not 0 < rho <= 2:
        raise ValidationError("interp_bound needs rho in (0, 2]")
    if n < 2:
        raise ValidationError("interp_bound needs n >= 2")
    c = np.atleast_1d(np.asarray(p, dtype=complex))
    z = np.exp(2j * math.pi * np.arange(n_grid) / n_grid)
    sup = float(np.abs(np.polyval(c[::-1], z)).max())
    infsup = interp_inf_sup(c, n, n_theta)
    if rho <= 1.0:
        return (2.0 / rho - 1.0) * sup**rho * infsup ** (1.0 - rho)
    return sup ** (2.0 - rho) * infsup ** (rho - 1.0)


def eps_fejer_bound(n: int, eps: float) -> float:
    """Bound on ``|c_1|`` when ``c_0 = 1`` and ``|c_k| <= eps`` for ``k >= n``."""
    if n < 2:
        raise ValidationError("eps_fejer_bound needs n >= 2")
    if eps < 0:
        raise ValidationError("eps must be nonnegative")
    base = math.cos(math.pi / (n + 1))
    if eps == 0:
        return base
    k = 3.0 * (math.pi * math.cos(math.pi / (2 * (n + 1))) ** 4) ** (1.0 / 3.0)
    return base + k * (eps / (n + 1)) ** (2.0 / 3.0)


def eps_fejer_bound_coarse(n: int, eps: float) -> float:
    """The simplified form ``cos(pi/(n+1)) + 3 pi^(1/3) (eps/(n+1))^(2/3)``."""
    if n < 2 or eps < 0:
        raise ValidationError("needs n >= 2 and eps >= 0")
    return math.cos(math.pi / (n + 1)) + 3.0 * math.pi ** (1.0 / 3.0) * (eps / (n + 1)) ** (2.0 / 3.0)


def herrero_delta(n: int, eps: float) -> float:
    """Distance bound to a nilpotent of order ``n`` given ``||T^n|| <= eps``.

    ``delta_2(e) = sqrt(2 e)`` and
    ``delta_k(e) = sqrt(e + delta_{k-1}((k-1) sqrt(e))^2)``.
    """
    if n < 2:
        raise ValidationError("herrero_delta needs n >= 2")
    if eps < 0:
        raise ValidationError("eps must be nonnegative")
    if n == 2:
        return math.sqrt(2.0 * eps)
    return math.sqrt(eps + herrero_delta(n - 1, (n - 1) * math.sqrt(eps)) ** 2)


def combined_bound(n: int, m: int, eps: float) -> float:
    """``min(cos(pi/(m+1)), eps_fejer_bound(n, eps))`` for ``||T^n|| <= eps``, ``T^m = 0``."""
    if m < n:
        raise ValidationError("combined_bound needs m >= n")
    return min(math.cos(math.pi / (m + 1)), eps_fejer_bound(n, eps))


@dataclass(frozen=True)
class BoundRow:
    name: str
    n: int | None = None
    k: int | None = None
    l: int | None = None
    rho: float | None = None
    epsilon: float | None = None
    value: float = 0.0


def bound_table(n: int, epsilons=(0.0, 1e-4, 1e-2)) -> list[BoundRow]:
    """Every closed-form constant for a given ``n``."""
    if n < 2:
        raise ValidationError("bound_table needs n >= 2")
    rows = [BoundRow("hh_bound", n=n, value=hh_bound(n))]
    rows += [BoundRow("es_omega", n=n, k=p, value=es_omega(n, p)) for p in range(1, n)]
    rows += [
        BoundRow("two_coeff_closed", n=n, k=k, l=l, value=two_coeff_closed(n, k, l))
        for k in range(n)
        for l in range(k + 1, n)
    ]
    for eps in epsilons:
        rows.append(BoundRow("eps_fejer_bound", n=n, epsilon=eps, value=eps_fejer_bound(n, eps)))
        rows.append(BoundRow("herrero_delta", n=n, epsilon=eps, value=herrero_delta(n, eps)))
    return rows


def bound_table_csv(rows: list[BoundRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["name", "n", "k", "l", "rho", "epsilon", "value"])
    for r in rows:
        w.writerow(["" if v is None else v for v in (r.name, r.n, r.k, r.l, r.rho, r.epsilon)] + [repr(r.value)])
    return buf.getvalue()
