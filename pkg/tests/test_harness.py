import json
import math

import numpy as np
import pytest

from opradii.bounds import eps_fejer_bound, es_omega, herrero_delta, hh_bound
from opradii.errors import ValidationError
from opradii.harness import (
    SUITES,
    SuiteConfig,
    epsilonized_margins,
    nilpotent_margins,
    random_nilpotent,
    replay,
    reproduce_constants,
    run_epsilonized_suite,
    run_nilpotent_suite,
    run_rational_suite,
    run_trig_suite,
    section_kernel_min,
    sections_margins,
)
from opradii.linalg import operator_norm
from opradii.models import jordan_cell

SMALL = {
    "nilpotent": SuiteConfig(seed=3, trials=4, n_range=(2, 4)),
    "sections": SuiteConfig(seed=3, trials=6, n_range=(2, 4)),
    "epsilonized": SuiteConfig(seed=3, trials=20),
    "trig": SuiteConfig(seed=3, trials=50, n_range=(2, 5)),
    "rational": SuiteConfig(seed=3, trials=10),
}


def strip_clock(report):
    d = report.to_dict()
    d.pop("wall_clock")
    return d


def test_config_validation():
    with pytest.raises(ValidationError):
        SuiteConfig(seed=-1)
    with pytest.raises(ValidationError):
        SuiteConfig(seed=2**64)
    with pytest.raises(ValidationError):
        SuiteConfig(trials=0)
    with pytest.raises(ValidationError):
        SuiteConfig(n_range=(5, 2))
    with pytest.raises(ValidationError):
        SuiteConfig(tolerances={"bogus": 1.0})
    cfg = SuiteConfig(seed=2**64 - 1).resolved("trig")
    assert cfg.trials == 10_000 and cfg.n_range == (2, 10)
    assert cfg.tolerances["bound"] == 1e-8


@pytest.mark.parametrize("suite", sorted(SUITES))
def test_suites_deterministic_and_clean(suite):
    a = SUITES[suite](SMALL[suite])
    b = SUITES[suite](SMALL[suite])
    assert strip_clock(a) == strip_clock(b)
    assert a.ok, a.violations
    assert a.n_trials > 0
    d = json.loads(a.to_json())
    assert {"suite", "config", "n_trials", "min_margins", "margins", "violations", "constants", "wall_clock"} <= set(d)
    assert "margins" not in a.to_dict(include_margins=False)


def test_different_seeds_differ():
    a = run_nilpotent_suite(SuiteConfig(seed=1, trials=2, n_range=(3, 3)))
    b = run_nilpotent_suite(SuiteConfig(seed=2, trials=2, n_range=(3, 3)))
    assert a.margins != b.margins


@pytest.mark.parametrize("suite", sorted(SUITES))
def test_forced_violation_replays(suite):
    cfg = SuiteConfig(seed=5, trials=SMALL[suite].trials, n_range=SMALL[suite].n_range, tolerances={"bound": -10.0})
    if suite == "trig":
        cfg = SuiteConfig(seed=5, trials=3, n_range=(2, 4), tolerances={"bound": -10.0})
    report = SUITES[suite](cfg)
    assert not report.ok and report.violations
    for v in report.violations[:6]:
        json.dumps(v)  # serializable inputs
        assert replay(suite, v, cfg) == pytest.approx(v["margin"], abs=1e-12)


def test_random_nilpotent():
    rng = np.random.default_rng(0)
    for n in range(2, 9):
        T = random_nilpotent(rng, n)
        assert operator_norm(T) == pytest.approx(0.999)
        assert np.allclose(np.linalg.matrix_power(T, n), 0)


@pytest.mark.parametrize("n", [2, 3, 5])
def test_nilpotent_margins_on_jordan_cell(n):
    p = np.arange(1, n + 1) * (1 - 0.5j)
    m = nilpotent_margins(jordan_cell(n).matrix, p)
    assert abs(m["power_radius"]) < 1e-9
    for rho in ("1", "1.5", "2"):
        assert m[f"omega_rho_{rho}"] == 0.0


def test_nilpotent_margins_on_zero():
    n = 4
    m = nilpotent_margins(np.zeros((n, n)), [0.0, 1.0])
    assert m["power_radius"] == pytest.approx(min(es_omega(n, k) for k in range(1, n)))
    assert m["omega_rho_2"] == pytest.approx(es_omega(n, 1), abs=1e-8)


@pytest.mark.parametrize("n", [2, 3, 4, 6])
def test_sections_on_jordan_cell(n):
    S = jordan_cell(n).matrix
    assert abs(section_kernel_min(S, [1.0] * (n - 1))) < 1e-10
    m = sections_margins(S, n, [1.0] * (n - 1), (0, n - 1) if n > 1 else None)
    for k, v in m.items():
        assert abs(v) < 1e-8, k


def test_sections_weighted_family():
    n, c = 4, 0.7
    m = sections_margins(c * jordan_cell(n).matrix, n, [c**k for k in range(1, n)], None)
    assert abs(m["hypothesis"]) < 1e-10
    assert abs(m["norm_power"]) < 1e-10 and abs(m["es_power"]) < 1e-8


def test_sections_on_zero():
    n = 4
    m = sections_margins(np.zeros((n, n)), n, [1.0] * (n - 1), (1, 3))
    assert m["hypothesis"] == pytest.approx(1.0)
    assert m["norm_pair"] == pytest.approx(operator_norm(np.linalg.matrix_power(jordan_cell(4).matrix, 1) + np.linalg.matrix_power(jordan_cell(4).matrix, 3)))
    with pytest.raises(ValidationError):
        sections_margins(np.zeros((n, n)), n, [1.0, 0.5, 1.0], (1, 2))


def test_epsilonized_examples():
    m = epsilonized_margins(3, 6, 0.9)
    assert all(v >= 0 for v in m.values())
    w = 0.9 * math.cos(math.pi / 7)
    assert m["eps_fejer"] == pytest.approx(eps_fejer_bound(3, 0.729) - w, abs=1e-8)
    m = epsilonized_margins(4, 4, 1.0)
    assert m["eps_fejer"] == pytest.approx(0.0, abs=1e-9)
    # for small eps the Fejer bound is sharper than the Herrero chain
    for n in range(2, 8):
        for eps in (1e-3, 1e-6, 1e-9):
            assert eps_fejer_bound(n, eps) < hh_bound(n) + herrero_delta(n, eps)


def test_trig_vectorized_matches_scalar():
    cfg = SuiteConfig(seed=9, trials=3, n_range=(2, 6), tolerances={"bound": -10.0})
    report = run_trig_suite(cfg)
    for v in report.violations:
        assert replay("trig", v, cfg) == pytest.approx(v["margin"], abs=1e-12)


def test_reproduce_constants():
    report = reproduce_constants()
    assert report.ok, [r for r in report.constants if not r["ok"]]
    names = {r["name"] for r in report.constants}
    assert {"w2(B_3*)", "w2(S_9*^3 + S_9*^7)", "w_3(V*TV), b=1"} <= names


def test_replay_unknown_suite():
    with pytest.raises(ValidationError):
        replay("nope", {"inputs": {}, "check": "x"})


def test_epsilonized_and_rational_defaults_quick():
    assert run_epsilonized_suite(SuiteConfig(seed=0, trials=50)).ok
    assert run_rational_suite(SuiteConfig(seed=0, trials=30)).ok
