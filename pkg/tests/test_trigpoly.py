import json
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from opradii.bounds import es_omega, two_coeff_closed
from opradii.errors import FactorizationError, ValidationError
from opradii.trigpoly import (
    TrigPoly,
    certify_positive,
    check_classical_bounds,
    check_two_coeff,
    extremal_witness,
    fejer_riesz,
    from_analytic,
    load_trigpoly,
    random_analytic,
    random_positive,
    trigpoly_from_json,
    trigpoly_to_json,
    two_power_radius,
)
from oracles import brute_autocorrelation, random_complex


def fejer_vector(n):
    q = np.sin((np.arange(n) + 1) * np.pi / (n + 1))
    return q / np.linalg.norm(q)


def shifted(P, shift):
    c = P.coeffs.copy()
    c[P.degree] += shift
    return TrigPoly(c)


# construction


def test_trigpoly_validation():
    with pytest.raises(ValidationError):
        TrigPoly([1.0, 2.0])
    with pytest.raises(ValidationError):
        TrigPoly([1.0, 2.0, 3.0])  # c_{-1} != conj(c_1)
    with pytest.raises(ValidationError):
        TrigPoly([np.nan])
    P = TrigPoly.from_nonnegative([2.0, 1 + 1j])
    np.testing.assert_allclose(P.coeffs, [1 - 1j, 2, 1 + 1j])
    assert P.degree == 1 and P.c0 == 2.0 and P.c(-1) == 1 - 1j and P.c(5) == 0


def test_evaluation_is_real():
    P = random_positive(6, 3)
    t = np.linspace(0, 2 * np.pi, 17)
    v = P(t)
    direct = sum(P.c(k) * np.exp(1j * k * t) for k in range(-5, 6))
    np.testing.assert_allclose(v, direct.real, atol=1e-12)
    assert np.max(np.abs(direct.imag)) < 1e-12


def test_from_analytic_examples():
    np.testing.assert_allclose(from_analytic([1.0]).coeffs, [1.0])
    np.testing.assert_allclose(from_analytic([1.0, 1.0]).coeffs, [1, 2, 1])
    with pytest.raises(ValidationError):
        from_analytic([0.0, 0.0])


@pytest.mark.parametrize("n", range(2, 13))
def test_fejer_vector_ratio(n):
    c = brute_autocorrelation(fejer_vector(n))
    assert abs(c[n]) / c[n - 1].real == pytest.approx(math.cos(math.pi / (n + 1)), abs=1e-12)
    P = from_analytic(fejer_vector(n))
    assert abs(P.c(1)) / P.c0 == pytest.approx(math.cos(math.pi / (n + 1)), abs=1e-12)


def test_from_analytic_matches_oracle(rng):
    for _ in range(50):
        q = random_complex(rng, int(rng.integers(1, 12)))
        P = from_analytic(q)
        np.testing.assert_allclose(P.coeffs, brute_autocorrelation(q), atol=1e-12)
        assert P.c0 == pytest.approx(np.sum(np.abs(q) ** 2))
        t = 2 * np.pi * np.arange(4096) / 4096
        assert P(t).min() >= -1e-12 * P.c0


# positivity


def test_certify_positive_examples():
    cert = certify_positive(TrigPoly([1.0]))
    assert cert.status == "positive" and cert.min_value == pytest.approx(1.0)
    cert = certify_positive(TrigPoly([1.0, 2.0, 1.0]))
    assert cert.status == "inconclusive"
    assert abs(cert.min_value) < 1e-6
    cert = certify_positive(TrigPoly.from_nonnegative([1.0, 0.6]))
    assert cert.status == "violated"
    assert cert.min_value == pytest.approx(-0.2, abs=1e-6)
    assert TrigPoly.from_nonnegative([1.0, 0.6])(cert.min_point) == pytest.approx(cert.min_value)
    with pytest.raises(ValidationError):
        certify_positive(TrigPoly([1.0]), tol=0.0)


def test_random_positive_never_violated():
    for seed in range(200):
        P = random_positive(int(seed % 9) + 1, seed)
        cert = certify_positive(P)
        assert cert.status in ("positive", "inconclusive")
        assert cert.min_value >= -1e-12 * P.c0


def test_random_positive_deterministic():
    np.testing.assert_array_equal(random_positive(7, 11).coeffs, random_positive(7, 11).coeffs)
    assert not np.array_equal(random_analytic(7, 11), random_analytic(7, 12))
    assert random_positive(7, 11).degree == 6


# factorization


def test_fejer_riesz_examples():
    with pytest.raises(FactorizationError):
        fejer_riesz(TrigPoly([1.0, 2.0, 1.0]))
    P = TrigPoly.from_nonnegative([1.0, 0.4])
    q = fejer_riesz(P)
    assert np.max(np.abs(from_analytic(q).coeffs - P.coeffs)) <= 1e-8
    # the kept factor has its root outside the disc (inside-root convention of the Laurent lift)
    P = TrigPoly([3.0])
    np.testing.assert_allclose(np.abs(fejer_riesz(P)), [math.sqrt(3.0)])


def test_fejer_riesz_round_trip_1000():
    rng = np.random.default_rng(2024)
    worst = 0.0
    for i in range(1000):
        n = int(rng.integers(1, 11))
        P = from_analytic(random_complex(rng, n))
        # shift relative to sup|P| so the Bernstein margin certifies strict positivity
        sup = np.abs(P(np.linspace(0, 2 * np.pi, 512))).max()
        P = shifted(P, 0.05 * sup)
        q = fejer_riesz(P)
        err = np.max(np.abs(from_analytic(q).coeffs - P.coeffs)) / P.c0
        worst = max(worst, err)
    assert worst <= 1e-8


def test_fejer_riesz_rejects_violated():
    with pytest.raises(FactorizationError):
        fejer_riesz(TrigPoly.from_nonnegative([1.0, 0.6]))


# coefficient bounds


@pytest.mark.parametrize("n", range(2, 11))
def test_classical_bounds_random(n):
    for seed in range(300):
        rep = check_classical_bounds(random_positive(n, seed))
        assert rep.ok, (n, seed, min(rep.margins))


def test_classical_bounds_examples():
    rep = check_classical_bounds(from_analytic(fejer_vector(4)))
    assert rep.margins[0] == pytest.approx(0.0, abs=1e-12)
    assert rep.bounds[0] == pytest.approx(0.8090170, abs=1e-7)
    rep = check_classical_bounds(TrigPoly([2.0]), n=5)
    np.testing.assert_allclose(rep.margins, [2 * es_omega(5, k) for k in range(1, 5)])
    with pytest.raises(ValidationError):
        check_classical_bounds(random_positive(5, 0), n=3)


def test_two_coeff_examples():
    for n in range(4, 9):
        rep = check_two_coeff(random_positive(n, n), 1, n - 1)
        assert rep.closed == pytest.approx(rep.sharp / two_power_radius(n, 1, n - 1) * math.sqrt(1.5))
        assert rep.ok
    assert two_power_radius(9, 3, 7) == pytest.approx(math.cos(math.pi / 10), abs=1e-10)
    rep = check_two_coeff(TrigPoly([1.0]), 1, 2, n=4)
    assert rep.lhs == 0.0 and rep.ok
    with pytest.raises(ValidationError):
        check_two_coeff(TrigPoly([1.0]), 2, 2, n=4)


def test_two_power_radius_gamma_invariant():
    from opradii.models import jordan_cell
    from opradii.radii import numerical_radius

    J = jordan_cell(6).matrix
    for g in (0.3, 1.7, -2.5):
        A = np.linalg.matrix_power(J, 1) + np.exp(1j * g) * np.linalg.matrix_power(J, 4)
        assert numerical_radius(A, tol=1e-12).value == pytest.approx(two_power_radius(6, 1, 4, g), abs=1e-10)


@pytest.mark.parametrize("n", range(2, 9))
def test_two_coeff_random(n):
    for seed in range(60):
        P = random_positive(n, seed)
        for k in range(n):
            for l in range(k + 1, n):
                rep = check_two_coeff(P, k, l)
                assert rep.ok, (n, k, l, seed)
                assert rep.closed <= P.c0 * two_coeff_closed(n, k, l) + 1e-15


@pytest.mark.parametrize("n,k,expected", [(4, 1, math.cos(math.pi / 5)), (9, 3, math.cos(math.pi / 4)), (2, 1, 0.5)])
def test_extremal_witness_examples(n, k, expected):
    P = extremal_witness(n, k)
    assert abs(P.c(k)) / P.c0 == pytest.approx(expected, abs=1e-6)
    assert P.c(k).real >= 0 and abs(P.c(k).imag) <= 1e-12 * P.c0


def test_extremal_witness_tight_everywhere():
    for n in range(2, 11):
        for k in range(1, n):
            P = extremal_witness(n, k)
            assert abs(P.c(k)) / P.c0 >= es_omega(n, k) - 1e-6
            assert check_classical_bounds(P).ok
    with pytest.raises(ValidationError):
        extremal_witness(4, 4)


# JSON


def test_json_round_trip(tmp_path):
    P = random_positive(5, 1)
    path = tmp_path / "p.json"
    path.write_text(json.dumps(trigpoly_to_json(P)))
    np.testing.assert_allclose(load_trigpoly(path).coeffs, P.coeffs, atol=1e-15)


@pytest.mark.parametrize(
    "obj,field",
    [
        ([], "top level"),
        ({"coeffs": [[1, 0]]}, "degree"),
        ({"degree": 1}, "coeffs"),
        ({"degree": -1, "coeffs": []}, "degree"),
        ({"degree": 1, "coeffs": [[1, 0]]}, "coeffs"),
        ({"degree": 0, "coeffs": [["a", 0]]}, "coeffs[0]"),
        ({"degree": 1, "coeffs": [[1, 0], [2, 0], [3, 0]]}, "Hermitian"),
    ],
)
def test_json_errors_name_field(obj, field):
    with pytest.raises(ValidationError, match=field.replace("[", r"\[").replace("]", r"\]")):
        trigpoly_from_json(obj)


def test_load_invalid_json(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    with pytest.raises(ValidationError, match="invalid JSON"):
        load_trigpoly(path)


@given(st.lists(st.complex_numbers(max_magnitude=10, allow_nan=False, allow_infinity=False), min_size=1, max_size=8))
def test_from_analytic_hermitian_and_c0(q):
    q = np.array(q, dtype=complex)
    if not np.any(q):
        return
    P = from_analytic(q)
    np.testing.assert_allclose(P.coeffs, np.conj(P.coeffs[::-1]), atol=1e-12 * max(1.0, P.c0))
    assert P.c0 == pytest.approx(float(np.sum(np.abs(q) ** 2)), rel=1e-12)
    assert np.all(np.abs(P.coeffs) <= P.c0 * (1 + 1e-12))
