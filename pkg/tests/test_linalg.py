import json

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from opradii.errors import ValidationError
from opradii.linalg import (
    as_matrix,
    hereditary_eval,
    herm_eig,
    jacobi_eigh,
    load_matrix,
    mat_poly,
    matrix_from_json,
    matrix_to_json,
    operator_norm,
    save_matrix,
    spectral_radius,
)
from oracles import random_complex


def _hermitian(rng, n):
    X = random_complex(rng, (n, n))
    return X + X.conj().T


@pytest.mark.parametrize("n", [1, 2, 3, 5, 8, 12])
def test_jacobi_matches_lapack(rng, n):
    H = _hermitian(rng, n)
    res = jacobi_eigh(H)
    np.testing.assert_allclose(res.eigenvalues, np.linalg.eigvalsh(H), atol=1e-10)
    V = res.eigenvectors
    np.testing.assert_allclose(V.conj().T @ V, np.eye(n), atol=1e-10)
    np.testing.assert_allclose(H @ V, V * res.eigenvalues, atol=1e-9)


@given(st.integers(1, 6), st.integers(0, 2**32 - 1))
def test_herm_eig_methods_agree(n, seed):
    H = _hermitian(np.random.default_rng(seed), n)
    a = herm_eig(H, method="lapack")
    b = herm_eig(H, method="jacobi")
    np.testing.assert_allclose(a.eigenvalues, b.eigenvalues, atol=1e-9 * max(1.0, np.abs(H).max()))
    assert a.lambda_max == a.eigenvalues[-1] and a.lambda_min == a.eigenvalues[0]


def test_herm_eig_rejects_non_hermitian():
    with pytest.raises(ValidationError, match=r"\(0, 1\)"):
        herm_eig(np.array([[1.0, 2.0], [0.0, 1.0]]))


def test_herm_eig_unknown_method():
    with pytest.raises(ValidationError):
        herm_eig(np.eye(2), method="qr")


@pytest.mark.parametrize(
    "bad",
    [np.zeros((2, 3)), np.zeros((0, 0)), np.array([[np.nan]]), np.ones(3)],
)
def test_as_matrix_rejects(bad):
    with pytest.raises(ValidationError):
        as_matrix(bad)


def test_operator_norm_matches_svd(rng):
    for n in range(1, 7):
        A = random_complex(rng, (n, n))
        assert operator_norm(A) == pytest.approx(np.linalg.norm(A, 2), rel=1e-12)


def test_spectral_radius(rng):
    for n in range(1, 7):
        A = random_complex(rng, (n, n))
        assert spectral_radius(A) == pytest.approx(np.abs(np.linalg.eigvals(A)).max(), rel=1e-8)
    assert spectral_radius(np.diag(np.ones(4), 1)) == 0.0
    # nonnormal with a Jordan block: slow Gelfand convergence
    J = np.array([[0.5, 1.0], [0.0, 0.5]])
    assert spectral_radius(J) == pytest.approx(0.5, rel=1e-6)


def test_mat_poly_and_hereditary(rng):
    A = random_complex(rng, (4, 4))
    p = [1.0, -2.0 + 1j, 0.5]
    expected = np.eye(4) + (-2.0 + 1j) * A + 0.5 * A @ A
    np.testing.assert_allclose(mat_poly(A, p), expected, atol=1e-12)
    Ah = A.conj().T
    H = hereditary_eval(A, {(0, 0): 1.0, (1, 0): 2.0, (1, 2): -1j})
    np.testing.assert_allclose(H, np.eye(4) + 2 * Ah - 1j * Ah @ A @ A, atol=1e-12)


def test_matrix_json_roundtrip(tmp_path, rng):
    A = random_complex(rng, (3, 3))
    path = tmp_path / "a.json"
    save_matrix(path, A)
    np.testing.assert_array_equal(load_matrix(path), A)
    assert matrix_from_json(json.loads(json.dumps(matrix_to_json(A)))).shape == (3, 3)


@pytest.mark.parametrize(
    "obj, field",
    [
        ({"entries": []}, "dim"),
        ({"dim": 2}, "entries"),
        ({"dim": 2, "entries": [[0, 0]] * 3}, "entries"),
        ({"dim": 1, "entries": [[0, "x"]]}, r"entries\[0\]"),
        ({"dim": -1, "entries": []}, "dim"),
    ],
)
def test_matrix_json_errors_name_field(obj, field):
    with pytest.raises(ValidationError, match=field):
        matrix_from_json(obj)
