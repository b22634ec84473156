import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from opradii.errors import ValidationError
from opradii.roots import cluster_roots, poly_from_roots, poly_roots
from oracles import random_complex


def _match(a, b):
    # greedy nearest matching; returns the worst distance
    b = list(b)
    worst = 0.0
    for z in a:
        j = int(np.argmin([abs(z - w) for w in b]))
        worst = max(worst, abs(z - b.pop(j)))
    return worst


@given(st.integers(1, 12), st.integers(0, 2**32 - 1))
def test_aberth_matches_companion_eigenvalues(deg, seed):
    c = random_complex(np.random.default_rng(seed), deg + 1)
    mine = poly_roots(c)
    ref = np.roots(c[::-1])
    assert mine.size == deg
    assert _match(mine, ref) <= 1e-8 * max(1.0, np.abs(ref).max())


def test_roots_from_known_factors(rng):
    roots = random_complex(rng, 6) * 0.5
    c = poly_from_roots(roots, lead=2.0 - 1j)
    assert _match(poly_roots(c), roots) <= 1e-10


def test_zero_roots_split_off():
    r = poly_roots([0, 0, 1, 1])  # z^2 (1 + z)
    assert np.count_nonzero(r == 0) == 2
    assert np.isclose(r[r != 0][0], -1.0)


def test_small_roots():
    roots = np.array([1e-4, -2e-4j, 3e-4])
    assert _match(poly_roots(poly_from_roots(roots)), roots) <= 1e-12


def test_constant_has_no_roots():
    assert poly_roots([3.0]).size == 0
    assert poly_roots([3.0, 0.0]).size == 0


def test_zero_polynomial_rejected():
    with pytest.raises(ValidationError):
        poly_roots([0, 0])


def test_cluster_roots_merges_multiple_roots():
    r = poly_roots(poly_from_roots([0.5, 0.5, 0.5, -0.2j]))
    groups = cluster_roots(r, tol=1e-4)
    mult = {round(b.real, 3) + 1j * round(b.imag, 3): m for b, m in groups}
    assert mult == {0.5: 3, -0.2j: 1}


def test_cluster_keeps_exact_zero():
    groups = cluster_roots(np.array([0j, 0j, 1.0]))
    assert groups[0] == (0j, 2)
