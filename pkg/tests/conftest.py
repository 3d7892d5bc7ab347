import numpy as np
import pytest

from pelletbounds import MatrixPolynomial


def rand_matrix(rng, m, scale=1.0):
    return scale * (rng.uniform(-1, 1, (m, m)) + 1j * rng.uniform(-1, 1, (m, m)))


def rand_poly(rng, m, n, scale=1.0, monic=True):
    coeffs = [rand_matrix(rng, m, scale) for _ in range(n)]
    coeffs.append(np.eye(m) if monic else rand_matrix(rng, m, scale))
    return MatrixPolynomial(coeffs)


def max_match_distance(a, b):
    """Greedy nearest-neighbor matching distance between two equal-size
    complex multisets (processed in ascending-modulus order)."""
    a = sorted(np.asarray(a, dtype=complex), key=abs)
    b = list(np.asarray(b, dtype=complex))
    assert len(a) == len(b)
    worst = 0.0
    for x in a:
        j = min(range(len(b)), key=lambda i: abs(b[i] - x))
        worst = max(worst, abs(b[j] - x))
        b.pop(j)
    return worst


@pytest.fixture
def rng():
    return np.random.default_rng(20260810)
