import numpy as np
import pytest

from pelletbounds import (
    NormKind,
    SingularMatrixError,
    eigenvalues,
    inv_norm_inv,
    inverse,
    left_solve,
    norm,
)
from pelletbounds.linalg import as_matrix

from conftest import rand_matrix

KINDS = [NormKind.ONE, NormKind.INF, NormKind.TWO]


def test_norm_one_inf_examples():
    a = np.array([[1, -2], [3, 4]], dtype=complex)
    assert norm(a, "one") == 6.0
    assert norm(a, "inf") == 7.0


def test_norm_two_diagonal():
    assert norm(np.diag([3.0, -4.0]), "two") == pytest.approx(4.0, abs=1e-12)


@pytest.mark.parametrize("m", [1, 2, 3, 7, 20])
def test_norm_two_matches_svd(rng, m):
    a = rand_matrix(rng, m, scale=3.0)
    expected = np.linalg.svd(a, compute_uv=False)[0]
    assert norm(a, "two") == pytest.approx(expected, rel=1e-10)


def test_norm_zero_iff_zero_matrix(rng):
    z = np.zeros((3, 3))
    for kind in KINDS:
        assert norm(z, kind) == 0.0
    a = rand_matrix(rng, 3)
    for kind in KINDS:
        assert norm(a, kind) > 0.0


def test_norm_submultiplicative(rng):
    for _ in range(20):
        a = rand_matrix(rng, 5, scale=2.0)
        b = rand_matrix(rng, 5, scale=2.0)
        for kind in KINDS:
            assert norm(a @ b, kind) <= norm(a, kind) * norm(b, kind) * (1 + 1e-12)


def test_one_norm_equals_adjoint_inf_norm_exactly(rng):
    for _ in range(20):
        a = rand_matrix(rng, 6, scale=5.0)
        assert norm(a, "one") == norm(a.conj().T, "inf")


def test_inv_norm_inv_examples():
    assert inv_norm_inv(np.eye(3), "one") == pytest.approx(1.0)
    assert inv_norm_inv(np.diag([2.0, 5.0]), "one") == pytest.approx(2.0)
    with pytest.raises(SingularMatrixError):
        inv_norm_inv(np.ones((2, 2)), "one")


def test_inv_norm_inv_consistent_with_inverse_norm(rng):
    for _ in range(10):
        a = rand_matrix(rng, 4) + 2 * np.eye(4)
        for kind in KINDS:
            product = inv_norm_inv(a, kind) * norm(np.linalg.inv(a), kind)
            assert product == pytest.approx(1.0, rel=1e-10)


def test_left_solve_identity_and_diag(rng):
    b = rand_matrix(rng, 3)
    assert np.allclose(left_solve(np.eye(3), b), b, atol=1e-14)
    d = np.diag([2.0, 4.0])
    assert np.allclose(left_solve(d, d), np.eye(2), atol=1e-14)


def test_left_solve_round_trip(rng):
    a = rand_matrix(rng, 2) + np.eye(2)
    assert np.allclose(left_solve(a, a), np.eye(2), atol=1e-12)
    b = rand_matrix(rng, 2)
    x = left_solve(a, b)
    assert np.allclose(a @ x, b, atol=1e-12)


def test_left_solve_singular():
    with pytest.raises(SingularMatrixError):
        left_solve(np.zeros((2, 2)), np.eye(2))
    with pytest.raises(SingularMatrixError):
        left_solve(np.array([[1.0, 1.0], [1.0, 1.0]]), np.eye(2))


def test_inverse_of_near_singular_raises():
    a = np.array([[1.0, 0.0], [0.0, 1e-16]])
    with pytest.raises(SingularMatrixError):
        inverse(a)


def test_eigenvalues_examples():
    vals = sorted(eigenvalues(np.diag([1.0, 2.0 + 1.0j])), key=abs)
    assert vals[0] == pytest.approx(1.0)
    assert vals[1] == pytest.approx(2.0 + 1.0j)
    vals = sorted(eigenvalues(np.array([[0.0, 1.0], [1.0, 0.0]])).real)
    assert vals == pytest.approx([-1.0, 1.0])
    # companion matrix of z^2 - 3z + 2
    comp = np.array([[0.0, -2.0], [1.0, 3.0]])
    assert sorted(np.abs(eigenvalues(comp))) == pytest.approx([1.0, 2.0])


def test_eigenvalues_block_diag_multiset(rng):
    a = rand_matrix(rng, 3)
    b = rand_matrix(rng, 2)
    block = np.zeros((5, 5), dtype=complex)
    block[:3, :3] = a
    block[3:, 3:] = b
    merged = np.concatenate([eigenvalues(a), eigenvalues(b)])
    got = eigenvalues(block)
    assert np.allclose(np.sort_complex(merged), np.sort_complex(got), atol=1e-10)


def test_eigenvalues_dimension_cap():
    with pytest.raises(ValueError):
        eigenvalues(np.eye(5), cap=4)


def test_as_matrix_rejects_bad_input():
    with pytest.raises(ValueError):
        as_matrix(np.array([1.0, 2.0]))
    with pytest.raises(ValueError):
        as_matrix(np.array([[np.nan, 0.0], [0.0, 1.0]]))
    with pytest.raises(ValueError):
        as_matrix(np.array([[np.inf, 0.0], [0.0, 1.0]]))
