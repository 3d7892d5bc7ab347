import numpy as np
import pytest

from pelletbounds import (
    MatrixPolynomial,
    NormKind,
    SingularMatrixError,
    count_in_annulus,
    count_in_disk,
    eigen_oracle,
    evaluate,
    norm,
    scalar_polynomial,
)
from pelletbounds.oracle import EigenReport

from conftest import rand_poly


def report(moduli):
    vals = np.array(moduli, dtype=complex)
    return EigenReport(values=vals, moduli=np.abs(vals), count=len(moduli))


def test_moduli_examples():
    p = scalar_polynomial([2.0, -3.0, 1.0])
    assert eigen_oracle(p).moduli == pytest.approx([1.0, 2.0])
    q = MatrixPolynomial([-np.diag([1.0, 4.0]), np.zeros((2, 2)), np.eye(2)])
    assert eigen_oracle(q).moduli == pytest.approx([1.0, 1.0, 2.0, 2.0])


def test_count_is_nm_and_sorted(rng):
    p = rand_poly(rng, 2, 3)
    rep = eigen_oracle(p)
    assert rep.count == 6 == len(rep.values)
    assert np.all(np.diff(rep.moduli) >= 0)


def test_eigenvalue_residuals(rng):
    p = rand_poly(rng, 2, 3, monic=False)
    rep = eigen_oracle(p)
    for lam in rep.values:
        scale = sum(norm(c, NormKind.TWO) * abs(lam) ** j for j, c in enumerate(p.coeffs))
        smin = np.linalg.svd(evaluate(p, lam), compute_uv=False)[-1]
        assert smin <= 1e-6 * scale


def test_singular_leading_raises():
    p = MatrixPolynomial([np.eye(2), np.diag([1.0, 0.0])])
    with pytest.raises(SingularMatrixError):
        eigen_oracle(p)


def test_count_in_disk():
    rep = report([1.0, 2.0])
    assert count_in_disk(rep, 1.0) == 1
    assert count_in_disk(rep, 1.5) == 1
    assert count_in_disk(rep, 2.0, tol=1e-9) == 2


def test_count_in_annulus():
    rep = report([1.0, 2.0])
    assert count_in_annulus(rep, 1.0, 2.0) == 0
    assert count_in_annulus(rep, 0.5, 0.9) == 0
    rep3 = report([1.0, 1.5, 2.0])
    assert count_in_annulus(rep3, 1.0, 2.0) == 1
    with pytest.raises(ValueError):
        count_in_annulus(rep, 2.0, 1.0)


def test_disk_annulus_sum_rule(rng):
    p = rand_poly(rng, 2, 4)
    rep = eigen_oracle(p)
    x1, x2 = 0.7, 1.3
    inside = count_in_disk(rep, x1)
    middle = count_in_annulus(rep, x1, x2)
    beyond = int(np.count_nonzero(rep.moduli >= x2 * (1 - 1e-9)))
    assert inside + middle + beyond == rep.count
