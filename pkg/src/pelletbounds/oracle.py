"""Brute-force eigenvalue ground truth and region counting.

The oracle computes all nm eigenvalues of a matrix polynomial by sending the
monicized polynomial through its block companion matrix and a dense
eigensolver.  Bounds and gaps produced elsewhere in the library are verified
against these values with small relative slack at region boundaries.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import EIGEN_DIM_CAP, eigenvalues
from .matpoly import MatrixPolynomial, companion, monicize

DEFAULT_BOUNDARY_TOL = 1e-9


@dataclass(frozen=True)
class EigenReport:
    """Eigenvalues of a matrix polynomial sorted by ascending modulus."""

    values: np.ndarray
    moduli: np.ndarray
    count: int

    @property
    def min_modulus(self) -> float:
        return float(self.moduli[0])

    @property
    def max_modulus(self) -> float:
        return float(self.moduli[-1])


def eigen_oracle(p: MatrixPolynomial, cap: int = EIGEN_DIM_CAP) -> EigenReport:
    """All nm eigenvalues of P with multiplicity.

    Requires a nonsingular leading coefficient (SingularMatrixError
    otherwise: infinite eigenvalues present, transform first).
    """
    pm = p if p.is_monic() else monicize(p)
    vals = eigenvalues(companion(pm), cap=cap)
    order = np.argsort(np.abs(vals), kind="stable")
    vals = vals[order]
    moduli = np.abs(vals)
    report = EigenReport(values=vals, moduli=moduli, count=p.n * p.m)
    assert len(vals) == report.count
    return report


def count_in_disk(rep: EigenReport, radius: float, tol: float = DEFAULT_BOUNDARY_TOL) -> int:
    """Number of eigenvalue moduli <= radius * (1 + tol)."""
    return int(np.count_nonzero(rep.moduli <= radius * (1.0 + tol)))


def count_in_annulus(rep: EigenReport, x1: float, x2: float,
                     tol: float = DEFAULT_BOUNDARY_TOL) -> int:
    """Number of eigenvalue moduli strictly inside (x1*(1+tol), x2*(1-tol))."""
    if not x1 < x2:
        raise ValueError(f"need x1 < x2, got {x1}, {x2}")
    inner = rep.moduli > x1 * (1.0 + tol)
    outer = rep.moduli < x2 * (1.0 - tol)
    return int(np.count_nonzero(inner & outer))
