"""Matrix polynomials P(z) = A_n z^n + ... + A_1 z + A_0 and their transforms.

Coefficients are stored ascending (A_0 first) as immutable m-by-m complex
arrays.  The transforms here are the structural building blocks for the
bounds machinery: monicization, left preconditioning, the reciprocal
polynomial, the degree shift z*P(z), the block companion linearization, and
the companion-squaring repartition that halves the degree while doubling the
block size.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .linalg import NormKind, as_matrix, identity, left_solve, norm

# A leading coefficient within this distance of I (infinity norm) counts as
# monic; anything else must be monicized explicitly by the caller.
MONIC_TOL = 1e-13


class NotMonicError(Exception):
    """Operation requires a monic polynomial (leading coefficient I)."""


class OddDegreeError(Exception):
    """Operation requires an even degree."""


@dataclass(frozen=True, eq=False)
class MatrixPolynomial:
    """Degree-n matrix polynomial with m-by-m complex coefficients A_0..A_n.

    Invariants enforced at construction: exactly n+1 coefficients, all of
    the same square shape, all entries finite, and a nonzero leading
    coefficient (the degree is genuine).
    """

    coeffs: tuple

    def __init__(self, coeffs):
        mats = tuple(as_matrix(c) for c in coeffs)
        if len(mats) < 2:
            raise ValueError("a matrix polynomial needs degree >= 1")
        m = mats[0].shape[0]
        for c in mats:
            if c.shape != (m, m):
                raise ValueError("all coefficients must be the same square shape")
        if not np.any(mats[-1]):
            raise ValueError("leading coefficient must be nonzero")
        frozen = []
        for c in mats:
            c = c.copy()
            c.setflags(write=False)
            frozen.append(c)
        object.__setattr__(self, "coeffs", tuple(frozen))

    @property
    def m(self) -> int:
        return self.coeffs[0].shape[0]

    @property
    def n(self) -> int:
        return len(self.coeffs) - 1

    def is_monic(self, tol: float = MONIC_TOL) -> bool:
        return norm(self.coeffs[-1] - identity(self.m), NormKind.INF) <= tol


def scalar_polynomial(coeffs_ascending) -> MatrixPolynomial:
    """Build an m=1 polynomial from scalar coefficients a_0..a_n."""
    return MatrixPolynomial([np.array([[c]], dtype=np.complex128) for c in coeffs_ascending])


def evaluate(p: MatrixPolynomial, z: complex) -> np.ndarray:
    """Horner evaluation of P(z)."""
    acc = np.array(p.coeffs[-1])
    for c in reversed(p.coeffs[:-1]):
        acc = acc * z + c
    return acc


def monicize(p: MatrixPolynomial) -> MatrixPolynomial:
    """A_n^-1 P: same eigenvalues, leading coefficient exactly I."""
    new = [left_solve(p.coeffs[-1], c) for c in p.coeffs[:-1]]
    new.append(identity(p.m))
    return MatrixPolynomial(new)


def left_multiply(p: MatrixPolynomial, mat) -> MatrixPolynomial:
    """M P for a nonsingular matrix M; leaves the eigenvalues unchanged."""
    mat = as_matrix(mat)
    # nonsingularity check; the inverse itself is not needed
    left_solve(mat, identity(mat.shape[0]))
    return MatrixPolynomial([mat @ c for c in p.coeffs])


def left_precondition(p: MatrixPolynomial, index: int) -> MatrixPolynomial:
    """A_index^-1 P, with coefficient ``index`` set to exact identity."""
    if not 0 <= index <= p.n:
        raise ValueError(f"index {index} out of range for degree {p.n}")
    new = [left_solve(p.coeffs[index], c) for c in p.coeffs]
    new[index] = identity(p.m)
    return MatrixPolynomial(new)


def reciprocal(p: MatrixPolynomial) -> MatrixPolynomial:
    """The monic reciprocal polynomial z^n A_0^-1 P(1/z).

    Its eigenvalues are the reciprocals of the eigenvalues of P; requires a
    nonsingular A_0.
    """
    rev = [left_solve(p.coeffs[0], c) for c in reversed(p.coeffs[1:])]
    rev.append(identity(p.m))
    return MatrixPolynomial(rev)


def shift_by_z(p: MatrixPolynomial) -> MatrixPolynomial:
    """z P(z): degree n+1 with a zero constant term (adds m zero eigenvalues)."""
    zero = np.zeros((p.m, p.m), dtype=np.complex128)
    return MatrixPolynomial([zero, *p.coeffs])


def _require_monic(p: MatrixPolynomial) -> None:
    if not p.is_monic():
        raise NotMonicError("leading coefficient is not the identity; monicize first")


def companion(p: MatrixPolynomial) -> np.ndarray:
    """Block companion matrix of a monic P: identity blocks on the first
    subdiagonal and -A_0..-A_{n-1} down the last block column.  Its nm
    eigenvalues are exactly the eigenvalues of P."""
    _require_monic(p)
    m, n = p.m, p.n
    c = np.zeros((n * m, n * m), dtype=np.complex128)
    for i in range(n - 1):
        c[(i + 1) * m:(i + 2) * m, i * m:(i + 1) * m] = identity(m)
    for j in range(n):
        c[j * m:(j + 1) * m, (n - 1) * m:] = -p.coeffs[j]
    return c


def square_repartition(p: MatrixPolynomial) -> MatrixPolynomial:
    """Repartition C(P)^2 as a monic matrix polynomial Q of half the degree.

    For monic P of even degree n, the square of the block companion matrix
    is again a block companion matrix when cut into 2m-by-2m blocks.  The
    resulting Q(z) = I z^{n/2} + B_{n/2-1} z^{n/2-1} + ... + B_0 with

        B_0 = [[A_0,    -A_0 A_{n-1}       ],
               [A_1,    -A_1 A_{n-1} + A_0 ]]

        B_j = [[A_2j,   -A_2j   A_{n-1} + A_{2j-1}],
               [A_2j+1, -A_2j+1 A_{n-1} + A_2j   ]]   for j = 1..n/2-1

    has as eigenvalues exactly the squares of the eigenvalues of P.
    """
    _require_monic(p)
    if p.n % 2 != 0:
        raise OddDegreeError("companion squaring needs an even degree; shift odd degrees by z first")
    m, n = p.m, p.n
    a = p.coeffs
    an1 = a[n - 1]

    def block(top, bottom, extra_top, extra_bottom):
        b = np.zeros((2 * m, 2 * m), dtype=np.complex128)
        b[:m, :m] = top
        b[m:, :m] = bottom
        b[:m, m:] = -top @ an1 + extra_top
        b[m:, m:] = -bottom @ an1 + extra_bottom
        return b

    zero = np.zeros((m, m), dtype=np.complex128)
    bs = [block(a[0], a[1], zero, a[0])]
    for j in range(1, n // 2):
        bs.append(block(a[2 * j], a[2 * j + 1], a[2 * j - 1], a[2 * j]))
    bs.append(identity(2 * m))
    return MatrixPolynomial(bs)


def q_reciprocal(p: MatrixPolynomial) -> MatrixPolynomial:
    """The companion-squared polynomial of the reciprocal of a monic P.

    Distinct, in general, from the reciprocal of square_repartition(p); its
    eigenvalues are the squared reciprocals of the eigenvalues of P.
    """
    _require_monic(p)
    return square_repartition(reciprocal(p))


def to_json_dict(p: MatrixPolynomial) -> dict:
    """Serialize to {"m", "n", "coeffs"} with entries as [re, im] pairs.

    Round-trips finite doubles bit-exactly (json preserves shortest repr).
    """
    coeffs = [[[[float(v.real), float(v.imag)] for v in row] for row in c] for c in p.coeffs]
    return {"m": p.m, "n": p.n, "coeffs": coeffs}


def from_json_dict(d: dict) -> MatrixPolynomial:
    m, n = int(d["m"]), int(d["n"])
    coeffs = d["coeffs"]
    if len(coeffs) != n + 1:
        raise ValueError(f"expected {n + 1} coefficients, got {len(coeffs)}")
    mats = []
    for c in coeffs:
        mat = np.array([[complex(v[0], v[1]) for v in row] for row in c], dtype=np.complex128)
        if mat.shape != (m, m):
            raise ValueError(f"coefficient shape {mat.shape} does not match m={m}")
        mats.append(mat)
    return MatrixPolynomial(mats)


def to_json(p: MatrixPolynomial, indent=None) -> str:
    return json.dumps(to_json_dict(p), indent=indent)


def from_json(text: str) -> MatrixPolynomial:
    return from_json_dict(json.loads(text))
