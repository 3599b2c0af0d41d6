"""Minimal 2x2 complex matrix algebra.

Everything downstream (density operators, polarization matrices, analyzer
projectors) lives in a fixed two-dimensional Hilbert space, so a hand-rolled
2x2 type with closed-form trace/det/PSD tests is both faster and easier to
reason about than a general linear-algebra stack.  numpy is used only to draw
seeded Gaussian samples for random unitaries.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import sqrt

import numpy as np

#: default tolerance for validity predicates (Hermiticity, positivity, ...)
TOL_VALID = 1e-9
#: default tolerance for exact algebraic identities
TOL_ALGEBRA = 1e-12


@dataclass(frozen=True)
class CMat2:
    """Immutable 2x2 complex matrix, row-major entries."""

    m11: complex
    m12: complex
    m21: complex
    m22: complex

    @staticmethod
    def diag(a: complex, b: complex) -> "CMat2":
        return CMat2(a, 0j, 0j, b)

    @staticmethod
    def identity() -> "CMat2":
        return CMat2(1 + 0j, 0j, 0j, 1 + 0j)

    @staticmethod
    def from_array(arr) -> "CMat2":
        return CMat2(complex(arr[0][0]), complex(arr[0][1]),
                     complex(arr[1][0]), complex(arr[1][1]))

    def to_array(self) -> np.ndarray:
        return np.array([[self.m11, self.m12], [self.m21, self.m22]],
                        dtype=complex)


def trace(m: CMat2) -> complex:
    return m.m11 + m.m22


def det(m: CMat2) -> complex:
    return m.m11 * m.m22 - m.m12 * m.m21


def adjoint(m: CMat2) -> CMat2:
    """Conjugate transpose."""
    return CMat2(m.m11.conjugate(), m.m21.conjugate(),
                 m.m12.conjugate(), m.m22.conjugate())


def transpose(m: CMat2) -> CMat2:
    return CMat2(m.m11, m.m21, m.m12, m.m22)


def add(a: CMat2, b: CMat2) -> CMat2:
    return CMat2(a.m11 + b.m11, a.m12 + b.m12, a.m21 + b.m21, a.m22 + b.m22)


def sub(a: CMat2, b: CMat2) -> CMat2:
    return CMat2(a.m11 - b.m11, a.m12 - b.m12, a.m21 - b.m21, a.m22 - b.m22)


def scale(c: complex, m: CMat2) -> CMat2:
    return CMat2(c * m.m11, c * m.m12, c * m.m21, c * m.m22)


def matmul(a: CMat2, b: CMat2) -> CMat2:
    return CMat2(a.m11 * b.m11 + a.m12 * b.m21,
                 a.m11 * b.m12 + a.m12 * b.m22,
                 a.m21 * b.m11 + a.m22 * b.m21,
                 a.m21 * b.m12 + a.m22 * b.m22)


def max_abs(m: CMat2) -> float:
    """Entrywise max-modulus norm, used for tolerance comparisons."""
    return max(abs(m.m11), abs(m.m12), abs(m.m21), abs(m.m22))


def hermiticity_residual(m: CMat2) -> float:
    return max(abs(m.m12 - m.m21.conjugate()),
               abs(m.m11.imag), abs(m.m22.imag))


def is_hermitian(m: CMat2, tol: float = TOL_VALID) -> bool:
    return hermiticity_residual(m) <= tol


def is_psd(m: CMat2, tol: float = TOL_VALID) -> bool:
    """Positive-semidefiniteness via the closed-form 2x2 criterion.

    A Hermitian 2x2 matrix is PSD iff its trace and determinant are both
    nonnegative; the determinant threshold is scaled by max(1, tr^2) so the
    test behaves sensibly for matrices far from unit scale.
    """
    if not is_hermitian(m, tol):
        return False
    tr = trace(m).real
    d = det(m).real
    return tr >= -tol and d >= -tol * max(1.0, tr * tr)


def eigvals_hermitian(m: CMat2) -> tuple[float, float]:
    """Eigenvalues of a Hermitian 2x2 matrix (ascending), closed form."""
    a = m.m11.real
    d = m.m22.real
    half_tr = 0.5 * (a + d)
    disc = sqrt(max(0.25 * (a - d) ** 2 + abs(m.m12) ** 2, 0.0))
    return half_tr - disc, half_tr + disc


def random_unitary(seed: int) -> CMat2:
    """Seed-deterministic random element of U(2).

    Two complex Gaussian columns (four standard normals each) are
    orthonormalized by Gram-Schmidt; this covers all of U(2), which is all
    the invariance checks need.
    """
    rng = np.random.default_rng(seed)
    while True:
        z = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
        n1 = np.linalg.norm(z[:, 0])
        if n1 < 1e-12:
            continue
        c1 = z[:, 0] / n1
        v2 = z[:, 1] - (np.vdot(c1, z[:, 1])) * c1
        n2 = np.linalg.norm(v2)
        if n2 < 1e-12:
            continue
        c2 = v2 / n2
        return CMat2(complex(c1[0]), complex(c2[0]),
                     complex(c1[1]), complex(c2[1]))
