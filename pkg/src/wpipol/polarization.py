"""Polarization matrix, degree of polarization, and Stokes parameters.

For a single plane-wave mode the field correlation matrix
Gamma_ij = <E_i^(-) E_j^(+)> reduces to |C|^2 times the transpose of the
density matrix in the {x, y} basis; the plane-wave phase cancels between the
negative- and positive-frequency parts, so no spacetime argument appears
anywhere in this module.

The degree of polarization P = sqrt(1 - 4 det(Gamma) / tr(Gamma)^2) depends
only on the trace and determinant, which makes it invariant under unitary
transformations of the transverse basis and independent of the overall field
scale |C|^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import linalg
from .errors import DegenerateError, NonUnitaryError, PositivityError, RangeError
from .ioutil import complex_pair, dumps
from .linalg import CMat2, TOL_ALGEBRA, TOL_VALID
from .states import AmplitudePair, DensityOperator


@dataclass(frozen=True)
class FieldScale:
    """Field amplitude constant C; only |C|^2 enters any observable."""

    c: complex = 1.0 + 0j

    def __post_init__(self):
        if abs(self.c) <= 0.0:
            raise RangeError("field scale must have |c| > 0")

    @property
    def c_sq(self) -> float:
        return abs(self.c) ** 2


@dataclass(frozen=True)
class PolarizationMatrix:
    """Unnormalized 2x2 field correlation matrix (intensity units)."""

    mat: CMat2
    c_sq: float = 1.0


@dataclass(frozen=True)
class StokesVector:
    s0: float
    s1: float
    s2: float
    s3: float


def polarization_matrix(rho: DensityOperator, scale: FieldScale = FieldScale()) -> PolarizationMatrix:
    """Gamma = |c|^2 * rho^T.

    The transpose comes from the operator ordering in <E^(-)_i E^(+)_j>:
    the coherence <a_i^dag a_j> picks up the (j, i) element of rho.
    """
    return PolarizationMatrix(linalg.scale(scale.c_sq, linalg.transpose(rho.mat)),
                              c_sq=scale.c_sq)


def degree_of_polarization(g: PolarizationMatrix) -> float:
    """P = sqrt(1 - 4 det / tr^2), clamped into [0, 1].

    Radicands within 1e-12 of the [0, 1] interval are clamped (float noise);
    anything farther out signals an invalid Gamma and raises.
    """
    tr = linalg.trace(g.mat).real
    if tr <= 0.0:
        raise DegenerateError(f"polarization matrix trace {tr!r} is not positive")
    radicand = 1.0 - 4.0 * linalg.det(g.mat).real / (tr * tr)
    if radicand < -TOL_ALGEBRA or radicand > 1.0 + TOL_ALGEBRA:
        raise PositivityError(
            f"degree-of-polarization radicand {radicand!r} outside [0, 1]; invalid Gamma")
    return math.sqrt(min(max(radicand, 0.0), 1.0))


def degree_of_polarization_closed_form(a: AmplitudePair, indist: float) -> float:
    """P = sqrt((p1 - p2)^2 + 4 p1 p2 I^2) for the two-path state family."""
    if not 0.0 <= indist <= 1.0:
        raise RangeError(f"degree of indistinguishability {indist!r} outside [0, 1]")
    p1 = a.p1
    p2 = a.p2
    return math.sqrt(min((p1 - p2) ** 2 + 4.0 * p1 * p2 * indist * indist, 1.0))


def stokes_from_gamma(g: PolarizationMatrix) -> StokesVector:
    """Standard correspondence: s0 = Gxx+Gyy, s1 = Gxx-Gyy, s2 = Gxy+Gyx, s3 = i(Gyx-Gxy).

    The s3 sign is a convention: with analyzers |e(theta, delta)> =
    cos(theta)|x> + e^{i delta} sin(theta)|y>, the delta = +pi/2 circular
    analyzer at theta = pi/4 reads out +s3.
    """
    m = g.mat
    return StokesVector(
        s0=(m.m11 + m.m22).real,
        s1=(m.m11 - m.m22).real,
        s2=(m.m12 + m.m21).real,
        s3=(1j * (m.m21 - m.m12)).real,
    )


def unitary_conjugate(g: PolarizationMatrix, u: CMat2, tol: float = TOL_VALID) -> PolarizationMatrix:
    """U Gamma U^dag; preserves trace and determinant, hence P."""
    residual = linalg.max_abs(linalg.sub(linalg.matmul(u, linalg.adjoint(u)),
                                         CMat2.identity()))
    if residual > tol:
        raise NonUnitaryError(f"U U^dag deviates from identity by {residual:.6g}")
    return PolarizationMatrix(linalg.matmul(linalg.matmul(u, g.mat), linalg.adjoint(u)),
                              c_sq=g.c_sq)


def gamma_to_json(g: PolarizationMatrix) -> str:
    m = g.mat
    return dumps({
        "gamma": [[complex_pair(m.m11), complex_pair(m.m12)],
                  [complex_pair(m.m21), complex_pair(m.m22)]],
        "c_sq": g.c_sq,
    })


def stokes_to_json(s: StokesVector) -> str:
    return dumps({"s0": s.s0, "s1": s.s1, "s2": s.s2, "s3": s.s3})
