"""Single-photon two-path states and their density operators.

The photon occupies a fixed two-dimensional space spanned by two orthonormal
single-photon states, identified with the x and y polarization modes of one
plane-wave mode k.  All matrices in the package are written in this ordered
{|x>, |y>} basis.

Three constructors cover the physical situations of interest:

* ``build_rho_id``  -- coherent superposition (paths fully indistinguishable),
  the rank-1 projector onto a1|x> + a2|y>.
* ``build_rho_d``   -- incoherent mixture (paths fully distinguishable),
  diagonal in the path basis.
* ``build_rho``     -- the general intermediate case, the convex combination
  weighted by the degree of indistinguishability: off-diagonal coherences of
  the pure projector scaled down by a factor in [0, 1].
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from . import linalg
from .errors import HermiticityError, NormalizationError, PositivityError, RangeError, TraceError
from .ioutil import format_float
from .linalg import CMat2, TOL_VALID


@dataclass(frozen=True)
class BasisLabel:
    """Symbolic record of the mode and transverse axes; never enters numerics."""

    mode: str = "k"
    axes: tuple[str, str] = ("x", "y")


@dataclass(frozen=True)
class AmplitudePair:
    """Complex superposition weights (a1, a2) with |a1|^2 + |a2|^2 = 1.

    Inputs within ``tol`` of normalized are accepted and renormalized
    exactly; anything farther off raises NormalizationError.  Phases are
    stored as given (no gauge fixing here).
    """

    a1: complex
    a2: complex
    tol: float = TOL_VALID

    def __post_init__(self):
        a1 = complex(self.a1)
        a2 = complex(self.a2)
        total = abs(a1) ** 2 + abs(a2) ** 2
        if abs(total - 1.0) > self.tol:
            raise NormalizationError(
                f"|a1|^2 + |a2|^2 = {total!r} deviates from 1 beyond tol={self.tol}")
        norm = math.sqrt(total)
        object.__setattr__(self, "a1", a1 / norm)
        object.__setattr__(self, "a2", a2 / norm)

    @property
    def p1(self) -> float:
        return abs(self.a1) ** 2

    @property
    def p2(self) -> float:
        return abs(self.a2) ** 2


@dataclass(frozen=True)
class DensityOperator:
    """2x2 density matrix in the {|x>, |y>} basis.

    Constructors in this module guarantee validity; matrices from the
    outside world must pass through ``validate_density``.
    """

    mat: CMat2

    @property
    def p1(self) -> float:
        return self.mat.m11.real

    @property
    def p2(self) -> float:
        return self.mat.m22.real


def build_rho_id(a: AmplitudePair) -> DensityOperator:
    """Pure-state projector |psi><psi| for psi = a1|x> + a2|y> (rank 1)."""
    return DensityOperator(CMat2(
        abs(a.a1) ** 2 + 0j,
        a.a1 * a.a2.conjugate(),
        a.a2 * a.a1.conjugate(),
        abs(a.a2) ** 2 + 0j,
    ))


def build_rho_d(a: AmplitudePair) -> DensityOperator:
    """Fully distinguishable mixture diag(|a1|^2, |a2|^2)."""
    return DensityOperator(CMat2.diag(abs(a.a1) ** 2 + 0j, abs(a.a2) ** 2 + 0j))


def build_rho(a: AmplitudePair, indist: float) -> DensityOperator:
    """General state: coherences of the pure projector scaled by ``indist``.

    Equals indist * build_rho_id(a) + (1 - indist) * build_rho_d(a); the
    diagonal (path probabilities) is independent of indist.
    """
    if not 0.0 <= indist <= 1.0:
        raise RangeError(f"degree of indistinguishability {indist!r} outside [0, 1]")
    return DensityOperator(CMat2(
        abs(a.a1) ** 2 + 0j,
        indist * a.a1 * a.a2.conjugate(),
        indist * a.a2 * a.a1.conjugate(),
        abs(a.a2) ** 2 + 0j,
    ))


def validate_density(m: CMat2, tol: float = TOL_VALID) -> DensityOperator:
    """Gatekeeper for externally supplied matrices.

    Checks Hermiticity, unit trace, and positive semidefiniteness (in that
    order), raising an error that names the violated invariant and its
    residual.
    """
    herm = linalg.hermiticity_residual(m)
    if herm > tol:
        raise HermiticityError(f"Hermiticity residual {herm:.6g} exceeds tol={tol}")
    tr = linalg.trace(m).real
    if abs(tr - 1.0) > tol:
        raise TraceError(f"trace residual {abs(tr - 1.0):.6g} exceeds tol={tol} (trace={tr!r})")
    d = linalg.det(m).real
    if d < -tol * max(1.0, tr * tr):
        lo, _ = linalg.eigvals_hermitian(m)
        raise PositivityError(
            f"matrix is not positive semidefinite: det={d:.6g}, min eigenvalue={lo:.6g}")
    return DensityOperator(m)


def rho_to_json(rho: DensityOperator) -> str:
    """Serialize as {"rho": [[[re,im], [re,im]], ...]} row-major, 17 digits."""
    m = rho.mat
    rows = []
    for row in ((m.m11, m.m12), (m.m21, m.m22)):
        rows.append("[" + ",".join(
            f"[{format_float(z.real)},{format_float(z.imag)}]" for z in row) + "]")
    return '{"rho":[' + ",".join(rows) + "]}"


def rho_from_json(text: str, tol: float = TOL_VALID) -> DensityOperator:
    """Parse and validate a density matrix from the JSON wire format."""
    doc = json.loads(text)
    try:
        rows = doc["rho"]
        entries = [complex(float(rows[i][j][0]), float(rows[i][j][1]))
                   for i in range(2) for j in range(2)]
    except (KeyError, TypeError, IndexError, ValueError) as exc:
        raise ValueError(f"malformed density-matrix document: {exc}") from exc
    return validate_density(CMat2(*entries), tol=tol)
