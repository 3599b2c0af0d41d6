"""Mandel decomposition and the polarization/which-path duality relations.

Any valid two-path density matrix splits uniquely as

    rho = I * rho_id + (1 - I) * rho_d,    0 <= I <= 1,

where rho_id is a coherent-superposition projector, rho_d the corresponding
incoherent mixture, and I is the degree of indistinguishability (I = 0 means
complete which-path information).  With P the degree of polarization of the
emerging light, the central relations verified here are

    P^2 - I^2 = (1 - I^2) * (2 |a1|^2 - 1)^2      (identity)
    P >= I                                        (inequality)
    P == I      when |a1|^2 = |a2|^2              (best circumstances)
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import PositivityError, RangeError
from .ioutil import format_bool, format_float
from .linalg import TOL_ALGEBRA, TOL_VALID
from .polarization import FieldScale, degree_of_polarization, polarization_matrix
from .states import AmplitudePair, DensityOperator, build_rho, build_rho_d, build_rho_id


@dataclass(frozen=True)
class MandelDecomposition:
    """Unique split of a density matrix into coherent and incoherent parts.

    ``amps`` is gauge-fixed with a1 real and nonnegative.  ``degenerate`` is
    set when one path probability vanishes: the coherence factorization then
    cannot determine I, so I = 0 is reported by convention (which-path
    knowledge is certain when one path is empty).
    """

    indist: float
    amps: AmplitudePair
    rho_id: DensityOperator
    rho_d: DensityOperator
    degenerate: bool


@dataclass(frozen=True)
class DualityReport:
    indist: float
    deg_pol: float
    alpha1_sq: float
    identity_residual: float
    inequality_margin: float
    best_circumstances: bool
    degenerate: bool


def mandel_decompose(rho: DensityOperator, tol: float = TOL_VALID) -> MandelDecomposition:
    """Recover (I, a1, a2) from a valid density matrix.

    |a1|^2 and |a2|^2 are the diagonal entries; I = |rho12| / sqrt(rho11 rho22)
    (in [0, 1] by positivity); the phase of a2 is fixed so the decomposition
    reproduces the input coherence exactly under the a1 >= 0 gauge.
    """
    p1 = rho.mat.m11.real
    p2 = rho.mat.m22.real
    off = rho.mat.m12
    bound = p1 * p2
    if abs(off) ** 2 > bound * (1.0 + tol):
        raise PositivityError(
            f"|rho12|^2 = {abs(off)**2:.6g} exceeds rho11*rho22 = {bound:.6g}; not a valid state")
    # degenerate cutoff at the algebraic tolerance: any coherence dropped by
    # the I := 0 convention is then at most sqrt(bound) <= 1e-12, keeping the
    # reconstruction identity intact
    if bound > TOL_ALGEBRA * TOL_ALGEBRA:
        indist = min(abs(off) / math.sqrt(bound), 1.0)
        phase = cmath.exp(-1j * cmath.phase(off)) if off != 0 else 1.0
        amps = AmplitudePair(math.sqrt(p1), math.sqrt(p2) * phase, tol=tol)
        degenerate = False
    else:
        indist = 0.0
        amps = AmplitudePair(math.sqrt(max(p1, 0.0)), math.sqrt(max(p2, 0.0)), tol=tol)
        degenerate = True
    return MandelDecomposition(indist=indist, amps=amps,
                               rho_id=build_rho_id(amps), rho_d=build_rho_d(amps),
                               degenerate=degenerate)


def duality_report(rho: DensityOperator, scale: FieldScale = FieldScale(),
                   tol: float = TOL_VALID) -> DualityReport:
    """Compute P and I for one state and evaluate the duality relations."""
    dec = mandel_decompose(rho, tol=tol)
    p = degree_of_polarization(polarization_matrix(rho, scale))
    i = dec.indist
    a1_sq = dec.amps.p1
    residual = p * p - i * i - (1.0 - i * i) * (2.0 * a1_sq - 1.0) ** 2
    return DualityReport(
        indist=i,
        deg_pol=p,
        alpha1_sq=a1_sq,
        identity_residual=residual,
        inequality_margin=p - i,
        best_circumstances=abs(dec.amps.p1 - dec.amps.p2) <= tol,
        degenerate=dec.degenerate,
    )


def sweep(grid_alpha, grid_indist, scale: FieldScale = FieldScale()) -> list[DualityReport]:
    """One report per (|a1|^2, I) pair, row-major over the two grids."""
    for v in grid_alpha:
        if not 0.0 <= v <= 1.0:
            raise RangeError(f"grid value |a1|^2 = {v!r} outside [0, 1]")
    for v in grid_indist:
        if not 0.0 <= v <= 1.0:
            raise RangeError(f"grid value I = {v!r} outside [0, 1]")
    reports = []
    for a1_sq in grid_alpha:
        amps = AmplitudePair(math.sqrt(a1_sq), math.sqrt(1.0 - a1_sq))
        for indist in grid_indist:
            reports.append(duality_report(build_rho(amps, indist), scale))
    return reports


SWEEP_CSV_HEADER = "alpha1_sq,indistinguishability,deg_pol,inequality_margin,identity_residual,best_circumstances"


def sweep_to_csv(reports) -> str:
    """CSV with 17-significant-digit floats and LF line endings."""
    lines = [SWEEP_CSV_HEADER]
    for r in reports:
        lines.append(",".join([
            format_float(r.alpha1_sq),
            format_float(r.indist),
            format_float(r.deg_pol),
            format_float(r.inequality_margin),
            format_float(r.identity_residual),
            format_bool(r.best_circumstances),
        ]))
    return "\n".join(lines) + "\n"
