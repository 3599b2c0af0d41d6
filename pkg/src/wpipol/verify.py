"""Randomized cross-module invariant suite.

Each check draws seed-deterministic random states, evaluates one invariant
along two independent computation paths, and reports the worst residual
seen together with the trial that produced it.  The CLI ``verify`` command
and the acceptance tests both run these.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import linalg, polarimeter, polarization
from .duality import mandel_decompose
from .linalg import CMat2, random_unitary
from .polarization import (FieldScale, PolarizationMatrix, degree_of_polarization,
                           degree_of_polarization_closed_form, polarization_matrix,
                           stokes_from_gamma, unitary_conjugate)
from .states import AmplitudePair, build_rho, validate_density


@dataclass(frozen=True)
class InvariantResult:
    name: str
    trials: int
    max_residual: float
    tol: float
    worst_trial: int

    @property
    def ok(self) -> bool:
        return self.max_residual <= self.tol


def random_params(rng) -> tuple[AmplitudePair, float]:
    """Random (amplitudes, indistinguishability) with uniform |a1|^2 and phases."""
    a1_sq = rng.uniform(0.0, 1.0)
    ph1, ph2 = rng.uniform(0.0, 2.0 * math.pi, size=2)
    a = AmplitudePair(math.sqrt(a1_sq) * complex(math.cos(ph1), math.sin(ph1)),
                      math.sqrt(1.0 - a1_sq) * complex(math.cos(ph2), math.sin(ph2)))
    return a, rng.uniform(0.0, 1.0)


def _track(results: dict[str, list], name: str, residual: float, trial: int):
    worst = results.setdefault(name, [0.0, -1])
    if residual > worst[0] or worst[1] < 0:
        worst[0] = residual
        worst[1] = trial


def check_state_family(trials: int, seed: int = 0) -> list[InvariantResult]:
    """One pass over random states covering the per-state invariants:

    * closed-form P vs matrix-path P agreement
    * duality identity residual P^2 - I^2 - (1-I^2)(2|a1|^2-1)^2
    * duality inequality P >= I (degenerate cases included)
    * decomposition round-trip of (I, |a1|^2, |a2|^2) and of rho entrywise
    * Gamma matches the coherence pattern rebuilt from the decomposition
    * Stokes-vector P consistency
    """
    rng = np.random.default_rng(seed)
    scale = FieldScale(complex(1.3, -0.4))  # arbitrary non-unit scale; P must not see it
    results: dict[str, list] = {}
    for t in range(trials):
        a, indist = random_params(rng)
        if t % 50 == 0:
            # fold in one-path-empty (degenerate) states
            a = AmplitudePair(1.0, 0.0) if t % 100 == 0 else AmplitudePair(0.0, 1.0)
        rho = build_rho(a, indist)
        gamma = polarization_matrix(rho, scale)
        p_matrix = degree_of_polarization(gamma)
        p_closed = degree_of_polarization_closed_form(a, indist)
        _track(results, "closed-form vs matrix degree of polarization",
               abs(p_matrix - p_closed), t)

        dec = mandel_decompose(rho)
        i = dec.indist
        a1_sq = dec.amps.p1
        _track(results, "duality identity residual",
               abs(p_matrix ** 2 - i ** 2 - (1.0 - i ** 2) * (2.0 * a1_sq - 1.0) ** 2), t)
        _track(results, "duality inequality P >= I", max(i - p_matrix, 0.0), t)

        if not dec.degenerate:
            _track(results, "decomposition round-trip (I, probabilities)",
                   max(abs(i - indist), abs(a1_sq - a.p1), abs(dec.amps.p2 - a.p2)), t)
        recon = linalg.add(linalg.scale(i, dec.rho_id.mat),
                           linalg.scale(1.0 - i, dec.rho_d.mat))
        _track(results, "decomposition reconstructs rho entrywise",
               linalg.max_abs(linalg.sub(recon, rho.mat)), t)

        pattern = CMat2(scale.c_sq * dec.amps.p1 + 0j,
                        scale.c_sq * i * dec.amps.a1.conjugate() * dec.amps.a2,
                        scale.c_sq * i * dec.amps.a1 * dec.amps.a2.conjugate(),
                        scale.c_sq * dec.amps.p2 + 0j)
        _track(results, "Gamma matches decomposition coherence pattern",
               linalg.max_abs(linalg.sub(gamma.mat, pattern)), t)

        s = stokes_from_gamma(gamma)
        _track(results, "Stokes vector reproduces P",
               abs(math.sqrt(s.s1 ** 2 + s.s2 ** 2 + s.s3 ** 2) / s.s0 - p_matrix), t)
    return [InvariantResult(name, trials, worst[0], 1e-12, worst[1])
            for name, worst in results.items()]


def check_equal_intensity_equality(seed: int = 0) -> InvariantResult:
    """P == I exactly on the equal-intensity line, I in {0, 0.1, ..., 1}."""
    amps = AmplitudePair(math.sqrt(0.5), math.sqrt(0.5))
    worst, worst_trial = 0.0, 0
    for t in range(11):
        indist = t / 10.0
        p = degree_of_polarization(polarization_matrix(build_rho(amps, indist)))
        if abs(p - indist) > worst:
            worst, worst_trial = abs(p - indist), t
    return InvariantResult("equal-intensity equality P == I", 11, worst, 1e-12, worst_trial)


def check_unitary_invariance(trials: int, seed: int = 0) -> InvariantResult:
    """P unchanged under Gamma -> U Gamma U^dag for random (Gamma, U) pairs."""
    rng = np.random.default_rng(seed)
    worst, worst_trial = 0.0, 0
    for t in range(trials):
        a, indist = random_params(rng)
        g = polarization_matrix(build_rho(a, indist), FieldScale(rng.uniform(0.1, 3.0)))
        u = random_unitary(int(rng.integers(0, 2 ** 62)))
        dp = abs(degree_of_polarization(unitary_conjugate(g, u)) - degree_of_polarization(g))
        if dp > worst:
            worst, worst_trial = dp, t
    return InvariantResult("unitary invariance of P", trials, worst, 1e-12, worst_trial)


def check_validity_grid(points: int = 101) -> InvariantResult:
    """Every state on a (|a1|^2, I) grid passes the density-matrix gate."""
    failures = 0
    n = 0
    for ia in range(points):
        amps = AmplitudePair(math.sqrt(ia / (points - 1)), math.sqrt(1.0 - ia / (points - 1)))
        for ii in range(points):
            rho = build_rho(amps, ii / (points - 1))
            try:
                validate_density(rho.mat)
            except Exception:
                failures += 1
            n += 1
    return InvariantResult("validity of constructed states on grid", n, float(failures), 0.0, 0)


def check_analytic_tomography(trials: int, seed: int = 0) -> InvariantResult:
    """Tomography with exact probabilities must reproduce P."""
    rng = np.random.default_rng(seed)
    worst, worst_trial = 0.0, 0
    for t in range(trials):
        a, indist = random_params(rng)
        rho = build_rho(a, indist)
        p = degree_of_polarization(polarization_matrix(rho))
        p_hat = polarimeter.tomograph(rho, shots_per_setting=1, seed=0, analytic=True).deg_pol_hat
        if abs(p - p_hat) > worst:
            worst, worst_trial = abs(p - p_hat), t
    return InvariantResult("analytic-mode tomography reproduces P", trials, worst, 1e-12, worst_trial)


def check_complementary_channels(trials: int, seed: int = 0) -> InvariantResult:
    """p(theta, delta) + p(theta + pi/2, delta) == 1."""
    rng = np.random.default_rng(seed)
    worst, worst_trial = 0.0, 0
    for t in range(trials):
        a, indist = random_params(rng)
        rho = build_rho(a, indist)
        theta = rng.uniform(0.0, math.pi)
        delta = rng.uniform(0.0, 2.0 * math.pi)
        total = (polarimeter.click_probability(rho, polarimeter.AnalyzerSetting(theta, delta))
                 + polarimeter.click_probability(rho, polarimeter.AnalyzerSetting(theta + math.pi / 2, delta)))
        if abs(total - 1.0) > worst:
            worst, worst_trial = abs(total - 1.0), t
    return InvariantResult("complementary analyzer channels sum to 1", trials, worst, 1e-12, worst_trial)


def run_all(trials: int = 100_000, seed: int = 0) -> list[InvariantResult]:
    """Full suite; smaller checks scale down from the main trial count."""
    results = check_state_family(trials, seed)
    results.append(check_equal_intensity_equality(seed))
    results.append(check_unitary_invariance(max(trials // 10, 1), seed))
    results.append(check_validity_grid())
    results.append(check_analytic_tomography(max(trials // 100, 1), seed))
    results.append(check_complementary_channels(max(trials // 100, 1), seed))
    return results
