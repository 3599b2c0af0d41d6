"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
summary lines.
"""

import math
import time

import numpy as np
import pytest

from wpipol import verify
from wpipol.duality import mandel_decompose
from wpipol.polarimeter import tomograph
from wpipol.polarization import (FieldScale, degree_of_polarization,
                                 degree_of_polarization_closed_form, polarization_matrix)
from wpipol.states import AmplitudePair, build_rho, validate_density
from wpipol.verify import random_params

N_STATES = 100_000
SEED = 20260826


def _report(name, ok, detail):
    print(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
    assert ok, f"{name}: {detail}"


@pytest.fixture(scope="module")
def state_family_results():
    start = time.monotonic()
    results = {r.name: r for r in verify.check_state_family(N_STATES, SEED)}
    results["_elapsed"] = time.monotonic() - start
    return results


def test_criterion_1_closed_form_matches_matrix_path(state_family_results):
    r = state_family_results["closed-form vs matrix degree of polarization"]
    elapsed = state_family_results["_elapsed"]
    _report("criterion 1 (two-path P agreement, 1e5 states)",
            r.max_residual <= 1e-12 and elapsed < 10.0,
            f"max |dP| = {r.max_residual:.3e} (tol 1e-12), elapsed {elapsed:.2f}s (< 10 s)")


def test_criterion_2_duality_identity(state_family_results):
    r = state_family_results["duality identity residual"]
    _report("criterion 2 (identity P^2 - I^2 = (1-I^2)(2|a1|^2-1)^2)",
            r.max_residual <= 1e-12, f"max residual = {r.max_residual:.3e} (tol 1e-12)")


def test_criterion_3_duality_inequality(state_family_results):
    r = state_family_results["duality inequality P >= I"]
    _report("criterion 3 (inequality P >= I incl. degenerate states)",
            r.max_residual <= 1e-12, f"max violation = {r.max_residual:.3e} (tol 1e-12)")


def test_criterion_4_equality_at_equal_intensities():
    worst = 0.0
    amps = AmplitudePair(math.sqrt(0.5), math.sqrt(0.5))
    for k in range(11):
        indist = k / 10.0
        p = degree_of_polarization(polarization_matrix(build_rho(amps, indist)))
        worst = max(worst, abs(p - indist))
    _report("criterion 4 (P == I at |a1|^2 = 0.5, I in {0, 0.1, ..., 1})",
            worst <= 1e-12, f"max |P - I| = {worst:.3e} (tol 1e-12)")


def test_criterion_5_mandel_round_trip(state_family_results):
    scalars = state_family_results["decomposition round-trip (I, probabilities)"]
    matrix = state_family_results["decomposition reconstructs rho entrywise"]
    worst = max(scalars.max_residual, matrix.max_residual)
    _report("criterion 5 (Mandel round-trip, 1e5 states)",
            worst <= 1e-12,
            f"max scalar residual {scalars.max_residual:.3e}, "
            f"max entrywise residual {matrix.max_residual:.3e} (tol 1e-12)")


def test_criterion_6_unitary_invariance():
    r = verify.check_unitary_invariance(10_000, SEED)
    _report("criterion 6 (unitary invariance of P, 1e4 pairs)",
            r.max_residual <= 1e-12, f"max |dP| = {r.max_residual:.3e} (tol 1e-12)")


def test_criterion_7_monte_carlo_convergence():
    start = time.monotonic()
    rho = build_rho(AmplitudePair(math.sqrt(0.5), math.sqrt(0.5)), 0.6)
    covered = 0
    for seed in range(200):
        res = tomograph(rho, 10 ** 6, seed=seed)
        if abs(res.deg_pol_hat - 0.6) <= 3 * res.std_err:
            covered += 1
    null_rho = build_rho(AmplitudePair(math.sqrt(0.5), math.sqrt(0.5)), 0.0)
    p_null = tomograph(null_rho, 10 ** 6, seed=SEED).deg_pol_hat
    elapsed = time.monotonic() - start
    ok = covered >= 190 and p_null <= 0.01 and elapsed < 60.0
    _report("criterion 7 (Monte Carlo convergence at 1e6 shots/setting)", ok,
            f"coverage {covered}/200 (need >= 190), null-state P_hat = {p_null:.4f} "
            f"(<= 0.01), elapsed {elapsed:.1f}s (< 60 s)")


def test_criterion_8_validity_grid():
    failures = 0
    for ia in range(101):
        a1_sq = ia / 100.0
        amps = AmplitudePair(math.sqrt(a1_sq), math.sqrt(1.0 - a1_sq))
        for ii in range(101):
            rho = build_rho(amps, ii / 100.0)
            validate_density(rho.mat, tol=1e-9)
    _report("criterion 8 (validity gate on 101x101 grid)", failures == 0,
            f"{101 * 101} states all Hermitian/trace-1/PSD at 1e-9")


def test_criterion_9_analytic_mode_oracle():
    rng = np.random.default_rng(SEED)
    worst = 0.0
    for _ in range(1000):
        a, indist = random_params(rng)
        rho = build_rho(a, indist)
        p = degree_of_polarization(polarization_matrix(rho))
        p_hat = tomograph(rho, 1, seed=0, analytic=True).deg_pol_hat
        worst = max(worst, abs(p - p_hat))
    _report("criterion 9 (analytic-mode tomography oracle, 1e3 states)",
            worst <= 1e-12, f"max |P_hat - P| = {worst:.3e} (tol 1e-12)")
