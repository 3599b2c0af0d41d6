import cmath
import math

import numpy as np
import pytest

from wpipol import linalg
from wpipol.errors import HermiticityError, NormalizationError, PositivityError, RangeError, TraceError
from wpipol.linalg import CMat2
from wpipol.states import (AmplitudePair, build_rho, build_rho_d, build_rho_id,
                           rho_from_json, rho_to_json, validate_density)


def test_amplitude_pair_renormalizes_float_noise():
    a = AmplitudePair(math.sqrt(0.5) * (1 + 3e-10), math.sqrt(0.5))
    assert a.p1 + a.p2 == pytest.approx(1.0, abs=1e-15)


def test_amplitude_pair_rejects_bad_norm():
    with pytest.raises(NormalizationError):
        AmplitudePair(1.0, 0.1)


def test_build_rho_id_single_path():
    rho = build_rho_id(AmplitudePair(1.0, 0.0))
    assert rho.mat == CMat2.diag(1 + 0j, 0j)


def test_build_rho_id_symmetric():
    s = math.sqrt(0.5)
    rho = build_rho_id(AmplitudePair(s, s))
    for e in (rho.mat.m11, rho.mat.m12, rho.mat.m21, rho.mat.m22):
        assert e == pytest.approx(0.5 + 0j)


def test_build_rho_id_offdiagonal_phase():
    # outer product computed by hand: rho12 = a1 * conj(a2)
    a = AmplitudePair(math.sqrt(0.7), math.sqrt(0.3) * cmath.exp(1j * math.pi / 4))
    rho = build_rho_id(a)
    assert abs(rho.mat.m12) == pytest.approx(math.sqrt(0.21), abs=1e-12)
    assert cmath.phase(rho.mat.m12) == pytest.approx(-math.pi / 4, abs=1e-12)
    assert cmath.phase(rho.mat.m21) == pytest.approx(math.pi / 4, abs=1e-12)
    assert abs(linalg.det(rho.mat)) <= 1e-12  # rank 1


def test_build_rho_d_examples():
    s = math.sqrt(0.5)
    sym = build_rho_d(AmplitudePair(s, s)).mat
    assert sym.m11.real == pytest.approx(0.5) and sym.m22.real == pytest.approx(0.5)
    assert sym.m12 == 0 and sym.m21 == 0
    assert build_rho_d(AmplitudePair(1.0, 0.0)).mat == CMat2.diag(1 + 0j, 0j)
    d = build_rho_d(AmplitudePair(math.sqrt(0.7), math.sqrt(0.3)))
    assert d.mat.m11.real == pytest.approx(0.7) and d.mat.m12 == 0


def test_build_rho_endpoints_and_midpoint():
    a = AmplitudePair(math.sqrt(0.5), math.sqrt(0.5))
    assert build_rho(a, 1.0).mat == build_rho_id(a).mat
    assert build_rho(a, 0.0).mat == build_rho_d(a).mat
    mid = build_rho(a, 0.5).mat
    assert mid.m11.real == pytest.approx(0.5)
    assert mid.m12 == pytest.approx(0.25 + 0j, abs=1e-15)


def test_build_rho_range_check():
    a = AmplitudePair(1.0, 0.0)
    with pytest.raises(RangeError):
        build_rho(a, 1.5)
    with pytest.raises(RangeError):
        build_rho(a, -0.1)


def test_build_rho_is_convex_combination_and_diag_independent_of_indist():
    rng = np.random.default_rng(7)
    for _ in range(300):
        p1 = rng.uniform(0, 1)
        ph = rng.uniform(0, 2 * math.pi)
        a = AmplitudePair(math.sqrt(p1), math.sqrt(1 - p1) * cmath.exp(1j * ph))
        indist = rng.uniform(0, 1)
        combo = linalg.add(linalg.scale(indist, build_rho_id(a).mat),
                           linalg.scale(1 - indist, build_rho_d(a).mat))
        rho = build_rho(a, indist)
        assert linalg.max_abs(linalg.sub(rho.mat, combo)) <= 1e-12
        assert rho.mat.m11 == build_rho(a, 0.0).mat.m11  # diagonal indist-independent
        validate_density(rho.mat)


def test_validate_density_accepts_and_rejects():
    validate_density(CMat2.diag(0.5, 0.5))
    with pytest.raises(PositivityError, match="eigenvalue"):
        validate_density(CMat2(0.5, 0.6, 0.6, 0.5))
    with pytest.raises(TraceError):
        validate_density(CMat2.diag(0.6, 0.6))
    with pytest.raises(HermiticityError):
        validate_density(CMat2(0.5, 0.3j, 0.3j, 0.5))


def test_rho_json_round_trip():
    a = AmplitudePair(math.sqrt(0.7), math.sqrt(0.3) * cmath.exp(1j * 0.9))
    rho = build_rho(a, 0.37)
    text = rho_to_json(rho)
    back = rho_from_json(text)
    assert linalg.max_abs(linalg.sub(back.mat, rho.mat)) == 0.0  # 17 digits are lossless


def test_rho_from_json_malformed():
    with pytest.raises(ValueError):
        rho_from_json('{"rho": [[1, 2], [3, 4]]}')
