import math

import numpy as np
import pytest

from wpipol import linalg
from wpipol.linalg import CMat2, adjoint, add, det, is_hermitian, is_psd, matmul, random_unitary, scale, trace


def mat(rows):
    return CMat2(rows[0][0], rows[0][1], rows[1][0], rows[1][1])


def test_trace_examples():
    assert trace(CMat2.identity()) == 2 + 0j
    assert trace(CMat2.diag(0.7, 0.3)) == pytest.approx(1 + 0j)
    assert trace(mat([[0.5, 0.5j], [-0.5j, 0.5]])) == pytest.approx(1 + 0j)


def test_det_examples():
    assert det(CMat2.identity()) == 1 + 0j
    assert det(CMat2.diag(0.5, 0.5)) == pytest.approx(0.25 + 0j)
    assert det(mat([[0.5, 0.5], [0.5, 0.5]])) == pytest.approx(0 + 0j)


def test_adjoint_example():
    m = adjoint(mat([[0, 1j], [0, 0]]))
    assert (m.m11, m.m12, m.m21, m.m22) == (0, 0, -1j, 0)


def test_matmul_identity_and_scale():
    m = mat([[1 + 2j, 3], [4j, -1]])
    assert matmul(CMat2.identity(), m) == m
    assert scale(2, CMat2.diag(1, 1)) == CMat2.diag(2 + 0j, 2 + 0j)


def test_adjoint_involution_exact():
    m = mat([[0.3 + 0.1j, -2j], [1.5, 0.7 - 0.2j]])
    assert adjoint(adjoint(m)) == m


def test_hermitian_and_psd_examples():
    assert is_hermitian(CMat2.diag(1, 0))
    assert is_psd(CMat2.diag(1, 0))
    assert not is_psd(mat([[1, 2], [2, 1]]))  # eigenvalues 3, -1


def test_psd_rejects_indefinite_matrix():
    m = mat([[0.5, 0.6], [0.6, 0.5]])
    # independent oracle: numpy eigensolver confirms a negative eigenvalue
    evals = np.linalg.eigvalsh(m.to_array())
    assert evals[0] == pytest.approx(-0.1)
    assert evals[1] == pytest.approx(1.1)
    assert not is_psd(m)
    lo, hi = linalg.eigvals_hermitian(m)
    assert lo == pytest.approx(-0.1) and hi == pytest.approx(1.1)


def test_trace_additive_det_multiplicative():
    rng = np.random.default_rng(3)
    for _ in range(500):
        a = CMat2.from_array(rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2)))
        b = CMat2.from_array(rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2)))
        assert trace(add(a, b)) == pytest.approx(trace(a) + trace(b), abs=1e-12)
        assert det(matmul(a, b)) == pytest.approx(det(a) * det(b), rel=1e-12, abs=1e-12)


def test_random_unitary_contract():
    for seed in range(20):
        u = random_unitary(seed)
        resid = linalg.max_abs(linalg.sub(matmul(u, adjoint(u)), CMat2.identity()))
        assert resid <= 1e-12


def test_random_unitary_deterministic_and_distinct():
    assert random_unitary(42) == random_unitary(42)
    seen = {(random_unitary(s).m11, random_unitary(s).m12) for s in range(100)}
    assert len(seen) == 100


def test_unitary_conjugation_preserves_trace_and_det():
    rng = np.random.default_rng(11)
    for seed in range(200):
        z = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
        h = CMat2.from_array(z + z.conj().T)  # Hermitian
        u = random_unitary(seed)
        conj = matmul(matmul(u, h), adjoint(u))
        assert trace(conj) == pytest.approx(trace(h), abs=1e-12)
        assert det(conj) == pytest.approx(det(h), rel=1e-12, abs=1e-12)
