import math

import numpy as np
import pytest

import ahg


def theta2():
    return ahg.AnisotropyMatrix(np.array([[1.0, 0.3], [0.3, 0.8]], dtype=complex))


def test_identity_ground_state():
    t = ahg.AnisotropyMatrix.identity(1)
    v = ahg.eval(t, [0], np.array([0.5 + 0j]))
    assert v == pytest.approx(math.pi**-0.25 * math.exp(-0.125), rel=1e-14)


def test_eval_points_matches_scalar_eval():
    t = theta2()
    pts = np.array([[0.1, -0.2], [0.7, 0.4], [-1.0, 0.3]], dtype=complex)
    vec = ahg.eval_points(t, [2, 1], pts)
    for row, v in zip(pts, vec):
        assert v == pytest.approx(ahg.eval(t, [2, 1], row), abs=1e-15)


def test_indefinite_theta_is_domain_error():
    with pytest.raises(ahg.DomainError):
        ahg.AnisotropyMatrix(np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex))
    assert issubclass(ahg.DomainError, ahg.AhgError)


def test_generating_function_closed_form():
    t = theta2()
    x = np.array([0.2, -0.1], dtype=complex)
    r = np.array([0.3, 0.5], dtype=complex)
    s = ahg.generating_sum(t, x, r, 14)
    c = ahg.generating_closed(t, x, r)
    assert abs(s - c) < 1e-12 * abs(c)


def test_fourier_closed_against_quadrature():
    t = theta2()
    mode = ahg.lct_closed(ahg.LctParams.ft(), t, [1, 1])
    zeta = np.array([0.4, -0.2])

    def f(r):
        return ahg.eval(t, [1, 1], r)

    num = ahg.lct_numeric(ahg.LctParams.ft(), f, zeta.astype(complex), t, 48)
    assert abs(mode(zeta.astype(complex)) - num) < 1e-10
    # Unitary-normalized Fourier transform differs by (sqrt(-i))^n.
    ft = ahg.fourier_closed(t, [1, 1])
    assert abs(ft(zeta.astype(complex)) - 1j * num) < 1e-10


def test_laplace_closed_against_lct_quadrature():
    t = theta2()
    mode = ahg.laplace_closed(t, [2, 1])
    z = np.array([0.5 + 0j, -0.3 + 0j])

    def f(r):
        return ahg.eval(t, [2, 1], r)

    num = -2 * math.pi * ahg.lct_numeric(ahg.LctParams.laplace(), f, z, t, 64)
    assert abs(mode(z) - num) < 1e-8


def test_wvd_ground_state_is_real_positive():
    t = ahg.AnisotropyMatrix.identity(1)
    w = ahg.wvd_pair(t, [0], [0], np.array([0.2]), np.array([-0.1]))
    assert abs(w.imag) < 1e-14
    assert w.real > 0


def test_gauss_hermite_integrates_polynomials():
    rule = ahg.gauss_hermite_rule(20)
    nodes, weights = np.asarray(rule.nodes), np.asarray(rule.weights)
    assert np.sum(weights * nodes**4) == pytest.approx(0.75 * math.sqrt(math.pi), rel=1e-13)


def test_expand_recovers_single_mode():
    t = theta2()

    def f(r):
        return ahg.eval(t, [1, 0], r)

    expansion, residual, _ = ahg.expand(f, t, 3, 32)
    assert abs(expansion.coefficient([1, 0]) - 1) < 1e-10
    assert residual < 1e-8


def test_run_suite_reports_passing_checks():
    assert "all" in ahg.suite_names()
    results = ahg.run_suite("zero")
    assert results and all(r["passed"] for r in results)
    with pytest.raises(ahg.UsageError):
        ahg.run_suite("nope")
