import cmath
import math

import pytest

import qfourier as qf


@pytest.fixture
def p():
    return qf.QParams(0.5)


def test_theta0(p):
    assert abs(qf.theta0(p) - 0.85054116482456221) < 1e-12


def test_reciprocal(p):
    for z in (0.3, -0.5 + 0.2j, 0.7j):
        assert abs(qf.e_q2(z, p) * qf.E_q2(-z, p) - 1) < 1e-13


def test_pole_raises(p):
    with pytest.raises(qf.PoleProximity):
        qf.e_q2(4.0, p)
    # the domain errors share a base class
    with pytest.raises(qf.DomainError):
        qf.e_q2(4.0, p)


def test_sample_and_derivative(p):
    w = qf.Window(-4, 10)
    phi = qf.sample(lambda x: x * x, w, p)
    d = qf.q_derivative(phi, 1)
    assert d.window == qf.Window(-4, 9)
    for m in range(-4, 10):
        x = p.lattice_point(m)
        assert abs(d.at(m, qf.Sign.plus) - 1.25 * x) < 1e-12 * max(1, x)


def test_forward_of_basis_is_kernel_column(p):
    w = qf.Window(-6, 12)
    f = qf.fourier_forward(qf.basis(0, qf.Sign.plus, w, p))
    for m in (-3, 0, 4):
        s = p.lattice_point(m)
        expected = (1 - p.q2) * qf.E_q2(1j * (1 - p.q2) * p.q2 * s, p)
        assert abs(f.at(m, qf.Sign.plus) - expected) < 1e-12 * abs(expected)


def test_commutation(p):
    w = qf.default_transform_window(p)
    phi = qf.sample(lambda x: math.exp(-x * x), w, p)
    assert qf.commutation_check(phi, "dz", qf.Window(-3, 10)) < 1e-8


def test_table_and_parseval(p):
    rows = qf.transform_table(p, 1, 0.5)
    assert len(rows) == 7
    assert abs(rows[0].constant - 1 / (2 * qf.theta0(p))) < 1e-15
    psi = qf.sample(lambda s: cmath.exp(-s * s), qf.default_pairing_window(p), p)
    for row in rows:
        assert qf.parseval_check(row, psi) < 1e-6


def test_distribution_pairing(p):
    w = qf.Window(-10, 60)
    phi = qf.sample(lambda x: math.exp(-x * x) * (1 + x), w, p)
    jump = qf.dist_derivative(qf.Distribution.theta_plus() - qf.Distribution.theta_minus())
    assert abs(qf.pair(jump, phi) - 2 * qf.pair(qf.Distribution.delta(), phi)) < 1e-12
    # coefficients are conjugated by the pairing
    assert abs(qf.pair(qf.Distribution.delta() * 1j, phi) - (-1j) * phi.at(60, qf.Sign.plus)) < 1e-12


def test_verify_suite(p):
    results = qf.run_verify("ncorder", p)
    assert results and qf.verify_passed(results)
    assert all(r.exact for r in results)
