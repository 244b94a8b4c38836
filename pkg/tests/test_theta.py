import math

import pytest

from conftest import ulps
from ellipkit.jacobi import sncndn
from ellipkit.theta import (elnome, ielnome, jtheta, jtheta1, jtheta2,
                            jtheta3, jtheta4, mnome, mnthetaC, mnthetaD,
                            mnthetaN, mnthetaS, nthetaC, nthetaS)


def test_q_zero_collapses():
    assert jtheta3(0.4, 0.0) == 1.0
    assert jtheta1(0.4, 0.0) == 0.0
    assert jtheta2(0.4, 0.0) == 0.0
    assert jtheta4(0.4, 0.0) == 1.0


def test_frozen_series_value():
    # 50-term series summed in extended precision
    assert jtheta3(0.0, math.exp(-math.pi)) == pytest.approx(
        1.0864348112133080146, rel=1e-14)


def test_parity():
    q = 0.3
    for x in (0.7, 1.9):
        assert jtheta1(-x, q) == -jtheta1(x, q)
        assert jtheta2(-x, q) == jtheta2(x, q)
        assert jtheta3(-x, q) == jtheta3(x, q)
        assert jtheta4(-x, q) == jtheta4(x, q)


def test_periodicity():
    # theta3 has period pi; checked where the half-ulp rounding of x + pi
    # is not amplified (the bound at larger q scales with the condition
    # number of the series, not with our reduction)
    for q in (0.05, 0.2):
        for x in (0.37, 1.1, -2.0, 14.5):
            a = jtheta3(x + math.pi, q)
            b = jtheta3(x, q)
            # the rounding error of x + pi itself contributes ~1 ulp on
            # top of the series evaluation at both points
            assert ulps(a, b) <= 4.0
    # the quasi-sign rule for theta1
    assert jtheta1(0.4 + math.pi, 0.3) == pytest.approx(
        -jtheta1(0.4, 0.3), rel=1e-13)


def test_jacobi_identity_at_zero():
    for q in (0.05, 0.3, 0.6, 0.9):
        t2 = jtheta2(0.0, q)
        t3 = jtheta3(0.0, q)
        t4 = jtheta4(0.0, q)
        assert abs(t2 ** 4 + t4 ** 4 - t3 ** 4) <= 1e-12 * t3 ** 4


def test_domain_policy():
    assert math.isnan(jtheta3(0.4, -0.1))
    assert math.isnan(jtheta3(0.4, 1.0))
    assert math.isnan(jtheta3(0.4, 0.9995))   # robustness cap near q = 1
    assert math.isnan(jtheta1(math.inf, 0.3))
    with pytest.raises(ValueError):
        jtheta(5, 0.1, 0.1)


def test_neville_normalization():
    q = 0.1
    assert nthetaC(0.0, q) == 1.0
    assert nthetaS(0.0, q) == 0.0
    assert mnthetaC(0.0, 0.36) == 1.0
    # unit slope of theta_s at zero
    h = 1e-6
    assert nthetaS(h, q) / h == pytest.approx(1.0, abs=1e-9)


def test_neville_jacobi_bridge():
    for m in (0.1, 0.3, 0.5, 0.7, 0.9):
        from ellipkit.integrals import melK
        kk = melK(m)
        for x in (-1.8 * kk, 0.35 * kk, 0.7, 1.9 * kk):
            s, c, d = sncndn(x, m)
            tn = mnthetaN(x, m)
            assert mnthetaS(x, m) / tn == pytest.approx(s, abs=1e-10)
            assert mnthetaC(x, m) / tn == pytest.approx(c, abs=1e-10)
            assert mnthetaD(x, m) / tn == pytest.approx(d, abs=1e-10)


def test_nome_trivial_points():
    assert mnome(0.0) == 0.0
    assert mnome(1.0) == 1.0
    assert elnome(math.sqrt(0.5)) == pytest.approx(math.exp(-math.pi),
                                                   rel=1e-14)
    assert math.isnan(mnome(-0.1))
    assert math.isnan(mnome(1.1))
    assert math.isnan(elnome(1.2))


def test_frozen_nome_value():
    # exp(-pi K(0.75)/K(0.25)) with both integrals from quadrature
    assert mnome(0.25) == pytest.approx(0.017972387008967267, rel=1e-13)


def test_inverse_nome():
    assert ielnome(0.0) == 0.0
    assert ielnome(math.exp(-math.pi)) == pytest.approx(math.sqrt(0.5),
                                                        abs=1e-12)
    assert math.isnan(ielnome(1.0))
    assert math.isnan(ielnome(-0.01))


def test_nome_round_trip():
    for i in range(100):
        k = 0.9999 * i / 99.0
        q = elnome(k)
        if math.isnan(q) or q > 0.999:
            continue
        assert abs(ielnome(q) - k) <= 1e-12
