import math

import pytest

from ellipkit.integrals import melF, melK
from ellipkit.inverse import (inverse_glaisher, mijam, mijcd, mijcn, mijdn,
                              mijns, mijsc, mijsd, mijsn)
from ellipkit.jacobi import GLAISHER_CODES, glaisher, mjam


def test_sn_inverse_is_first_kind_integral():
    for x, m in [(0.3, 0.5), (-0.8, 0.2), (0.99, -1.0)]:
        assert mijsn(x, m) == melF(x, m)
    assert inverse_glaisher("sn", 1.0, 0.5) == pytest.approx(melK(0.5),
                                                             rel=1e-14)


def test_published_round_trip():
    # six-digit reference point: sn(0.23 | 0.999^2) = 0.226032
    u = inverse_glaisher("sn", 0.226032, 0.999 ** 2)
    assert u == pytest.approx(0.23, abs=5e-6)


@pytest.mark.parametrize("code", GLAISHER_CODES)
@pytest.mark.parametrize("m", [0.12, 0.5, 0.93])
def test_round_trips_all_codes(code, m):
    kk = melK(m)
    for frac in (0.08, 0.31, 0.55, 0.83, 0.97):
        u = frac * kk
        x = glaisher(code, u, m)
        back = inverse_glaisher(code, x, m)
        assert back == pytest.approx(u, rel=1e-9, abs=1e-9)


def test_odd_codes_carry_sign():
    m = 0.4
    for code in ("sn", "sc", "sd", "cs", "ds", "ns"):
        x = glaisher(code, 0.6, m)
        assert inverse_glaisher(code, -x, m) == pytest.approx(
            -inverse_glaisher(code, x, m), rel=1e-15)


def test_amplitude_inverse():
    m = 0.35
    for u in (0.2, 0.9, 1.4):
        phi = mjam(u, m)
        assert mijam(phi, m) == pytest.approx(u, rel=1e-13)


def test_domain_policy():
    assert math.isnan(mijsn(1.2, 0.5))     # |sn| <= 1
    assert math.isnan(mijcn(-1.5, 0.5))
    assert math.isnan(mijdn(1.1, 0.5))     # dn <= 1
    assert math.isnan(mijsd(math.nan, 0.5))
    assert math.isnan(mijns(0.5, 0.5))     # |ns| >= 1
    assert mijns(0.0, 0.5) == math.nan or math.isnan(mijns(0.0, 0.5))


def test_negative_parameter_round_trip():
    m = -2.0
    for code in ("sn", "cd", "sc"):
        x = glaisher(code, 0.45, m)
        assert inverse_glaisher(code, x, m) == pytest.approx(0.45, rel=1e-10)


def test_principal_branch_range():
    m = 0.6
    kk = melK(m)
    for code in GLAISHER_CODES:
        x = glaisher(code, 0.4 * kk, m)
        u = inverse_glaisher(code, x, m)
        assert -kk <= u <= kk


def test_cd_dc_edge():
    # cd(0) = 1 and dc(0) = 1 map back to u = 0
    assert inverse_glaisher("cd", 1.0, 0.3) == pytest.approx(0.0, abs=1e-15)
    assert inverse_glaisher("dc", 1.0, 0.3) == pytest.approx(0.0, abs=1e-15)
    assert mijsc(0.0, 0.3) == 0.0
