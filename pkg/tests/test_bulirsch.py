import math

import pytest

from ellipkit.bulirsch import cel, cel1, cel2, cel3, el1, el2, el3
from ellipkit.integrals import melK
from ellipkit.oracle import reference

# frozen from the quadrature reference evaluator
FROZEN = [
    (el1, (1.3, 0.4), 1.0405127641432999),
    (el2, (1.3, 0.4, 1.1, 0.7), 1.0370719073586008),
    (el3, (1.3, 0.4, 0.7), 1.132834348569968),
    (cel, (0.2, 0.8, 1.1, 0.9), 3.3671651141253047),
    (cel1, (0.3,), 2.6277733320843444),
]


@pytest.mark.parametrize("fn,args,want", FROZEN)
def test_frozen_reference_values(fn, args, want):
    assert fn(*args) == pytest.approx(want, rel=1e-12)


def test_cel1_is_complete_first_kind():
    for m in (-10.0, -1.0, 0.0, 0.5, 0.99):
        kc = math.sqrt(1.0 - m)
        assert cel1(kc) == pytest.approx(melK(m), rel=1e-12)


def test_kc_sign_invariance():
    # kc enters only through kc^2
    assert el1(1.3, -0.4) == el1(1.3, 0.4)
    assert cel(-0.2, 0.8, 1.1, 0.9) == cel(0.2, 0.8, 1.1, 0.9)
    assert el3(1.3, -0.4, 0.7) == el3(1.3, 0.4, 0.7)


def test_complete_as_infinite_limit():
    kc = 0.35
    assert el1(math.inf, kc) == pytest.approx(cel1(kc), rel=1e-14)
    assert el2(math.inf, kc, 1.3, 0.4) == pytest.approx(
        cel2(kc, 1.3, 0.4), rel=1e-13)
    assert el3(math.inf, kc, 0.7) == pytest.approx(cel3(kc, 0.7), rel=1e-13)


def test_odd_in_x():
    for fn, args in [(el1, (0.4,)), (el2, (0.4, 1.1, 0.7)),
                     (el3, (0.4, 0.7))]:
        assert fn(-1.3, *args) == -fn(1.3, *args)
        assert fn(0.0, *args) == 0.0


def test_negative_characteristic_principal_value():
    # cel with p < 0 exists as a Cauchy principal value
    v = cel(0.5, -0.25, 1.0, 1.0)
    assert math.isfinite(v)
    # frozen from a symmetric-cutoff principal-value quadrature
    assert v == pytest.approx(-1.5285756626, abs=5e-7)


def test_oracle_agreement():
    for args in [(0.8, 0.1), (2.5, 0.9), (0.3, 0.999)]:
        assert el1(*args) == pytest.approx(reference("el1", *args),
                                           rel=1e-12)
    assert cel3(0.6, 1.7) == pytest.approx(reference("cel3", 0.6, 1.7),
                                           rel=1e-12)


def test_degenerate_kc():
    assert el1(1.5, 0.0) == pytest.approx(math.asinh(1.5), rel=1e-14)
    assert cel1(0.0) == math.inf
    # cel(0, p, a, 0) closed forms
    assert cel(0.0, 2.0, 1.0, 0.0) == pytest.approx(
        math.atan(1.0) / 1.0, rel=1e-14)


def test_nan_policy():
    assert math.isnan(cel(math.nan, 1.0, 1.0, 1.0))
    assert math.isnan(el3(1.0, 0.5, -2.0))   # 1 + p x^2 <= 0
    assert math.isnan(cel(0.5, 0.0, 1.0, 1.0))
