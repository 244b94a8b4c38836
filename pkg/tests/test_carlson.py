import math

import numpy as np
import pytest

from conftest import ulps
from ellipkit.carlson import rc, rd, rf, rg, rj
from ellipkit.oracle import reference

# values frozen from the quadrature reference evaluator
FROZEN = {
    ("rf", (0.5, 1.0, 2.0)): 0.9688576532724553,
    ("rc", (2.0, 3.0)): 0.6154797086703871,
    ("rd", (0.5, 1.0, 2.0)): 0.6176739675072548,
    ("rj", (0.5, 1.0, 2.0, 3.0)): 0.4669800994714269,
    ("rg", (0.5, 1.0, 2.0)): 1.0644391613956363,
}

FUNCS = {"rf": rf, "rc": rc, "rd": rd, "rj": rj, "rg": rg}


@pytest.mark.parametrize("key", sorted(FROZEN))
def test_frozen_reference_values(key):
    name, args = key
    assert FUNCS[name](*args) == pytest.approx(FROZEN[key], rel=1e-13)


def test_degenerate_points():
    assert rf(1.0, 1.0, 1.0) == pytest.approx(1.0, abs=1e-15)
    assert rc(1.0, 1.0) == pytest.approx(1.0, abs=1e-15)
    assert rd(1.0, 1.0, 1.0) == pytest.approx(1.0, abs=1e-15)
    # lemniscatic constants
    assert rf(0.0, 1.0, 2.0) == pytest.approx(1.3110287771460600, rel=1e-14)


def test_homogeneity():
    # rf(ax,ay,az) = rf(x,y,z)/sqrt(a);  rj picks up a^{-3/2}
    rng = np.random.default_rng(7)
    worst = 0.0
    for _ in range(400):
        x, y, z, p = rng.uniform(0.01, 10.0, 4)
        a = rng.uniform(0.1, 50.0)
        worst = max(worst, ulps(rf(a * x, a * y, a * z) * math.sqrt(a),
                                rf(x, y, z)))
        worst = max(worst, ulps(rj(a * x, a * y, a * z, a * p) * a ** 1.5,
                                rj(x, y, z, p)))
    assert worst <= 8.0


def test_permutation_symmetry():
    rng = np.random.default_rng(11)
    for _ in range(200):
        x, y, z = rng.uniform(0.0, 5.0, 3)
        vals = {rf(x, y, z), rf(y, z, x), rf(z, x, y), rf(y, x, z)}
        assert max(vals) - min(vals) <= 4.0 * math.ulp(max(vals))
        g = {rg(x, y, z), rg(z, y, x), rg(y, x, z)}
        assert max(g) - min(g) <= 4.0 * math.ulp(max(g) + 1.0)


def test_oracle_agreement_wide_range():
    rng = np.random.default_rng(13)
    for _ in range(50):
        x, y, z = np.exp(rng.uniform(-6, 6, 3))
        ref = reference("rf", x, y, z)
        assert rf(x, y, z) == pytest.approx(ref, rel=1e-10)
    for _ in range(25):
        x, y, z, p = np.exp(rng.uniform(-4, 4, 4))
        ref = reference("rj", x, y, z, p)
        assert rj(x, y, z, p) == pytest.approx(ref, rel=1e-10)


def test_domain_policy():
    assert math.isnan(rf(-1.0, 1.0, 1.0))
    assert math.isnan(rf(0.0, 0.0, 1.0))      # two zeros diverge
    assert math.isnan(rc(1.0, 0.0))
    assert math.isnan(rd(1.0, 1.0, 0.0))
    assert math.isnan(rj(1.0, 1.0, 1.0, 0.0))
    assert math.isnan(rf(math.nan, 1.0, 1.0))
    assert rf(math.inf, 1.0, 1.0) == 0.0
    assert rg(0.0, 0.0, 0.0) == 0.0
    assert rg(0.0, 0.0, 4.0) == pytest.approx(1.0, rel=1e-15)


def test_special_connections():
    # rc log/arctan closed forms
    x = 3.0
    assert rc(x, x) == pytest.approx(1.0 / math.sqrt(x), rel=1e-14)
    assert rc(0.0, 1.0) == pytest.approx(math.pi / 2.0, rel=1e-14)
