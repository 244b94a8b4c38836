import math

import pytest


def ulps(a: float, b: float) -> float:
    """Distance |a-b| expressed in units of the last place of b."""
    if a == b:
        return 0.0
    if math.isnan(a) or math.isnan(b):
        return math.inf
    scale = math.ulp(abs(b)) if b != 0.0 else math.ulp(1.0)
    return abs(a - b) / scale


@pytest.fixture
def rng():
    import numpy as np
    return np.random.default_rng(20260824)
