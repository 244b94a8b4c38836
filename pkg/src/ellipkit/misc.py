"""Lemniscate sine/cosine with inverses, and the Gudermannian pair.

The lemniscate functions are the m = 1/2 Jacobian case: sl(x) is
(sqrt(2)/2) sd(sqrt(2) x | 1/2) and cl(x) is cn(sqrt(2) x | 1/2), so
sl(0) = 0, cl(0) = 1 and sl'^2 = 1 - sl^4 both hold.  The inverses run
through the corresponding inverse Jacobian functions.  gd uses
arctan(sinh x) with an exp-based tail for |x| > 40 where sinh overflows.
"""

from __future__ import annotations

import math

from .core import INF, NAN, is_nan
from .inverse import mijcn, mijsd
from .jacobi import sncndn, safe_div

__all__ = ["gsl", "gcl", "igsl", "igcl", "gd", "igd"]

_SQRT2 = math.sqrt(2.0)


def gsl(x: float) -> float:
    """Lemniscate sine sl(x), odd and periodic with period 2*varpi."""
    x = float(x)
    if is_nan(x) or not math.isfinite(x):
        return NAN
    s, c, d = sncndn(_SQRT2 * x, 0.5)
    return 0.5 * _SQRT2 * safe_div(s, d)


def gcl(x: float) -> float:
    """Lemniscate cosine cl(x) = sl(varpi/2 - x), even."""
    x = float(x)
    if is_nan(x) or not math.isfinite(x):
        return NAN
    s, c, d = sncndn(_SQRT2 * x, 0.5)
    return c


def igsl(x: float) -> float:
    """Inverse lemniscate sine: the arc length integral of 1/sqrt(1-t^4)."""
    x = float(x)
    if is_nan(x) or abs(x) > 1.0:
        return NAN
    return mijsd(_SQRT2 * x, 0.5) / _SQRT2


def igcl(x: float) -> float:
    """Inverse lemniscate cosine on the principal branch [0, varpi/2]."""
    x = float(x)
    if is_nan(x) or abs(x) > 1.0:
        return NAN
    return mijcn(x, 0.5) / _SQRT2


def gd(x: float) -> float:
    """Gudermannian gd(x) = arctan(sinh x), total on the extended reals."""
    x = float(x)
    if is_nan(x):
        return NAN
    if abs(x) <= 40.0:
        return math.atan(math.sinh(x))
    if not math.isfinite(x):
        return math.copysign(math.pi / 2.0, x)
    # tail: pi/2 - gd(|x|) = 2 atan(exp(-|x|)), safe from sinh overflow
    return math.copysign(math.pi / 2.0 - 2.0 * math.atan(math.exp(-abs(x))), x)


def igd(x: float) -> float:
    """Inverse Gudermannian, asinh(tan x) on (-pi/2, pi/2)."""
    x = float(x)
    if is_nan(x):
        return NAN
    ax = abs(x)
    if ax < math.pi / 2.0:
        return math.asinh(math.tan(x))
    if ax == math.pi / 2.0:
        return math.copysign(INF, x)
    return NAN
