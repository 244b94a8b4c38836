"""Principal-branch inverses of the thirteen Jacobian elliptic functions.

Each inverse is an algebraic reduction to the Jacobi-form integral of the
first kind F(x | m): the quotient code determines sn as a radical of the
input, F supplies the principal value in [0, K], and odd codes carry the
sign of the input.  No iteration is involved.
"""

from __future__ import annotations

import math

from .core import NAN, is_nan
from .integrals import melF, mpelF

__all__ = ["inverse_glaisher", "mijam",
           "mijsn", "mijcn", "mijdn", "mijcd", "mijcs", "mijdc",
           "mijds", "mijnc", "mijnd", "mijns", "mijsc", "mijsd"]


def mijam(phi: float, m: float) -> float:
    """Inverse amplitude: the Legendre-form integral F(phi | m)."""
    return mpelF(phi, m)


def _sqrt_or_nan(v: float) -> float:
    if is_nan(v) or v < 0.0:
        return NAN
    return math.sqrt(v)


def _sn_magnitude(code: str, x: float, m: float) -> float:
    """|sn u| implied by |pq(u)| = |x|; NaN when the radicand is negative."""
    ax = abs(x)
    x2 = x * x
    if code == "sn":
        return ax
    if code == "ns":
        return NAN if ax == 0.0 else 1.0 / ax
    if code == "cn":
        return _sqrt_or_nan(1.0 - x2)
    if code == "nc":
        return NAN if ax < 1.0 else _sqrt_or_nan(1.0 - 1.0 / x2)
    if code == "dn":
        if m == 0.0:
            return 0.0 if x == 1.0 else NAN
        return _sqrt_or_nan((1.0 - x2) / m)
    if code == "nd":
        if m == 0.0:
            return 0.0 if x == 1.0 else NAN
        den = m * x2
        return NAN if den == 0.0 else _sqrt_or_nan((x2 - 1.0) / den)
    if code == "sc":
        return ax / math.sqrt(1.0 + x2)
    if code == "cs":
        return 1.0 / math.sqrt(1.0 + x2)
    if code == "sd":
        den = 1.0 + m * x2
        return NAN if den == 0.0 else _sqrt_or_nan(x2 / den)
    if code == "ds":
        den = m + x2
        return NAN if den == 0.0 else _sqrt_or_nan(1.0 / den)
    if code == "cd":
        den = 1.0 - m * x2
        return NAN if den == 0.0 else _sqrt_or_nan((1.0 - x2) / den)
    if code == "dc":
        den = x2 - m
        return NAN if den == 0.0 else _sqrt_or_nan((x2 - 1.0) / den)
    raise ValueError(f"unknown Glaisher code: {code!r}")


_ODD = frozenset({"sn", "sc", "sd", "cs", "ds", "ns"})


def inverse_glaisher(code: str, x: float, m: float) -> float:
    """Principal inverse u with pq(u | m) = x; u in [0, K] (odd: [-K, K])."""
    x = float(x)
    m = float(m)
    if is_nan(x) or is_nan(m):
        return NAN
    s = _sn_magnitude(code, x, m)
    if is_nan(s):
        return NAN
    u = melF(s, m)
    if is_nan(u):
        return NAN
    if code in _ODD and x < 0.0:
        return -u
    return u


def mijsn(x, m):
    """Inverse sn: identical to the Jacobi-form integral F(x | m)."""
    return melF(float(x), float(m))


def _make(code):
    def inv(x, m, _code=code):
        return inverse_glaisher(_code, x, m)
    inv.__name__ = f"mij{code}"
    inv.__qualname__ = inv.__name__
    inv.__doc__ = f"Principal-branch inverse of the Jacobian function {code}."
    return inv


mijcn = _make("cn")
mijdn = _make("dn")
mijcd = _make("cd")
mijcs = _make("cs")
mijdc = _make("dc")
mijds = _make("ds")
mijnc = _make("nc")
mijnd = _make("nd")
mijns = _make("ns")
mijsc = _make("sc")
mijsd = _make("sd")
