"""Jacobian elliptic functions: the sncndn core, the amplitude am, and the
twelve Glaisher quotient functions, for any real parameter m.

The core runs a descending Landen (Gauss) transformation with the classical
sqrt(eps) stopping constant and rebuilds the amplitude chain by an arctan
recurrence.  Before iterating, the argument is reduced modulo the fundamental
period 4K(m) with a compensated subtraction so that huge arguments keep
quasi-periodic accuracy.  Parameters outside [0, 1] are mapped back in by the
imaginary-modulus (m < 0) and reciprocal-parameter (m > 1) transformations,
which keep all arithmetic real.
"""

from __future__ import annotations

import math

from .core import INF, NAN, SQRT_EPS, is_nan, reduce_period, safe_div
from .integrals import melK

__all__ = ["sncndn", "mjam", "glaisher", "GLAISHER_CODES"]

GLAISHER_CODES = (
    "sn", "cn", "dn", "cd", "cs", "dc", "ds", "nc", "nd", "ns", "sc", "sd",
)

_ODD_CODES = frozenset({"sn", "sc", "sd", "cs", "ds", "ns"})

_MAX_LANDEN = 40


def _sncndn_landen(u: float, m: float) -> tuple[float, float, float]:
    """Bulirsch's sncndn recurrence for 0 < m < 1 (kc^2 = 1 - m > 0)."""
    if abs(u) < 1e-8:
        # series; the arctan chain overflows for tiny sn
        u2 = u * u
        return (
            u * (1.0 - (1.0 + m) * u2 / 6.0),
            1.0 - 0.5 * u2,
            1.0 - 0.5 * m * u2,
        )
    emc = 1.0 - m
    a = 1.0
    dn = 1.0
    em = []
    en = []
    n = 0
    while True:
        emc = math.sqrt(emc)
        c = 0.5 * (a + emc)
        em.append(a)
        en.append(emc)
        if abs(a - emc) <= SQRT_EPS * a:
            break
        emc = emc * a
        a = c
        n += 1
        if n > _MAX_LANDEN or c != c:
            return NAN, NAN, NAN
    u = c * u
    sn = math.sin(u)
    cn = math.cos(u)
    if sn != 0.0:
        a = cn / sn
        c = a * c
        for em_i, en_i in zip(reversed(em), reversed(en)):
            b = em_i
            a = a * c
            c = c * dn
            dn = (en_i + a) / (b + a)
            a = c / b
        a = 1.0 / math.sqrt(c * c + 1.0)
        sn = a if sn >= 0.0 else -a
        cn = c * sn
    return sn, cn, dn


def sncndn(x: float, m: float) -> tuple[float, float, float]:
    """Simultaneous sn, cn, dn of x with parameter m (any real m)."""
    x = float(x)
    m = float(m)
    if is_nan(x) or is_nan(m) or not math.isfinite(x):
        return NAN, NAN, NAN
    if m == 0.0:
        return math.sin(x), math.cos(x), 1.0
    if m == 1.0:
        # sech via exponentials: underflows to 0 where cosh would overflow
        e = math.exp(-abs(x))
        cn = 2.0 * e / (1.0 + e * e)
        return math.tanh(x), cn, cn
    if m < 0.0:
        # imaginary-modulus transformation onto m2 = -m/(1-m) in (0,1)
        c = math.sqrt(1.0 - m)
        m2 = -m / (1.0 - m)
        s, cc, d = sncndn(c * x, m2)
        if is_nan(s):
            return NAN, NAN, NAN
        return safe_div(s, d * c), safe_div(cc, d), safe_div(1.0, d)
    if m > 1.0:
        # reciprocal-parameter transformation onto 1/m in (0,1)
        rk = math.sqrt(m)
        s, cc, d = sncndn(rk * x, 1.0 / m)
        if is_nan(s):
            return NAN, NAN, NAN
        return s / rk, d, cc
    if not math.isfinite(m):
        return NAN, NAN, NAN
    # reduce modulo the fundamental period 4K (covers dn's 2K as well)
    kk = melK(m)
    if math.isfinite(kk):
        n, x = reduce_period(x, 4.0 * kk)
    return _sncndn_landen(x, m)


def mjam(x: float, m: float) -> float:
    """Jacobi amplitude am(x | m) for m <= 1 (monotone real branch)."""
    x = float(x)
    m = float(m)
    if is_nan(x) or is_nan(m):
        return NAN
    if not math.isfinite(x):
        if m <= 0.0 or m >= 1.0:
            return NAN
        return math.copysign(INF, x)
    if m == 0.0:
        return x
    if m == 1.0:
        if abs(x) > 40.0:
            # exponential tail of the Gudermannian; sinh would overflow
            return math.copysign(
                math.pi / 2.0 - 2.0 * math.atan(math.exp(-abs(x))), x)
        return math.atan(math.sinh(x))
    if m > 1.0:
        # real-monotone only on the central strip |sqrt(m) x| <= K(1/m)
        rk = math.sqrt(m)
        if abs(rk * x) > melK(1.0 / m):
            return NAN
        s, c, d = sncndn(x, m)
        return math.atan2(s, c)
    kk = melK(m)
    n, xr = reduce_period(x, 2.0 * kk)
    s, c, d = sncndn(xr, m)
    if is_nan(s):
        return NAN
    # atan2 keeps full accuracy near the quarter period where asin(sn) loses
    # half the digits
    return math.atan2(s, c) + n * math.pi


def glaisher(code: str, x: float, m: float) -> float:
    """Value of the Glaisher quotient function named by a two-letter code."""
    if code not in GLAISHER_CODES:
        raise ValueError(f"unknown Glaisher code: {code!r}")
    s, c, d = sncndn(x, m)
    parts = {"s": s, "c": c, "d": d, "n": 1.0}
    p, q = parts[code[0]], parts[code[1]]
    return safe_div(p, q)
