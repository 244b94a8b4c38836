"""Bulirsch's elliptic integrals: the incomplete el1/el2/el3 and the
complete cel family.

cel and el1 use Bulirsch's Landen/Bartky iterations with the classical
sqrt(eps) stopping constant and an iteration cap.  el2 and el3 are reduced
exactly (t = tan theta) to the Legendre forms, which the Carlson kernels
evaluate; the complete members come from cel.  Results depend on kc only
through kc^2, enforced by taking |kc| up front.
"""

from __future__ import annotations

import math

from .core import INF, NAN, SQRT_EPS, is_nan
from .integrals import melB, melK, mpelB, mpelF, mpelPi

__all__ = ["el1", "el2", "el3", "cel", "cel1", "cel2", "cel3"]

_MAX_ITER = 40
_CB = 1e-18  # tiny stand-in when the el1 cotangent chain hits exactly zero


def cel(kc: float, p: float, a: float, b: float) -> float:
    """General complete elliptic integral cel(kc, p, a, b)."""
    kc = float(kc)
    p = float(p)
    a = float(a)
    b = float(b)
    if is_nan(kc) or is_nan(p) or is_nan(a) or is_nan(b):
        return NAN
    kc = abs(kc)
    if kc == 0.0:
        if b == 0.0:
            return _cel_kc0(p, a)
        if p > 0.0:
            return math.copysign(INF, b / p)
        return NAN
    if p == 0.0:
        return NAN
    e = kc
    mu = 1.0
    if p > 0.0:
        p = math.sqrt(p)
        b = b / p
    else:
        # Bulirsch's reduction of negative p onto a positive one
        f = kc * kc
        q = 1.0 - f
        g = 1.0 - p
        f = f - p
        q = q * (b - a * p)
        p = math.sqrt(f / g)
        a = (a - b) / g
        b = -q / (g * g * p) + a * p
    it = 0
    while True:
        f = a
        a = b / p + a
        g = e / p
        b = 2.0 * (f * g + b)
        p = g + p
        g = mu
        mu = kc + mu
        if abs(g - kc) <= g * SQRT_EPS:
            break
        kc = 2.0 * math.sqrt(e)
        e = kc * mu
        it += 1
        if it > _MAX_ITER or mu != mu:
            return NAN
    return (math.pi / 2.0) * (a * mu + b) / (mu * (mu + p))


def _cel_kc0(p: float, a: float) -> float:
    """cel at kc = 0 with b = 0 (the only convergent kc = 0 case)."""
    if p > 1.0:
        r = math.sqrt(p - 1.0)
        return a * math.atan(r) / r
    if p == 1.0:
        return a
    if p > 0.0:
        r = math.sqrt(1.0 - p)
        return a * math.atanh(r) / r
    return NAN


def cel1(kc: float) -> float:
    """Complete integral of the first kind, cel1(kc) = el1(inf, kc)."""
    return cel(kc, 1.0, 1.0, 1.0)


def cel2(kc: float, a: float, b: float) -> float:
    """Complete integral cel2(kc, a, b) = el2(inf, kc, a, b)."""
    return cel(kc, 1.0, a, b)


def cel3(kc: float, p: float) -> float:
    """Complete integral of the third kind, cel3(kc, p) = el3(inf, kc, p)."""
    return cel(kc, p, 1.0, 1.0)


def el1(x: float, kc: float) -> float:
    """Incomplete integral of the first kind in Bulirsch form."""
    x = float(x)
    kc = float(kc)
    if is_nan(x) or is_nan(kc):
        return NAN
    if x == 0.0:
        return 0.0
    kc = abs(kc)
    if not math.isfinite(x):
        if kc == 0.0:
            return INF
        v = cel1(kc)
        return math.copysign(v, x)
    if kc == 0.0:
        return math.asinh(x)
    y = abs(1.0 / x)
    mu = 1.0
    ell = 0
    it = 0
    while True:
        e = mu * kc
        g = mu
        mu = kc + mu
        y = y - e / y
        if y == 0.0:
            y = math.sqrt(e) * _CB
        if abs(g - kc) > SQRT_EPS * g:
            kc = 2.0 * math.sqrt(e)
            ell = 2 * ell
            if y < 0.0:
                ell += 1
            it += 1
            if it > _MAX_ITER or y != y:
                return NAN
            continue
        break
    if y < 0.0:
        ell += 1
    e = (math.atan(mu / y) + math.pi * ell) / mu
    return e if x > 0.0 else -e


def el2(x: float, kc: float, a: float, b: float) -> float:
    """Incomplete integral el2(x, kc, a, b) = a*I1 + b*I2."""
    x = float(x)
    kc = float(kc)
    a = float(a)
    b = float(b)
    if is_nan(x) or is_nan(kc) or is_nan(a) or is_nan(b):
        return NAN
    kc = abs(kc)
    m = 1.0 - kc * kc
    if not math.isfinite(x):
        v = b * melK(m) + (a - b) * melB(m)
        return math.copysign(1.0, x) * v if v == v else NAN
    phi = math.atan(x)
    return b * mpelF(phi, m) + (a - b) * mpelB(phi, m)


def el3(x: float, kc: float, p: float) -> float:
    """Incomplete integral of the third kind el3(x, kc, p)."""
    x = float(x)
    kc = float(kc)
    p = float(p)
    if is_nan(x) or is_nan(kc) or is_nan(p):
        return NAN
    kc = abs(kc)
    if not math.isfinite(x):
        v = cel3(kc, p)
        return math.copysign(v, x) if v == v else NAN
    if 1.0 + p * x * x <= 0.0:
        return NAN
    phi = math.atan(x)
    return mpelPi(phi, 1.0 - p, 1.0 - kc * kc)
