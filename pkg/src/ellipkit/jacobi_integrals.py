"""Jacobi's second normal form: epsilon and Lambda, and their periodic
parts Z (zeta) and Omega.

These are evaluated on the reduced argument u = 2nK + u_r, |u_r| <= K, by
mapping to the Legendre forms through the amplitude phi = atan2(sn, cn);
the quasi-periodic increment is added back exactly.  Parameters m > 1 are
brought back to (0, 1) with the reciprocal-parameter transformation.
"""

from __future__ import annotations

import math

from .core import INF, NAN, is_nan, reduce_half_period, reduce_period
from .integrals import (
    _melE_complete,
    _melPi_complete,
    melK,
    mpelE,
    mpelF,
    mpelPi,
)
from .jacobi import sncndn

__all__ = ["mjepsilon", "mjlambda", "mJzeta", "mpJzeta", "mJomega", "mpJomega"]


def _reduced_amplitude(u: float, m: float) -> tuple[int, float, float]:
    """Return (n, u_r, phi) with u = 2nK + u_r and phi = am(u_r | m)."""
    kk = melK(m)
    n, ur = reduce_period(u, 2.0 * kk)
    s, c, d = sncndn(ur, m)
    if is_nan(s):
        return n, ur, NAN
    return n, ur, math.atan2(s, c)


def mjepsilon(u: float, m: float) -> float:
    """Jacobi epsilon, the integral of dn^2 from 0 to u."""
    u = float(u)
    m = float(m)
    if is_nan(u) or is_nan(m):
        return NAN
    if m == 0.0:
        return u
    if m == 1.0:
        return math.tanh(u)
    if not math.isfinite(u):
        return math.copysign(INF, u)
    if m > 1.0:
        rk = math.sqrt(m)
        return (1.0 - m) * u + rk * mjepsilon(rk * u, 1.0 / m)
    if m == -INF:
        return math.copysign(INF, u) if u != 0.0 else 0.0
    n, ur, phi = _reduced_amplitude(u, m)
    if is_nan(phi):
        return NAN
    val = mpelE(phi, m)
    if n:
        val += 2.0 * n * _melE_complete(m)
    return val


def mjlambda(u: float, nu: float, m: float) -> float:
    """Jacobi Lambda, the integral of 1/(1 - nu sn^2) from 0 to u."""
    u = float(u)
    nu = float(nu)
    m = float(m)
    if is_nan(u) or is_nan(nu) or is_nan(m):
        return NAN
    if nu == 0.0:
        return u
    if m == 1.0:
        return _lambda_m1(u, nu)
    if m > 1.0:
        rk = math.sqrt(m)
        return mjlambda(rk * u, nu / m, 1.0 / m) / rk
    if not math.isfinite(u):
        return math.copysign(INF, u) if nu < 1.0 else NAN
    n, ur, phi = _reduced_amplitude(u, m)
    if is_nan(phi):
        return NAN
    val = mpelPi(phi, nu, m)
    if n:
        val += 2.0 * n * _melPi_complete(nu, m)
    return val


def _lambda_m1(u: float, nu: float) -> float:
    """Closed forms at m = 1 where sn = tanh."""
    t = math.tanh(u)
    if nu == 1.0:
        # integrand cosh^2; sinh*cosh = sinh(2u)/2 overflows past ~355
        if abs(u) > 354.0:
            return math.copysign(INF, u)
        return 0.5 * (u + math.sinh(u) * math.cosh(u))
    q = math.sqrt(abs(nu))
    if nu > 0.0:
        if abs(q * t) >= 1.0:
            return math.copysign(INF, u)
        return (u - q * math.atanh(q * t)) / (1.0 - nu)
    return (u + q * math.atan(q * t)) / (1.0 - nu)


def mJzeta(u: float, m: float) -> float:
    """Jacobi zeta Z(u | m), the 2K-periodic part of epsilon."""
    u = float(u)
    m = float(m)
    if is_nan(u) or is_nan(m) or m > 1.0:
        return NAN
    if m == 0.0:
        return 0.0
    if m == 1.0:
        return math.tanh(u)
    if not math.isfinite(u):
        return NAN
    kk = melK(m)
    if kk == 0.0:  # m = -Inf: the period degenerates
        return NAN
    n, ur = reduce_period(u, 2.0 * kk)
    return mjepsilon(ur, m) - (_melE_complete(m) / kk) * ur


def mpJzeta(phi: float, m: float) -> float:
    """Legendre-form zeta: E(phi|m) - (E/K) F(phi|m), pi-periodic in phi."""
    phi = float(phi)
    m = float(m)
    if is_nan(phi) or is_nan(m) or m > 1.0:
        return NAN
    if m == 0.0:
        return 0.0
    if m == 1.0:
        return math.sin(phi) if abs(phi) < math.pi / 2.0 else NAN
    if not math.isfinite(phi):
        return NAN
    kk = melK(m)
    if kk == 0.0:  # m = -Inf: the period degenerates
        return NAN
    n, phi_r = reduce_half_period(phi)
    return mpelE(phi_r, m) - (_melE_complete(m) / kk) * mpelF(phi_r, m)


def mJomega(u: float, nu: float, m: float) -> float:
    """Omega(u, nu | m) = Lambda - (Pi/K) u, the 2K-periodic part of Lambda."""
    u = float(u)
    nu = float(nu)
    m = float(m)
    if is_nan(u) or is_nan(nu) or is_nan(m) or m > 1.0:
        return NAN
    if nu == 0.0:
        return 0.0
    if m == 1.0 or not math.isfinite(u):
        return NAN
    kk = melK(m)
    if kk == 0.0:  # m = -Inf: the period degenerates
        return NAN
    n, ur = reduce_period(u, 2.0 * kk)
    return mjlambda(ur, nu, m) - (_melPi_complete(nu, m) / kk) * ur


def mpJomega(phi: float, nu: float, m: float) -> float:
    """Legendre-form Omega: Pi(phi,nu|m) - (Pi(nu|m)/K) F(phi|m)."""
    phi = float(phi)
    nu = float(nu)
    m = float(m)
    if is_nan(phi) or is_nan(nu) or is_nan(m) or m > 1.0:
        return NAN
    if nu == 0.0:
        return 0.0
    if m == 1.0 or not math.isfinite(phi):
        return NAN
    kk = melK(m)
    if kk == 0.0:  # m = -Inf: the period degenerates
        return NAN
    n, phi_r = reduce_half_period(phi)
    return mpelPi(phi_r, nu, m) - (
        _melPi_complete(nu, m) / kk
    ) * mpelF(phi_r, m)
