"""Legendre- and Jacobi-form elliptic integrals, complete and incomplete.

All incomplete forms are backed by the Carlson symmetric integrals; the
Legendre forms apply the quasi-period reduction phi = n*pi + phi_r first so
that large amplitudes keep full accuracy.

Dispatching names: melB/melD/melE/melF/melPi accept either the complete
argument list (parameter only) or the Jacobi-form list (x first); the
Legendre forms carry the extra 'p' in their name (mpelF etc.).
"""

from __future__ import annotations

import math

import numpy as np
from numba import njit

from .carlson import rd, rf, rj
from .core import INF, NAN, is_nan, reduce_half_period

__all__ = [
    "melK", "melK_bulk", "melE", "melB", "melC", "melD", "melPi",
    "melCE", "melCK", "melCPi",
    "melF", "meld",
    "mpelB", "mpelD", "mpelE", "mpelF", "mpelPi",
    "mHlambda",
]


# ---------------------------------------------------------------------------
# complete integrals

@njit(cache=True)
def _melK(m: float) -> float:
    if m != m or m > 1.0:
        return math.nan
    if m == 1.0:
        return math.inf
    if m == -math.inf:
        return 0.0
    return rf(0.0, 1.0 - m, 1.0)


@njit(cache=True)
def _melK_bulk(m: np.ndarray, out: np.ndarray) -> None:
    for i in range(m.size):
        out[i] = _melK(m[i])


def melK(m: float) -> float:
    """Complete elliptic integral of the first kind K(m), -inf <= m <= 1."""
    return _melK(float(m))


def melK_bulk(m) -> np.ndarray:
    """Vector form of melK used by the throughput benchmark; element-wise
    identical to scalar calls."""
    arr = np.ascontiguousarray(m, dtype=np.float64)
    out = np.empty(arr.size)
    _melK_bulk(arr.ravel(), out)
    return out.reshape(arr.shape)


def _melE_complete(m: float) -> float:
    if is_nan(m) or m > 1.0:
        return NAN
    if m == 1.0:
        return 1.0
    if m == -INF:
        return INF
    y = 1.0 - m
    return rf(0.0, y, 1.0) - (m / 3.0) * rd(0.0, y, 1.0)


def _melD_complete(m: float) -> float:
    if is_nan(m) or m > 1.0:
        return NAN
    if m == 1.0:
        return INF
    if m == -INF:
        return 0.0
    return rd(0.0, 1.0 - m, 1.0) / 3.0


def _melB_complete(m: float) -> float:
    if is_nan(m) or m > 1.0:
        return NAN
    if m == 1.0:
        return 1.0
    if m == -INF:
        return 0.0
    return melK(m) - _melD_complete(m)


def melC(m: float) -> float:
    """Complete integral C(m) = int_0^{pi/2} sin^2 cos^2 (1-m sin^2)^{-3/2}."""
    m = float(m)
    if is_nan(m) or m > 1.0:
        return NAN
    if m == 1.0:
        return INF
    if m == -INF:
        return 0.0
    if abs(m) < 0.1:
        # hypergeometric series; the closed form below cancels near m = 0
        term = math.pi / 16.0
        total = term
        n = 0
        while True:
            term *= (n + 1.5) * (2 * n + 3) / ((n + 1.0) * (2 * n + 6)) * m
            new = total + term
            if new == total or n > 200:
                break
            total = new
            n += 1
        return total
    return ((2.0 - m) * melK(m) - 2.0 * _melE_complete(m)) / (m * m)


def _melPi_complete(nu: float, m: float) -> float:
    if is_nan(nu) or is_nan(m) or m > 1.0:
        return NAN
    if nu == 0.0:
        return melK(m)
    if nu == 1.0:
        return INF
    if m == 1.0:
        return INF if nu < 1.0 else NAN
    if m == -INF:
        return 0.0
    y = 1.0 - m
    return rf(0.0, y, 1.0) + (nu / 3.0) * rj(0.0, y, 1.0, 1.0 - nu)


def melCE(m: float) -> float:
    """Complementary complete integral E'(m) = E(1-m), m >= 0."""
    m = float(m)
    if is_nan(m) or m < 0.0:
        return NAN
    return _melE_complete(1.0 - m)


def melCK(m: float) -> float:
    """Complementary complete integral K'(m) = K(1-m), m >= 0."""
    m = float(m)
    if is_nan(m) or m < 0.0:
        return NAN
    return melK(1.0 - m)


def melCPi(nu: float, m: float) -> float:
    """Complementary complete integral Pi'(nu, m) = Pi(nu | 1-m), m >= 0."""
    m = float(m)
    if is_nan(m) or m < 0.0:
        return NAN
    return _melPi_complete(float(nu), 1.0 - m)


# ---------------------------------------------------------------------------
# Jacobi (x-argument) incomplete forms

def _jacobi_domain(x: float, m: float) -> bool:
    return 1.0 - x * x >= 0.0 and 1.0 - m * x * x >= 0.0


def _melF_x(x: float, m: float) -> float:
    if is_nan(x) or is_nan(m):
        return NAN
    if not _jacobi_domain(x, m):
        return NAN
    p = 1.0 - x * x
    q = 1.0 - m * x * x
    if p == 0.0 and q == 0.0:
        return math.copysign(INF, x)
    return x * rf(p, q, 1.0)


def _melD_x(x: float, m: float) -> float:
    if is_nan(x) or is_nan(m):
        return NAN
    if not _jacobi_domain(x, m):
        return NAN
    p = 1.0 - x * x
    q = 1.0 - m * x * x
    if p == 0.0 and q == 0.0:
        return math.copysign(INF, x)
    return (x * x * x / 3.0) * rd(p, q, 1.0)


def _melE_x(x: float, m: float) -> float:
    if is_nan(x) or is_nan(m):
        return NAN
    if not _jacobi_domain(x, m):
        return NAN
    p = 1.0 - x * x
    q = 1.0 - m * x * x
    if p == 0.0 and q == 0.0:
        # m = 1, x = +-1: integrand degenerates to 1
        return x
    return x * rf(p, q, 1.0) - (m / 3.0) * x ** 3 * rd(p, q, 1.0)


def _melB_x(x: float, m: float) -> float:
    if is_nan(x) or is_nan(m):
        return NAN
    if not _jacobi_domain(x, m):
        return NAN
    p = 1.0 - x * x
    q = 1.0 - m * x * x
    if p == 0.0 and q == 0.0:
        return x
    return x * rf(p, q, 1.0) - (x * x * x / 3.0) * rd(p, q, 1.0)


def _melPi_x(x: float, nu: float, m: float) -> float:
    if is_nan(x) or is_nan(nu) or is_nan(m):
        return NAN
    if not _jacobi_domain(x, m):
        return NAN
    if nu == 0.0:
        return _melF_x(x, m)
    p = 1.0 - x * x
    q = 1.0 - m * x * x
    if p == 0.0 and q == 0.0:
        return math.copysign(INF, x)
    return x * rf(p, q, 1.0) + (nu / 3.0) * x ** 3 * rj(p, q, 1.0, 1.0 - nu * x * x)


# ---------------------------------------------------------------------------
# Legendre (phi-argument) incomplete forms, with quasi-period reduction

def _legendre(kind: str, phi: float, nu: float, m: float) -> float:
    """Shared quasi-periodic evaluation of F/E/B/D/Pi in Legendre form."""
    if is_nan(phi) or is_nan(m) or (nu is not None and is_nan(nu)):
        return NAN
    if not math.isfinite(phi):
        if m > 1.0:
            return NAN
        # complete increment per half period is positive for F/E/B/D
        return math.copysign(INF, phi)
    if m > 1.0:
        # no quasi-periodicity: the real domain is a single strip
        lim = math.asin(min(1.0, 1.0 / math.sqrt(m)))
        if abs(phi) > lim:
            return NAN
        return _legendre_reduced(kind, phi, nu, m)
    if m == 1.0:
        return _legendre_m1(kind, phi, nu)
    if m == -INF:
        if phi == 0.0:
            return 0.0
        return math.copysign(INF, phi) if kind == "E" else 0.0
    n, phi_r = reduce_half_period(phi)
    val = _legendre_reduced(kind, phi_r, nu, m)
    if n == 0:
        return val
    if kind == "F":
        comp = melK(m)
    elif kind == "E":
        comp = _melE_complete(m)
    elif kind == "B":
        comp = _melB_complete(m)
    elif kind == "D":
        comp = _melD_complete(m)
    else:
        comp = _melPi_complete(nu, m)
    return val + 2.0 * n * comp


def _legendre_m1(kind: str, phi: float, nu: float) -> float:
    """Legendre forms at m = 1 (elementary antiderivatives; K(1) diverges)."""
    if abs(phi) >= math.pi / 2.0:
        if kind == "E":
            # E(phi|1) stays finite: sum of |sin| increments
            n, phi_r = reduce_half_period(phi)
            return 2.0 * n + math.sin(phi_r)
        return math.copysign(INF, phi)
    s = math.sin(phi)
    if kind == "F":
        return math.asinh(math.tan(phi))
    if kind == "E":
        return s
    if kind == "B":
        return s
    if kind == "D":
        return math.asinh(math.tan(phi)) - s
    # Pi(phi, nu | 1): the Jacobi form stays in-domain for |sin phi| < 1
    return _melPi_x(s, nu, 1.0)


def _legendre_reduced(kind: str, phi: float, nu: float, m: float) -> float:
    """|phi| <= pi/2 (plus rounding): direct Carlson evaluation."""
    s = math.sin(phi)
    c = math.cos(phi)
    c2 = c * c
    d2 = 1.0 - m * s * s
    if d2 < 0.0:
        return NAN
    if c2 == 0.0 or (abs(s) == 1.0 and d2 == 0.0):
        # amplitude at +-pi/2: complete values (or poles)
        if kind == "F":
            v = melK(m)
        elif kind == "E":
            v = _melE_complete(m)
        elif kind == "B":
            v = _melB_complete(m)
        elif kind == "D":
            v = _melD_complete(m)
        else:
            v = _melPi_complete(nu, m)
        return math.copysign(1.0, s) * v if v == v else NAN
    if kind == "F":
        return s * rf(c2, d2, 1.0)
    if kind == "E":
        return s * rf(c2, d2, 1.0) - (m / 3.0) * s ** 3 * rd(c2, d2, 1.0)
    if kind == "B":
        return s * rf(c2, d2, 1.0) - (s ** 3 / 3.0) * rd(c2, d2, 1.0)
    if kind == "D":
        return (s ** 3 / 3.0) * rd(c2, d2, 1.0)
    if nu == 0.0:
        return s * rf(c2, d2, 1.0)
    return s * rf(c2, d2, 1.0) + (nu / 3.0) * s ** 3 * rj(
        c2, d2, 1.0, 1.0 - nu * s * s
    )


def mpelF(phi: float, m: float) -> float:
    """Incomplete integral of the first kind F(phi | m), Legendre form."""
    return _legendre("F", float(phi), None, float(m))


def mpelE(phi: float, m: float) -> float:
    """Incomplete integral of the second kind E(phi | m), Legendre form."""
    return _legendre("E", float(phi), None, float(m))


def mpelB(phi: float, m: float) -> float:
    """Incomplete integral B(phi | m) = int cos^2 / Delta."""
    return _legendre("B", float(phi), None, float(m))


def mpelD(phi: float, m: float) -> float:
    """Incomplete integral D(phi | m) = int sin^2 / Delta."""
    return _legendre("D", float(phi), None, float(m))


def mpelPi(phi: float, nu: float, m: float) -> float:
    """Incomplete integral of the third kind Pi(phi, nu | m), Legendre form."""
    return _legendre("Pi", float(phi), float(nu), float(m))


# ---------------------------------------------------------------------------
# dispatching public names (complete form when the parameter comes alone)

def melF(x: float, m: float) -> float:
    """Incomplete integral of the first kind F(x | m), Jacobi form."""
    return _melF_x(float(x), float(m))


def meld(x: float, m: float) -> float:
    """Incomplete integral D(x | m), Jacobi form."""
    return _melD_x(float(x), float(m))


def melE(*args: float) -> float:
    """E(m) with one argument; Jacobi-form E(x | m) with two."""
    if len(args) == 1:
        return _melE_complete(float(args[0]))
    if len(args) == 2:
        return _melE_x(float(args[0]), float(args[1]))
    raise TypeError("melE takes 1 (complete) or 2 (incomplete) arguments")


def melB(*args: float) -> float:
    """B(m) with one argument; Jacobi-form B(x | m) with two."""
    if len(args) == 1:
        return _melB_complete(float(args[0]))
    if len(args) == 2:
        return _melB_x(float(args[0]), float(args[1]))
    raise TypeError("melB takes 1 (complete) or 2 (incomplete) arguments")


def melD(*args: float) -> float:
    """D(m) with one argument; Jacobi-form D(x | m) with two."""
    if len(args) == 1:
        return _melD_complete(float(args[0]))
    if len(args) == 2:
        return _melD_x(float(args[0]), float(args[1]))
    raise TypeError("melD takes 1 (complete) or 2 (incomplete) arguments")


def melPi(*args: float) -> float:
    """Pi(nu, m) with two arguments; Jacobi-form Pi(x, nu | m) with three."""
    if len(args) == 2:
        return _melPi_complete(float(args[0]), float(args[1]))
    if len(args) == 3:
        return _melPi_x(float(args[0]), float(args[1]), float(args[2]))
    raise TypeError("melPi takes 2 (complete) or 3 (incomplete) arguments")


# ---------------------------------------------------------------------------
# Heuman's complete lambda function

def mHlambda(beta: float, m: float) -> float:
    """Heuman's complete function Lambda0(beta | m), 0 <= m <= 1.

    Evaluated through the incomplete integrals of the complementary
    parameter: (2/pi) [K(m) E(beta|1-m) - (K(m) - E(m)) F(beta|1-m)].
    """
    beta = float(beta)
    m = float(m)
    if is_nan(beta) or is_nan(m) or m < 0.0 or m > 1.0:
        return NAN
    if m == 1.0:
        return 2.0 * beta / math.pi
    mp = 1.0 - m
    k = melK(m)
    e = _melE_complete(m)
    return (2.0 / math.pi) * (k * mpelE(beta, mp) - (k - e) * mpelF(beta, mp))
