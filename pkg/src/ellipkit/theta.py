"""Jacobi theta functions (q-series), Neville theta functions, and the
elliptic nome with its inverse.

Series are summed until a term no longer changes the partial sum, with a
hard cap; the nome is restricted to [0, 0.999] because the series become
uselessly slow beyond that (larger q returns NaN).  The argument is reduced
modulo the trigonometric period before summing so that large x keeps full
accuracy.
"""

from __future__ import annotations

import math

from .core import NAN, is_nan, reduce_half_period
from .integrals import melCK, melK

__all__ = [
    "jtheta1", "jtheta2", "jtheta3", "jtheta4", "jtheta",
    "nthetaC", "nthetaD", "nthetaN", "nthetaS",
    "mnthetaC", "mnthetaD", "mnthetaN", "mnthetaS",
    "elnome", "mnome", "ielnome",
]

_Q_MAX = 0.999
_MAX_TERMS = 600


def _q_ok(q: float) -> bool:
    return 0.0 <= q <= _Q_MAX


def _theta12(x: float, q: float, signed: bool) -> float:
    """2 q^(1/4) sum q^(n(n+1)) {sin|cos}((2n+1)x), alternating if signed."""
    # period 2pi, with f(x + pi) = -f(x): reduce by half periods
    n_half, xr = reduce_half_period(x)
    sign = -1.0 if n_half % 2 else 1.0
    total = 0.0
    qpow = 1.0  # q^(n(n+1))
    for n in range(_MAX_TERMS):
        ang = (2 * n + 1) * xr
        term = qpow * (math.sin(ang) if signed else math.cos(ang))
        if signed and n % 2:
            term = -term
        new = total + term
        if new == total and n > 0:
            break
        total = new
        qpow *= q ** (2 * (n + 1))
    return sign * 2.0 * q ** 0.25 * total


def _theta34(x: float, q: float, alternating: bool) -> float:
    """1 + 2 sum (+-1)^n q^(n^2) cos(2nx); period pi in x."""
    _, xr = reduce_half_period(x)
    total = 0.0
    qpow = q  # q^(n^2)
    for n in range(1, _MAX_TERMS):
        term = qpow * math.cos(2 * n * xr)
        if alternating and n % 2:
            term = -term
        new = total + term
        if new == total:
            break
        total = new
        qpow *= q ** (2 * n + 1)
    return 1.0 + 2.0 * total


def jtheta1(x: float, q: float) -> float:
    """Jacobi theta function theta_1(x, q), odd in x."""
    x, q = float(x), float(q)
    if is_nan(x) or is_nan(q) or not _q_ok(q) or not math.isfinite(x):
        return NAN
    return _theta12(x, q, signed=True)


def jtheta2(x: float, q: float) -> float:
    """Jacobi theta function theta_2(x, q), even in x."""
    x, q = float(x), float(q)
    if is_nan(x) or is_nan(q) or not _q_ok(q) or not math.isfinite(x):
        return NAN
    return _theta12(x, q, signed=False)


def jtheta3(x: float, q: float) -> float:
    """Jacobi theta function theta_3(x, q), pi-periodic."""
    x, q = float(x), float(q)
    if is_nan(x) or is_nan(q) or not _q_ok(q) or not math.isfinite(x):
        return NAN
    return _theta34(x, q, alternating=False)


def jtheta4(x: float, q: float) -> float:
    """Jacobi theta function theta_4(x, q), pi-periodic."""
    x, q = float(x), float(q)
    if is_nan(x) or is_nan(q) or not _q_ok(q) or not math.isfinite(x):
        return NAN
    return _theta34(x, q, alternating=True)


def jtheta(j: int, x: float, q: float) -> float:
    """Dispatch theta_j for j in 1..4."""
    if j == 1:
        return jtheta1(x, q)
    if j == 2:
        return jtheta2(x, q)
    if j == 3:
        return jtheta3(x, q)
    if j == 4:
        return jtheta4(x, q)
    raise ValueError("theta index must be 1..4")


def _theta1_prime0(q: float) -> float:
    """d theta_1/dx at x = 0: 2 q^(1/4) sum (-1)^n (2n+1) q^(n(n+1))."""
    total = 0.0
    qpow = 1.0
    for n in range(_MAX_TERMS):
        term = (2 * n + 1) * qpow
        if n % 2:
            term = -term
        new = total + term
        if new == total and n > 0:
            break
        total = new
        qpow *= q ** (2 * (n + 1))
    return 2.0 * q ** 0.25 * total


# ---------------------------------------------------------------------------
# Neville theta functions

def _neville(kind: str, x: float, q: float) -> float:
    if q == 0.0:
        if kind == "s":
            return math.sin(x)
        if kind == "c":
            return math.cos(x)
        return 1.0
    k = ielnome(q)
    kk = melK(k * k)
    v = math.pi * x / (2.0 * kk)
    if kind == "s":
        return (2.0 * kk / math.pi) * jtheta1(v, q) / _theta1_prime0(q)
    if kind == "c":
        return jtheta2(v, q) / jtheta2(0.0, q)
    if kind == "d":
        return jtheta3(v, q) / jtheta3(0.0, q)
    return jtheta4(v, q) / jtheta4(0.0, q)


def _neville_q(kind: str, x: float, q: float) -> float:
    x, q = float(x), float(q)
    if is_nan(x) or is_nan(q) or not _q_ok(q) or not math.isfinite(x):
        return NAN
    return _neville(kind, x, q)


def nthetaS(x: float, q: float) -> float:
    """Neville theta_s(x, q); theta_s(0) = 0 with unit slope."""
    return _neville_q("s", x, q)


def nthetaC(x: float, q: float) -> float:
    """Neville theta_c(x, q); theta_c(0) = 1."""
    return _neville_q("c", x, q)


def nthetaD(x: float, q: float) -> float:
    """Neville theta_d(x, q); theta_d(0) = 1."""
    return _neville_q("d", x, q)


def nthetaN(x: float, q: float) -> float:
    """Neville theta_n(x, q); theta_n(0) = 1."""
    return _neville_q("n", x, q)


def _neville_m(kind: str, x: float, m: float) -> float:
    x, m = float(x), float(m)
    if is_nan(x) or is_nan(m) or m < 0.0 or m > 1.0 or not math.isfinite(x):
        return NAN
    q = mnome(m)
    if not _q_ok(q):
        return NAN
    return _neville(kind, x, q)


def mnthetaS(x: float, m: float) -> float:
    """Neville theta_s in the parameter form, theta_s(x | m)."""
    return _neville_m("s", x, m)


def mnthetaC(x: float, m: float) -> float:
    """Neville theta_c in the parameter form, theta_c(x | m)."""
    return _neville_m("c", x, m)


def mnthetaD(x: float, m: float) -> float:
    """Neville theta_d in the parameter form, theta_d(x | m)."""
    return _neville_m("d", x, m)


def mnthetaN(x: float, m: float) -> float:
    """Neville theta_n in the parameter form, theta_n(x | m)."""
    return _neville_m("n", x, m)


# ---------------------------------------------------------------------------
# nome

def mnome(m: float) -> float:
    """Elliptic nome q(m) = exp(-pi K(1-m)/K(m)) for 0 <= m <= 1."""
    m = float(m)
    if is_nan(m) or m < 0.0 or m > 1.0:
        return NAN
    if m == 0.0:
        return 0.0
    if m == 1.0:
        return 1.0
    return math.exp(-math.pi * melCK(m) / melK(m))


def elnome(k: float) -> float:
    """Elliptic nome as a function of the modulus k, |k| <= 1."""
    k = float(k)
    if is_nan(k) or abs(k) > 1.0:
        return NAN
    return mnome(k * k)


def ielnome(q: float) -> float:
    """Inverse nome: the modulus k with elnome(k) = q, via theta quotients."""
    q = float(q)
    if is_nan(q) or q < 0.0 or q > _Q_MAX:
        return NAN
    if q == 0.0:
        return 0.0
    t2 = jtheta2(0.0, q)
    t3 = jtheta3(0.0, q)
    r = t2 / t3
    return r * r
