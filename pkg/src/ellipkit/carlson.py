"""Carlson symmetric elliptic integrals RC, RD, RF, RG, RJ.

Duplication-theorem iteration with fifth-order Taylor tail, after Carlson's
duplication algorithms (the same scheme used by Algorithm 577 descendants).
All kernels are numba-compiled scalar functions; they enforce the domain
policy themselves (negative arguments, too many zeros, or NaN -> NaN) and
carry an iteration cap so no input can hang the loop.

Principal-value extensions (negative y in RC, negative p in RJ) are out of
scope and return NaN.
"""

from __future__ import annotations

import math

from numba import njit

_EPS = 2.220446049250313e-16
_MAX_ITER = 120


@njit(cache=True)
def rf(x: float, y: float, z: float) -> float:
    """Symmetric integral of the first kind R_F(x, y, z)."""
    if x != x or y != y or z != z:
        return math.nan
    if x < 0.0 or y < 0.0 or z < 0.0:
        return math.nan
    nzero = 0
    if x == 0.0:
        nzero += 1
    if y == 0.0:
        nzero += 1
    if z == 0.0:
        nzero += 1
    if nzero >= 2:
        return math.nan
    if x == math.inf or y == math.inf or z == math.inf:
        return 0.0

    a0 = (x + y + z) / 3.0
    q = (3.0 * _EPS) ** (-0.125) * max(
        abs(a0 - x), abs(a0 - y), abs(a0 - z)
    )
    a = a0
    fac = 1.0
    n = 0
    while q >= fac * abs(a):
        sx = math.sqrt(x)
        sy = math.sqrt(y)
        sz = math.sqrt(z)
        lam = sx * sy + sx * sz + sy * sz
        x = 0.25 * (x + lam)
        y = 0.25 * (y + lam)
        z = 0.25 * (z + lam)
        a = 0.25 * (a + lam)
        fac *= 4.0
        n += 1
        if n > _MAX_ITER or a != a:
            return math.nan

    # (a0 - x0)/(4^n a_n) recovered from the invariant a0 - x0 = 4^n (a_n - x_n)
    xdev = (a - x) / a
    ydev = (a - y) / a
    zdev = -(xdev + ydev)
    e2 = xdev * ydev - zdev * zdev
    e3 = xdev * ydev * zdev
    s = (
        1.0
        - e2 / 10.0
        + e3 / 14.0
        + e2 * e2 / 24.0
        - 3.0 * e2 * e3 / 44.0
        - 5.0 * e2 * e2 * e2 / 208.0
        + 3.0 * e3 * e3 / 104.0
        + e2 * e2 * e3 / 16.0
    )
    return s / math.sqrt(a)


@njit(cache=True)
def rc(x: float, y: float) -> float:
    """Degenerate integral R_C(x, y) = R_F(x, y, y); requires y > 0."""
    if x != x or y != y:
        return math.nan
    if x < 0.0 or y <= 0.0:
        return math.nan
    return rf(x, y, y)


@njit(cache=True)
def rd(x: float, y: float, z: float) -> float:
    """Symmetric integral of the second kind R_D(x, y, z) = R_J(x, y, z, z)."""
    if x != x or y != y or z != z:
        return math.nan
    if x < 0.0 or y < 0.0 or z <= 0.0:
        return math.nan
    if x == 0.0 and y == 0.0:
        return math.nan
    if x == math.inf or y == math.inf or z == math.inf:
        return 0.0

    a0 = (x + y + 3.0 * z) / 5.0
    q = (0.25 * _EPS) ** (-1.0 / 8.0) * max(
        abs(a0 - x), abs(a0 - y), abs(a0 - z)
    )
    a = a0
    fac = 1.0
    acc = 0.0
    n = 0
    while q >= fac * abs(a):
        sx = math.sqrt(x)
        sy = math.sqrt(y)
        sz = math.sqrt(z)
        lam = sx * sy + sx * sz + sy * sz
        den = fac * sz * (z + lam)
        if den == 0.0:  # underflow with subnormal arguments
            return math.nan
        acc += 1.0 / den
        x = 0.25 * (x + lam)
        y = 0.25 * (y + lam)
        z = 0.25 * (z + lam)
        a = 0.25 * (a + lam)
        fac *= 4.0
        n += 1
        if n > _MAX_ITER or a != a:
            return math.nan

    xdev = (a - x) / a
    ydev = (a - y) / a
    zdev = -(xdev + ydev) / 3.0
    e2 = xdev * ydev - 6.0 * zdev * zdev
    e3 = (3.0 * xdev * ydev - 8.0 * zdev * zdev) * zdev
    e4 = 3.0 * (xdev * ydev - zdev * zdev) * zdev * zdev
    e5 = xdev * ydev * zdev * zdev * zdev
    s = (
        1.0
        - 3.0 * e2 / 14.0
        + e3 / 6.0
        + 9.0 * e2 * e2 / 88.0
        - 3.0 * e4 / 22.0
        - 9.0 * e2 * e3 / 52.0
        + 3.0 * e5 / 26.0
    )
    return s / (fac * a * math.sqrt(a)) + 3.0 * acc


@njit(cache=True)
def rj(x: float, y: float, z: float, p: float) -> float:
    """Symmetric integral of the third kind R_J(x, y, z, p); requires p > 0."""
    if x != x or y != y or z != z or p != p:
        return math.nan
    if x < 0.0 or y < 0.0 or z < 0.0 or p <= 0.0:
        return math.nan
    nzero = 0
    if x == 0.0:
        nzero += 1
    if y == 0.0:
        nzero += 1
    if z == 0.0:
        nzero += 1
    if nzero >= 2:
        return math.nan
    if x == math.inf or y == math.inf or z == math.inf or p == math.inf:
        return 0.0

    a0 = (x + y + z + 2.0 * p) / 5.0
    delta = (p - x) * (p - y) * (p - z)
    q = (0.25 * _EPS) ** (-1.0 / 8.0) * max(
        abs(a0 - x), abs(a0 - y), abs(a0 - z), abs(a0 - p)
    )
    a = a0
    fac = 1.0
    acc = 0.0
    n = 0
    while q >= fac * abs(a):
        sx = math.sqrt(x)
        sy = math.sqrt(y)
        sz = math.sqrt(z)
        sp = math.sqrt(p)
        lam = sx * sy + sx * sz + sy * sz
        d = (sp + sx) * (sp + sy) * (sp + sz)
        dd = fac * fac * fac * d * d
        if dd == 0.0 or d == 0.0:  # underflow with subnormal arguments
            return math.nan
        e = delta / dd
        acc += rc(1.0, 1.0 + e) / (fac * d)
        x = 0.25 * (x + lam)
        y = 0.25 * (y + lam)
        z = 0.25 * (z + lam)
        p = 0.25 * (p + lam)
        a = 0.25 * (a + lam)
        fac *= 4.0
        n += 1
        if n > _MAX_ITER or a != a:
            return math.nan

    xdev = (a - x) / a
    ydev = (a - y) / a
    zdev = (a - z) / a
    pdev = -(xdev + ydev + zdev) / 2.0
    p2 = pdev * pdev
    e2 = xdev * ydev + xdev * zdev + ydev * zdev - 3.0 * p2
    e3 = xdev * ydev * zdev + 2.0 * e2 * pdev + 4.0 * p2 * pdev
    e4 = (2.0 * xdev * ydev * zdev + e2 * pdev + 3.0 * p2 * pdev) * pdev
    e5 = xdev * ydev * zdev * p2
    s = (
        1.0
        - 3.0 * e2 / 14.0
        + e3 / 6.0
        + 9.0 * e2 * e2 / 88.0
        - 3.0 * e4 / 22.0
        - 9.0 * e2 * e3 / 52.0
        + 3.0 * e5 / 26.0
    )
    return s / (fac * a * math.sqrt(a)) + 6.0 * acc


@njit(cache=True)
def rg(x: float, y: float, z: float) -> float:
    """Symmetric integral R_G(x, y, z); finite for all nonnegative arguments."""
    if x != x or y != y or z != z:
        return math.nan
    if x < 0.0 or y < 0.0 or z < 0.0:
        return math.nan
    # sort so that z holds the largest argument (RG is fully symmetric)
    if x > z:
        x, z = z, x
    if y > z:
        y, z = z, y
    if z == 0.0:
        return 0.0
    if x == 0.0 and y == 0.0:
        return 0.5 * math.sqrt(z)
    return 0.5 * (
        z * rf(x, y, z)
        - (x - z) * (y - z) * rd(x, y, z) / 3.0
        + math.sqrt(x * y / z)
    )
