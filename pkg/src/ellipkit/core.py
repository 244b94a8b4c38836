"""Shared numeric conventions: tolerances, NaN/pole policy, argument reduction.

Every computational module follows the same contract for extended-real
values: finite in-domain inputs give finite results, unambiguous one-sided
limits give signed infinities, and everything else (out-of-domain input,
failed convergence, NaN anywhere) gives NaN without raising.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

EPS = math.ulp(1.0)           # 2^-52
SQRT_EPS = math.sqrt(EPS)     # Landen-type convergence threshold
NAN = math.nan
INF = math.inf

# pi split into a leading double and a correction term (Dekker-style) so that
# n*pi can be subtracted with a compensated two-step reduction.
PI_HI = 3.141592653589793
PI_LO = 1.2246467991473532e-16


@dataclass(frozen=True)
class Tolerances:
    """Convergence constants shared by the iterative kernels."""

    iter_tol: float = SQRT_EPS
    series_tol: float = EPS
    max_iter: int = 40

    def __post_init__(self):
        if not (0.0 < self.iter_tol < 1.0 and 0.0 < self.series_tol < 1.0):
            raise ValueError("tolerances must lie in (0, 1)")
        if self.max_iter < 8:
            raise ValueError("max_iter must be at least 8")


DEFAULT_TOL = Tolerances()


def is_nan(x: float) -> bool:
    return x != x


def apply_symmetry(kernel, parity: str, x: float, *rest: float) -> float:
    """Evaluate an even or odd function, calling the kernel only at x >= 0."""
    if is_nan(x):
        return NAN
    if x < 0.0:
        v = kernel(-x, *rest)
        return v if parity == "even" else -v
    return kernel(x, *rest)


def k_wrapper(m_function, k: float, *rest: float) -> float:
    """Call an m-parameter function with m = k**2 (modulus-form wrapper).

    The parameter m is the last positional argument of every m-function,
    so the remaining arguments are passed in front of it.
    """
    return m_function(*rest, k * k)


def safe_div(p: float, q: float) -> float:
    """Quotient with the pole policy: p/0 -> signed Inf, 0/0 -> NaN."""
    if is_nan(p) or is_nan(q):
        return NAN
    if q == 0.0:
        if p == 0.0:
            return NAN
        return math.copysign(INF, p) * math.copysign(1.0, q)
    return p / q


def _two_prod(a: float, b: float) -> tuple[float, float]:
    """Exact product a*b = hi + lo via Dekker splitting."""
    hi = a * b
    # split a into two 26-bit halves
    c = 134217729.0 * a  # 2**27 + 1
    a_hi = c - (c - a)
    a_lo = a - a_hi
    c = 134217729.0 * b
    b_hi = c - (c - b)
    b_lo = b - b_hi
    lo = ((a_hi * b_hi - hi) + a_hi * b_lo + a_lo * b_hi) + a_lo * b_lo
    return hi, lo


def reduce_half_period(phi: float) -> tuple[int, float]:
    """Split phi = n*pi + phi_r with phi_r in [-pi/2, pi/2], compensated.

    Returns (n, phi_r).  Uses the two-term representation of pi so the
    subtraction stays accurate for |phi| up to ~1e8.
    """
    if not math.isfinite(phi):
        return 0, phi
    n = round(phi / math.pi)
    if n == 0:
        return 0, phi
    r = (phi - n * PI_HI) - n * PI_LO
    return int(n), r


def reduce_period(u: float, period: float) -> tuple[int, float]:
    """Split u = n*period + u_r with u_r in [-period/2, period/2].

    The product n*period is removed with a compensated (two-product)
    subtraction, so the only error left is the rounding of `period` itself.
    """
    if not math.isfinite(u) or not math.isfinite(period) or period <= 0.0:
        return 0, u
    q = u / period
    if not math.isfinite(q):
        # the multiple overflows a float: every digit of the residue is
        # already lost, so report that honestly
        return 0, NAN
    n = round(q)
    if n == 0:
        return 0, u
    hi, lo = _two_prod(float(n), period)
    return int(n), (u - hi) - lo
