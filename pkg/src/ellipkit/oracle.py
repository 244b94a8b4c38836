"""Independent reference evaluator.

Everything here is computed by adaptive quadrature of the defining
integrals (plus bisection where a function is defined as an inverse),
deliberately avoiding the Landen/Carlson production kernels, so it can
serve as the authority for frozen test values and for the randomized
error reports.

The reports give the maximal absolute error, maximal relative error and
root-mean-square relative error, each divided by machine epsilon.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field

import numpy as np
from scipy import integrate
from scipy.optimize import brentq

from .core import EPS, NAN
from .registry import lookup

__all__ = ["OracleSpec", "OracleError", "quad", "reference", "has_reference",
           "error_report", "report_csv"]

_TOL = 1e-12


class OracleError(RuntimeError):
    """Quadrature failed to reach the requested tolerance."""


@dataclass(frozen=True)
class OracleSpec:
    """A defining integral: integrand(t, *args) over (lower, upper)."""
    integrand: object = field(repr=False)
    limits: tuple = (0.0, 1.0)
    singular_ends: tuple = (False, False)
    target_tol: float = _TOL

    def __post_init__(self):
        if self.target_tol < 1e-14:
            raise ValueError("target_tol must be >= 1e-14")


def quad(spec: OracleSpec, args: tuple = ()) -> float:
    """Integrate a spec; NaN (with stderr diagnostic) on failed tolerance."""
    lo, hi = spec.limits
    f = spec.integrand
    try:
        val, err = integrate.quad(
            lambda t: f(t, *args), lo, hi,
            epsabs=1e-14, epsrel=spec.target_tol, limit=300)
    except Exception:
        return NAN
    if not math.isfinite(val):
        return NAN
    if err > max(1e-11, 10.0 * spec.target_tol * abs(val)):
        import sys
        print(f"oracle: tolerance not met (err={err:.2e})", file=sys.stderr)
        return NAN
    return val


# ---------------------------------------------------------------------------
# Legendre-form building blocks (trigonometric integrands, smooth in-domain)

def _leg_f(t, m):
    return 1.0 / math.sqrt(1.0 - m * math.sin(t) ** 2)


def _leg_e(t, m):
    return math.sqrt(1.0 - m * math.sin(t) ** 2)


def _leg_b(t, m):
    return math.cos(t) ** 2 / math.sqrt(1.0 - m * math.sin(t) ** 2)


def _leg_d(t, m):
    return math.sin(t) ** 2 / math.sqrt(1.0 - m * math.sin(t) ** 2)


def _leg_pi(t, nu, m):
    return 1.0 / ((1.0 - nu * math.sin(t) ** 2)
                  * math.sqrt(1.0 - m * math.sin(t) ** 2))


_LEG = {"F": _leg_f, "E": _leg_e, "B": _leg_b, "D": _leg_d}


def _phi_domain_ok(phi, m):
    if m <= 1.0:
        return True
    return abs(phi) <= math.asin(min(1.0, 1.0 / math.sqrt(m)))


def _legendre_ref(kind, phi, m, nu=None):
    """Incomplete Legendre integral by quadrature, with quasi-period
    reduction for |phi| > pi/2 (so the adaptive grid stays small)."""
    if not _phi_domain_ok(phi, m):
        return NAN
    n = 0
    if m < 1.0 and abs(phi) > math.pi / 2.0:
        n = round(phi / math.pi)
        phi = phi - n * math.pi
    args = (nu, m) if kind == "Pi" else (m,)
    f = _leg_pi if kind == "Pi" else _LEG[kind]
    spec = OracleSpec(f, (0.0, phi))
    val = quad(spec, args)
    if n:
        comp = quad(OracleSpec(f, (0.0, math.pi / 2.0)), args)
        val += 2.0 * n * comp
    return val


def _complete_ref(kind, m, nu=None):
    if m > 1.0:
        return NAN
    args = (nu, m) if kind == "Pi" else (m,)
    f = _leg_pi if kind == "Pi" else _LEG[kind]
    return quad(OracleSpec(f, (0.0, math.pi / 2.0),
                           singular_ends=(False, m == 1.0)), args)


def _amplitude_ref(u, m):
    """Invert F(phi | m) = u by bisection; |u| <= 2K required."""
    kk = _complete_ref("F", m)
    if not math.isfinite(kk):
        return NAN, 0, kk
    n = round(u / (2.0 * kk))
    ur = u - 2.0 * n * kk
    if ur == 0.0:
        return 0.0, n, kk
    lo, hi = (-math.pi / 2.0 - 1e-12, math.pi / 2.0 + 1e-12)
    phi = brentq(lambda p: _legendre_ref("F", p, m) - ur, lo, hi,
                 xtol=1e-15, rtol=8.9e-16)
    return phi, n, kk


# ---------------------------------------------------------------------------
# Carlson integrands (infinite upper limit; QUADPACK maps it internally)

def _rf_int(t, x, y, z):
    return 0.5 / math.sqrt((t + x) * (t + y) * (t + z))


def _rj_int(t, x, y, z, p):
    return 1.5 / ((t + p) * math.sqrt((t + x) * (t + y) * (t + z)))


def _rg_int(t, x, y, z):
    s = math.sqrt((t + x) * (t + y) * (t + z))
    return 0.25 * t / s * (x / (t + x) + y / (t + y) + z / (t + z))


# Bulirsch integrands on t in (0, x) or (0, inf)

def _el1_int(t, kc):
    return 1.0 / math.sqrt((1.0 + t * t) * (1.0 + kc * kc * t * t))


def _el2_int(t, kc, a, b):
    t2 = t * t
    return (a + b * t2) / ((1.0 + t2)
                           * math.sqrt((1.0 + t2) * (1.0 + kc * kc * t2)))


def _el3_int(t, kc, p):
    t2 = t * t
    return (1.0 + t2) / ((1.0 + p * t2)
                         * math.sqrt((1.0 + t2) * (1.0 + kc * kc * t2)))


def _cel_int(t, kc, p, a, b):
    t2 = t * t
    return (a + b * t2) / ((1.0 + p * t2)
                           * math.sqrt((1.0 + t2) * (1.0 + kc * kc * t2)))


def _lemn_arc(v):
    # substitution t = v sin(s) removes the (1 - t^4)^(-1/2) endpoint issue
    # only at v = 1; for |v| < 1 the direct integrand is already smooth
    return quad(OracleSpec(lambda t: 1.0 / math.sqrt(1.0 - t ** 4),
                           (0.0, v)))


# ---------------------------------------------------------------------------
# reference dispatch

def _ref_mjepsilon(u, m):
    if m >= 1.0 or not math.isfinite(u):
        return NAN
    phi, n, _ = _amplitude_ref(u, m)
    if not math.isfinite(phi):
        return NAN
    val = _legendre_ref("E", phi, m)
    if n:
        val += 2.0 * n * _complete_ref("E", m)
    return val


def _ref_mjzeta(u, m):
    if m >= 1.0 or not math.isfinite(u):
        return NAN
    kk = _complete_ref("F", m)
    ee = _complete_ref("E", m)
    return _ref_mjepsilon(u, m) - (ee / kk) * u


def _ref_mjlambda(u, nu, m):
    if m >= 1.0 or not math.isfinite(u):
        return NAN
    phi, n, _ = _amplitude_ref(u, m)
    if not math.isfinite(phi):
        return NAN
    val = _legendre_ref("Pi", phi, m, nu)
    if n:
        val += 2.0 * n * _complete_ref("Pi", m, nu)
    return val


def _ref_sncndn(u, m):
    if m >= 1.0:
        return NAN, NAN, NAN
    phi, n, _ = _amplitude_ref(u, m)
    if not math.isfinite(phi):
        return NAN, NAN, NAN
    s, c = math.sin(phi), math.cos(phi)
    if n % 2:
        s, c = -s, -c
    return s, c, math.sqrt(1.0 - m * s * s)


def _ref_hlambda(beta, m):
    if not 0.0 <= m <= 1.0:
        return NAN
    mc = 1.0 - m
    kk = _complete_ref("F", m)
    ee = _complete_ref("E", m)
    fb = _legendre_ref("F", beta, mc)
    eb = _legendre_ref("E", beta, mc)
    return (2.0 / math.pi) * (kk * eb - (kk - ee) * fb)


_REFS = {
    "rf": lambda x, y, z: quad(OracleSpec(_rf_int, (0.0, math.inf)),
                               (x, y, z)),
    "rc": lambda x, y: quad(OracleSpec(_rf_int, (0.0, math.inf)), (x, y, y)),
    "rd": lambda x, y, z: quad(OracleSpec(_rj_int, (0.0, math.inf)),
                               (x, y, z, z)),
    "rj": lambda x, y, z, p: quad(OracleSpec(_rj_int, (0.0, math.inf)),
                                  (x, y, z, p)),
    "rg": lambda x, y, z: quad(OracleSpec(_rg_int, (0.0, math.inf)),
                               (x, y, z)),
    "mpelF": lambda phi, m: _legendre_ref("F", phi, m),
    "mpelE": lambda phi, m: _legendre_ref("E", phi, m),
    "mpelB": lambda phi, m: _legendre_ref("B", phi, m),
    "mpelD": lambda phi, m: _legendre_ref("D", phi, m),
    "mpelPi": lambda phi, nu, m: _legendre_ref("Pi", phi, m, nu),
    "melK": lambda m: _complete_ref("F", m),
    "melE": lambda m: _complete_ref("E", m),
    "melB": lambda m: _complete_ref("B", m),
    "melD": lambda m: _complete_ref("D", m),
    "melC": lambda m: quad(OracleSpec(
        lambda t, mm: (math.sin(t) * math.cos(t)) ** 2
        / math.sqrt(1.0 - mm * math.sin(t) ** 2) ** 3,
        (0.0, math.pi / 2.0)), (m,)),
    "melPi": lambda nu, m: _complete_ref("Pi", m, nu),
    "melCK": lambda m: _complete_ref("F", 1.0 - m),
    "melCE": lambda m: _complete_ref("E", 1.0 - m),
    "melCPi": lambda nu, m: _complete_ref("Pi", 1.0 - m, nu),
    "melF": lambda x, m: _legendre_ref("F", math.asin(x), m)
    if abs(x) <= 1.0 else NAN,
    "mjepsilon": _ref_mjepsilon,
    "mJzeta": _ref_mjzeta,
    "mjlambda": _ref_mjlambda,
    "mHlambda": _ref_hlambda,
    "mjsn": lambda u, m: _ref_sncndn(u, m)[0],
    "mjcn": lambda u, m: _ref_sncndn(u, m)[1],
    "mjdn": lambda u, m: _ref_sncndn(u, m)[2],
    "mjam": lambda u, m: (lambda r: r[1] * math.pi + r[0]
                          if math.isfinite(r[0]) else NAN)(
        _amplitude_ref(u, m)[:2]) if m < 1.0 else NAN,
    "el1": lambda x, kc: quad(OracleSpec(_el1_int, (0.0, x)), (kc,)),
    "el2": lambda x, kc, a, b: quad(OracleSpec(_el2_int, (0.0, x)),
                                    (kc, a, b)),
    "el3": lambda x, kc, p: quad(OracleSpec(_el3_int, (0.0, x)), (kc, p)),
    "cel1": lambda kc: quad(OracleSpec(_el1_int, (0.0, math.inf)), (kc,)),
    "cel2": lambda kc, a, b: quad(OracleSpec(_el2_int, (0.0, math.inf)),
                                  (kc, a, b)),
    "cel3": lambda kc, p: quad(OracleSpec(_el3_int, (0.0, math.inf)),
                               (kc, p)),
    "cel": lambda kc, p, a, b: quad(OracleSpec(_cel_int, (0.0, math.inf)),
                                    (kc, p, a, b)) if p > 0.0 else NAN,
    "igsl": lambda v: _lemn_arc(v) if abs(v) <= 1.0 else NAN,
    "gsl": lambda x: brentq(lambda v: _lemn_arc(v) - x, -1.0, 1.0,
                            xtol=1e-15)
    if abs(x) <= _lemn_arc(1.0) else NAN,
    "gd": lambda x: quad(OracleSpec(lambda t: 1.0 / math.cosh(t), (0.0, x))),
    "igd": lambda x: quad(OracleSpec(lambda t: 1.0 / math.cos(t), (0.0, x)))
    if abs(x) < math.pi / 2.0 else NAN,
}

# the Jacobi-form integrals share the Legendre reference through x = sin(phi)
for _kind in ("E", "B", "D"):
    _REFS[f"mel{_kind}_x"] = (
        lambda x, m, _k=_kind: _legendre_ref(_k, math.asin(x), m)
        if abs(x) <= 1.0 else NAN)
_REFS["melPi_x"] = (lambda x, nu, m: _legendre_ref("Pi", math.asin(x), m, nu)
                    if abs(x) <= 1.0 else NAN)
_REFS["meld"] = _REFS["melD_x"]


def has_reference(name: str) -> bool:
    return name in _REFS


def reference(name: str, *args: float) -> float:
    """Oracle value for a registered function name."""
    fn = _REFS.get(name)
    if fn is None:
        raise KeyError(f"no oracle reference for {name!r}")
    try:
        v = fn(*(float(a) for a in args))
    except (ValueError, ZeroDivisionError, OverflowError):
        return NAN
    return v


# ---------------------------------------------------------------------------
# randomized error reports

def error_report(name: str, ranges, n_samples: int = 1000, seed: int = 0):
    """Compare an implementation with its oracle over uniform samples.

    Returns a dict row: function name, per-argument ranges, and the three
    eps-scaled statistics.  Deterministic for a fixed seed.
    """
    desc = lookup(name)
    rng = np.random.default_rng(seed)
    ranges = [tuple(map(float, r)) for r in ranges]
    if len(ranges) != desc.arity:
        raise ValueError("one (lo, hi) range per argument is required")
    mae = 0.0
    mre = 0.0
    sq = 0.0
    used = 0
    for _ in range(int(n_samples)):
        args = [rng.uniform(lo, hi) for lo, hi in ranges]
        ref = reference(desc.name, *args)
        if not math.isfinite(ref):
            continue
        got = desc.impl(*args)
        if not math.isfinite(got):
            # disagreement on domain counts as a maximal error
            mre = math.inf
            continue
        ae = abs(got - ref)
        re = ae / abs(ref) if ref != 0.0 else (math.inf if ae else 0.0)
        mae = max(mae, ae)
        mre = max(mre, re)
        sq += re * re
        used += 1
    rms = math.sqrt(sq / used) if used else NAN
    row = {"func": desc.name, "n": used}
    for i, (lo, hi) in enumerate(ranges):
        row[f"arg{i}_min"] = lo
        row[f"arg{i}_max"] = hi
    row["MAE/eps"] = mae / EPS
    row["MRE/eps"] = mre / EPS
    row["RMS/eps"] = rms / EPS
    return row


def report_csv(rows) -> str:
    """Render error-report rows as CSV (header row, LF endings)."""
    rows = list(rows)
    cols = []
    for row in rows:
        for key in row:
            if key not in cols:
                cols.append(key)
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({c: row.get(c, "") for c in cols})
    return buf.getvalue()
