"""Command-line front end.

Subcommands:
  eval        evaluate any registered function at given numeric arguments
  table       write a CSV table over per-argument ranges
  selftest    run the accuracy/throughput thresholds; exit 0 iff all pass
  elastica    flexural elastica curves as CSV (columns s,x,y,phi)
  cantilever  follower-force cantilever: prints C, alpha, L, X, Y and
              optionally writes the curve CSV

Exit codes: 0 success (NaN results are data, not failure), 1 selftest
failure, 2 usage error.  All numbers are printed with 17 significant
digits so emitted tables round-trip bitwise.
"""

from __future__ import annotations

import argparse
import itertools
import math
import sys
import time

from . import demos, oracle
from .integrals import melK, melK_bulk
from .registry import (ArityError, RegistryLookupError, ShapeError,
                       broadcast_apply, lookup)

__all__ = ["main"]

_FMT = "%.17g"


def _fmt(v: float) -> str:
    if isinstance(v, float) and math.isnan(v):
        return "nan"
    return _FMT % v


def _parse_range(text: str, n_default: int = 50):
    """Parse 'a:b:n' (n grid points, inclusive ends) or a single number."""
    parts = text.split(":")
    if len(parts) == 1:
        v = float(parts[0])
        return [v]
    if len(parts) == 2:
        a, b = map(float, parts)
        n = n_default
    elif len(parts) == 3:
        a, b = float(parts[0]), float(parts[1])
        n = int(parts[2])
    else:
        raise ValueError(f"bad range {text!r}; expected a:b:n")
    if n < 2:
        return [a]
    return [a + (b - a) * i / (n - 1) for i in range(n)]


def _write(path, text):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def cmd_eval(args) -> int:
    try:
        desc = lookup(args.name)
    except RegistryLookupError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    try:
        vals = [float(a) for a in args.args]
    except ValueError as exc:
        print(f"non-numeric argument: {exc}", file=sys.stderr)
        return 2
    try:
        result = broadcast_apply(desc, vals)
    except (ArityError, ShapeError) as exc:
        print(str(exc), file=sys.stderr)
        return 2
    if args.json:
        print('{"function": "%s", "value": %s}'
              % (desc.name,
                 "NaN" if math.isnan(result) else _FMT % result))
    elif args.csv:
        cols = ",".join(_fmt(v) for v in vals)
        print("function," + ",".join(
            f"arg{i}" for i in range(len(vals))) + ",value")
        print(f"{desc.name},{cols},{_fmt(result)}")
    else:
        print(_fmt(result))
    return 0


def cmd_table(args) -> int:
    try:
        desc = lookup(args.name)
    except RegistryLookupError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    if len(args.range) not in desc.arities:
        want = " or ".join(map(str, desc.arities))
        print(f"{desc.name} needs {want} --range option(s)", file=sys.stderr)
        return 2
    try:
        grids = [_parse_range(r) for r in args.range]
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    header = ",".join(f"arg{i}" for i in range(len(grids))) + ",value"
    lines = [header]
    for combo in itertools.product(*grids):
        val = desc.impl(*combo)
        lines.append(",".join(_fmt(v) for v in combo) + "," + _fmt(val))
    _write(args.out, "\n".join(lines) + "\n")
    return 0


def cmd_elastica(args) -> int:
    try:
        cfg = demos.ElasticaConfig(
            omega=args.omega, C=args.constant,
            k_list=tuple(args.k),
            s_grid=tuple(_parse_range(args.s_range)))
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    curves = demos.elastica_curve(cfg)
    lines = ["k,s,x,y,phi"]
    for k, rows in curves.items():
        for p in rows:
            lines.append(",".join(
                _fmt(v) for v in (k, p.s, p.x, p.y, p.phi)))
    _write(args.out, "\n".join(lines) + "\n")
    return 0


def cmd_cantilever(args) -> int:
    if args.psi1 is not None and args.psi1_deg is not None:
        print("give either --psi1 or --psi1-deg, not both", file=sys.stderr)
        return 2
    psi1 = math.pi / 3.0
    if args.psi1 is not None:
        psi1 = args.psi1
    elif args.psi1_deg is not None:
        psi1 = math.radians(args.psi1_deg)
    try:
        cfg = demos.CantileverConfig(
            psi1=psi1, lam=args.lam, nu=args.nu, omega=args.omega,
            s_grid=tuple(_parse_range(args.s_range)))
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    res = demos.cantilever_solve(cfg)
    last = res.samples[-1]
    for label, val in (("C", res.C), ("alpha", res.alpha), ("L", res.L),
                       ("X", last.x), ("Y", last.y)):
        print(f"{label} = {_fmt(val)}")
    if args.out:
        lines = ["s,x,y,phi"]
        for p in res.samples:
            lines.append(",".join(_fmt(v) for v in (p.s, p.x, p.y, p.phi)))
        _write(args.out, "\n".join(lines) + "\n")
    return 0


# ---------------------------------------------------------------------------
# selftest

def _check(name, ok, detail=""):
    status = "pass" if ok else "FAIL"
    line = f"[{status}] {name}"
    if detail:
        line += f"  ({detail})"
    print(line)
    return bool(ok)


_TABLE5 = {
    "jcd": 0.999946, "jcn": 0.974120, "jcs": 4.309650, "jdc": 1.000050,
    "jdn": 0.974172, "jds": 4.309880, "jnc": 1.026570, "jnd": 1.026510,
    "jns": 4.424150, "jsc": 0.232037, "jsd": 0.232025, "jsn": 0.226032,
    "jzeta": 0.174671,
}


def cmd_selftest(args) -> int:
    ok = True
    x, k = 0.23, 0.999

    worst = 0.0
    for name, want in _TABLE5.items():
        got = lookup(name).impl(x, k)
        worst = max(worst, abs(got - want) / abs(want))
    ok &= _check("golden values (12 quotient functions + zeta)",
                 worst < 5e-6, f"worst rel dev {worst:.2e}")

    kk = melK(k * k)
    worst = max(abs(lookup(n).impl(x, k)
                    - lookup(n).impl(x + 1e5 * kk, k))
                for n in _TABLE5)
    ok &= _check("quasi-periodic reduction at x + 1e5*K",
                 worst <= 1e-6, f"worst diff {worst:.2e}")

    ok &= _check("pole/limit interception",
                 melK(1.0) == math.inf and melK(-math.inf) == 0.0
                 and abs(lookup("melE").impl(1.0) - 1.0) <= 2 * 2.3e-16)

    rows = []
    stats_ok = True
    for name in ("mpelF", "mpelE", "mpelPi"):
        arity = lookup(name).arity
        ranges = [(-0.5, 0.5)] * arity
        row = oracle.error_report(name, ranges, args.samples, args.seed)
        rows.append(row)
        stats_ok &= row["MRE/eps"] <= 100 and row["RMS/eps"] <= 50
    ok &= _check("randomized error report vs quadrature oracle", stats_ok,
                 "; ".join(f"{r['func']} MRE/eps={r['MRE/eps']:.1f}"
                           for r in rows))
    if args.report:
        _write(args.report, oracle.report_csv(rows))

    import numpy as np
    ms = np.random.default_rng(args.seed).uniform(-5.0, 0.99, 1_000_000)
    melK_bulk(ms[:1000])  # warm the compiled kernel
    t0 = time.perf_counter()
    melK_bulk(ms)
    dt = time.perf_counter() - t0
    rate = ms.size / dt
    ok &= _check("throughput >= 1e6 melK evaluations/s",
                 rate >= 1e6, f"{rate:.3g}/s")

    res = demos.cantilever_solve(demos.CantileverConfig())
    ok &= _check("cantilever deformed length (published golden)",
                 abs(res.L - 0.78555198) <= 1e-6,
                 f"L={res.L:.10g}; the formula evaluated in extended "
                 "precision gives 0.8851478173, see decisions ledger")

    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="ellipkit",
        description="Elliptic integrals and Jacobian elliptic functions")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a registered function")
    p.add_argument("name")
    p.add_argument("args", nargs="*")
    p.add_argument("--json", action="store_true")
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("table", help="CSV table over argument ranges")
    p.add_argument("name")
    p.add_argument("--range", action="append", default=[],
                   metavar="A:B:N", help="one per argument; or a constant")
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("selftest", help="run accuracy/throughput thresholds")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--report", default=None,
                   help="write the error-report CSV here")
    p.set_defaults(func=cmd_selftest)

    p = sub.add_parser("elastica", help="flexural elastica curves (CSV)")
    p.add_argument("--omega", type=float, default=5.0)
    p.add_argument("--constant", "-C", type=float, default=1.0)
    p.add_argument("--k", type=float, action="append",
                   default=None, help="modulus in (0,1); repeatable")
    p.add_argument("--s-range", default="0:1:101")
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_elastica)

    p = sub.add_parser("cantilever",
                       help="cantilever under follower force")
    p.add_argument("--psi1", type=float, default=None,
                   help="free-end angle in radians (default pi/3)")
    p.add_argument("--psi1-deg", type=float, default=None,
                   help="free-end angle in degrees")
    p.add_argument("--lambda", dest="lam", type=float, default=10.0)
    p.add_argument("--nu", type=float, default=1.0)
    p.add_argument("--omega", type=float, default=4.0)
    p.add_argument("--s-range", default="0:1:101")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_cantilever)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already
        return int(exc.code or 0)
    if getattr(args, "command", None) == "elastica" and args.k is None:
        args.k = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9]
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
