"""Function registry and the element-wise (broadcasting) application layer.

Every scalar function in the library is registered under a canonical
lower-level name together with its aliases: the capitalized elemental name
and, where the function takes the parameter m, a k-argument twin (same name
without the leading ``m``) that squares its last argument before calling
the m-form.  Lookup is case-insensitive; unknown names raise with
near-match suggestions.

Broadcasting follows the same-shape-or-scalar rule: all non-scalar
arguments must share one shape, scalars are repeated.  Shape and arity
violations raise (they are caller bugs); domain violations inside the
scalar kernels still come back as NaN data.
"""

from __future__ import annotations

import difflib
from dataclasses import dataclass, field

import numpy as np

from . import bulirsch, carlson, integrals, inverse, jacobi
from . import jacobi_integrals as jint
from . import misc, theta

__all__ = [
    "FunctionDescriptor", "RegistryLookupError", "ArityError", "ShapeError",
    "lookup", "broadcast_apply", "all_descriptors", "manifest",
    "manifest_csv",
]


class RegistryLookupError(LookupError):
    """Unknown function name; carries near-match suggestions."""

    def __init__(self, name: str, suggestions: list[str]):
        self.name = name
        self.suggestions = suggestions
        hint = f"; did you mean: {', '.join(suggestions)}?" if suggestions else ""
        super().__init__(f"unknown function {name!r}{hint}")


class ArityError(TypeError):
    """Wrong number of arguments passed to broadcast_apply."""


class ShapeError(ValueError):
    """Non-scalar arguments of differing shapes."""


@dataclass(frozen=True)
class FunctionDescriptor:
    name: str                      # canonical scalar name
    impl: object = field(repr=False)
    arity: int = 1                 # primary argument count
    arg_roles: tuple = ()
    aliases: tuple = ()
    extra_arities: tuple = ()      # reduced forms served by the same name
    domain_note: str = ""

    @property
    def arities(self) -> tuple:
        return tuple(sorted((self.arity, *self.extra_arities)))

    def __call__(self, *args):
        return self.impl(*args)


def _kform(impl):
    """Wrap an m-form: same arguments but the last one is the modulus k."""
    def wrapped(*args):
        k = float(args[-1])
        return impl(*args[:-1], k * k)
    return wrapped


_REGISTRY: dict[str, FunctionDescriptor] = {}
_INDEX: dict[str, FunctionDescriptor] = {}   # case-folded name/alias -> desc


def _register(name, impl, arity, roles, aliases=(), extra_arities=(),
              domain_note=""):
    desc = FunctionDescriptor(
        name=name, impl=impl, arity=arity, arg_roles=tuple(roles),
        aliases=tuple(aliases), extra_arities=tuple(extra_arities),
        domain_note=domain_note,
    )
    if name in _REGISTRY:
        raise ValueError(f"duplicate registry name {name!r}")
    _REGISTRY[name] = desc
    for key in (name, *aliases):
        folded = key.lower()
        if folded in _INDEX:
            raise ValueError(f"registry name collision on {key!r}")
        _INDEX[folded] = desc
    return desc


def _register_m(name, impl, arity, roles, elemental, extra_arities=(),
                extra_aliases=(), domain_note="", k_elemental=None):
    """Register an m-form plus its k-argument twin (leading 'm' dropped)."""
    _register(name, impl, arity, roles,
              aliases=(elemental, *extra_aliases),
              extra_arities=extra_arities, domain_note=domain_note)
    k_name = name[1:]
    k_roles = tuple(roles[:-1]) + ("modulus",)
    k_aliases = (k_elemental,) if k_elemental else ()
    _register(k_name, _kform(impl), arity, k_roles, aliases=k_aliases,
              extra_arities=extra_arities,
              domain_note="modulus form: last argument k enters as m = k*k")


def _build() -> None:
    A, P, C, M, K, Q, B = ("argument", "amplitude", "characteristic",
                           "parameter", "modulus", "nome", "coefficient")

    # Bulirsch forms (complementary modulus kc; no parameter argument)
    _register("el1", bulirsch.el1, 2, (A, K), aliases=("e1", "BulirschEL1"))
    _register("el2", bulirsch.el2, 4, (A, K, B, B),
              aliases=("e2", "BulirschEL2"))
    _register("el3", bulirsch.el3, 3, (A, K, C), aliases=("e3", "BulirschEL3"))
    _register("cel1", bulirsch.cel1, 1, (K,), aliases=("BulirschCEL1",))
    _register("cel2", bulirsch.cel2, 3, (K, B, B), aliases=("BulirschCEL2",))
    _register("cel3", bulirsch.cel3, 2, (K, C), aliases=("BulirschCEL3",))
    _register("cel", bulirsch.cel, 4, (K, C, B, B), aliases=("BulirschCEL",))

    # Carlson symmetric integrals
    _register("rc", carlson.rc, 2, (A, A), aliases=("CarlsonRC",))
    _register("rd", carlson.rd, 3, (A, A, A), aliases=("CarlsonRD",))
    _register("rf", carlson.rf, 3, (A, A, A), aliases=("CarlsonRF",))
    _register("rg", carlson.rg, 3, (A, A, A), aliases=("CarlsonRG",))
    _register("rj", carlson.rj, 4, (A, A, A, C), aliases=("CarlsonRJ",))

    # Legendre/Jacobi-form incomplete and complete integrals.  melB/melD/
    # melE/melPi serve the one-argument complete form under the same name
    # (their printed lowercase twins collide case-insensitively anyway).
    _register_m("melB", integrals.melB, 2, (A, M), "mEllipticB",
                extra_arities=(1,), k_elemental="EllipticB")
    _register_m("melD", integrals.melD, 2, (A, M), "mEllipticD",
                extra_arities=(1,), extra_aliases=(),
                k_elemental="EllipticD")
    _register_m("melE", integrals.melE, 2, (A, M), "mEllipticE",
                extra_arities=(1,), k_elemental="EllipticE")
    _register_m("melF", integrals.melF, 2, (A, M), "mEllipticF",
                k_elemental="EllipticF")
    _register_m("melPi", integrals.melPi, 3, (A, C, M), "mEllipticPi",
                extra_arities=(2,), k_elemental="EllipticPi")
    _register_m("mpelB", integrals.mpelB, 2, (P, M), "mpEllipticB",
                k_elemental="pEllipticB")
    _register_m("mpelD", integrals.mpelD, 2, (P, M), "mpEllipticD",
                k_elemental="pEllipticD")
    _register_m("mpelE", integrals.mpelE, 2, (P, M), "mpEllipticE",
                k_elemental="pEllipticE")
    _register_m("mpelF", integrals.mpelF, 2, (P, M), "mpEllipticF",
                k_elemental="pEllipticF")
    _register_m("mpelPi", integrals.mpelPi, 3, (P, C, M), "mpEllipticPi",
                k_elemental="pEllipticPi")
    _register_m("mjepsilon", jint.mjepsilon, 2, (A, M), "mJacobiEpsilon",
                k_elemental="JacobiEpsilon")
    _register_m("mjlambda", jint.mjlambda, 3, (A, C, M), "mJacobiLambda",
                extra_aliases=("mjlambd",), k_elemental="JacobiLambda")
    _register_m("melC", integrals.melC, 1, (M,), "mEllipticC",
                k_elemental="EllipticC")
    _register_m("melK", integrals.melK, 1, (M,), "mEllipticK",
                k_elemental="EllipticK")

    # complementary complete integrals
    _register_m("melCE", integrals.melCE, 1, (M,), "mEllipticCE",
                k_elemental="EllipticCE")
    _register_m("melCK", integrals.melCK, 1, (M,), "mEllipticCK",
                k_elemental="EllipticCK")
    _register_m("melCPi", integrals.melCPi, 2, (C, M), "mEllipticCPi",
                k_elemental="EllipticCPi")

    # zeta/omega/Heuman
    _register_m("mJzeta", jint.mJzeta, 2, (A, M), "mJacobiZeta",
                k_elemental="JacobiZeta")
    _register_m("mpJzeta", jint.mpJzeta, 2, (P, M), "mpJacobiZeta",
                k_elemental="pJacobiZeta")
    _register_m("mJomega", jint.mJomega, 3, (A, C, M), "mJacobiOmega",
                k_elemental="JacobiOmega")
    _register_m("mpJomega", jint.mpJomega, 3, (P, C, M), "mpJacobiOmega",
                k_elemental="pJacobiOmega")
    _register_m("mHlambda", integrals.mHlambda, 2, (P, M), "mHeumanLambda",
                k_elemental="HeumanLambda")

    # Jacobian elliptic functions and their inverses
    _register_m("mjam", jacobi.mjam, 2, (A, M), "mJacobiAM",
                k_elemental="JacobiAM")
    _register_m("mijam", inverse.mijam, 2, (P, M), "mInverseJacobiAM",
                k_elemental="InverseJacobiAM")
    for code in jacobi.GLAISHER_CODES:
        up = code.upper()
        fwd = (lambda x, m, _c=code: jacobi.glaisher(_c, x, m))
        _register_m(f"mj{code}", fwd, 2, (A, M), f"mJacobi{up}",
                    k_elemental=f"Jacobi{up}")
        inv = getattr(inverse, f"mij{code}")
        _register_m(f"mij{code}", inv, 2, (A, M), f"mInverseJacobi{up}",
                    k_elemental=f"InverseJacobi{up}")

    # lemniscate and Gudermannian
    _register("gsl", misc.gsl, 1, (A,), aliases=("GaussSL",))
    _register("gcl", misc.gcl, 1, (A,), aliases=("GaussCL",))
    _register("igsl", misc.igsl, 1, (A,), aliases=("InverseGaussSL", "lgsl"))
    _register("igcl", misc.igcl, 1, (A,), aliases=("InverseGaussCL",))
    _register("gd", misc.gd, 1, (A,), aliases=("GudermannGD",))
    _register("igd", misc.igd, 1, (A,), aliases=("InverseGudermannGD",))

    # theta functions (q- and m-forms; no k-argument twins by design)
    for j in (1, 2, 3, 4):
        _register(f"jtheta{j}", getattr(theta, f"jtheta{j}"), 2, (A, Q),
                  aliases=(f"JacobiTheta{j}",))
    for kind in "CDNS":
        _register(f"ntheta{kind}", getattr(theta, f"ntheta{kind}"), 2,
                  (A, Q), aliases=(f"NevilleTheta{kind}",))
        _register(f"mntheta{kind}", getattr(theta, f"mntheta{kind}"), 2,
                  (A, M), aliases=(f"mNevilleTheta{kind}",))

    # nome
    _register("elnome", theta.elnome, 1, (K,), aliases=("EllipticNome",))
    _register("mnome", theta.mnome, 1, (M,), aliases=("mEllipticNome",))
    _register("ielnome", theta.ielnome, 1, (Q,),
              aliases=("InverseEllipticNome",))


_build()


def lookup(name: str) -> FunctionDescriptor:
    """Case-insensitive lookup over canonical names and aliases."""
    desc = _INDEX.get(str(name).lower())
    if desc is None:
        pool = list(_INDEX.keys())
        close = difflib.get_close_matches(str(name).lower(), pool, n=5,
                                          cutoff=0.6)
        raise RegistryLookupError(str(name), close)
    return desc


def all_descriptors() -> list[FunctionDescriptor]:
    """Every canonical descriptor, sorted by name."""
    return [v for _, v in sorted(_REGISTRY.items())]


def broadcast_apply(f, args):
    """Apply a scalar function element-wise over same-shape-or-scalar args.

    `f` may be a descriptor or a registered name.  Returns a float for
    all-scalar input, else an ndarray of the common shape.
    """
    if not isinstance(f, FunctionDescriptor):
        f = lookup(f)
    args = list(args)
    if len(args) not in f.arities:
        want = " or ".join(map(str, f.arities))
        raise ArityError(
            f"{f.name} expects {want} argument(s), got {len(args)}")
    arrays = [np.asarray(a, dtype=float) for a in args]
    shape = None
    for a in arrays:
        if a.ndim == 0:
            continue
        if shape is None:
            shape = a.shape
        elif a.shape != shape:
            raise ShapeError(
                f"argument shapes differ: {shape} vs {a.shape}")
    if shape is None:
        return float(f.impl(*(float(a) for a in arrays)))
    out = np.empty(shape, dtype=float)
    flat = [a.reshape(-1) if a.ndim else None for a in arrays]
    scalars = [float(a) if a.ndim == 0 else None for a in arrays]
    oflat = out.reshape(-1)
    for i in range(oflat.size):
        call = [scalars[j] if flat[j] is None else float(flat[j][i])
                for j in range(len(arrays))]
        oflat[i] = f.impl(*call)
    return out


def manifest() -> list[dict]:
    """Machine-readable registry inventory (one row per canonical name)."""
    rows = []
    for desc in all_descriptors():
        rows.append({
            "name": desc.name,
            "aliases": ";".join(desc.aliases),
            "arities": ";".join(str(a) for a in desc.arities),
            "roles": ";".join(desc.arg_roles),
            "domain_note": desc.domain_note,
        })
    return rows


def manifest_csv() -> str:
    """The manifest as CSV text (header row, LF line endings)."""
    lines = ["name,aliases,arities,roles,domain_note"]
    for row in manifest():
        lines.append(",".join(
            f'"{row[c]}"' if ("," in row[c] or ";" in row[c]) else row[c]
            for c in ("name", "aliases", "arities", "roles", "domain_note")))
    return "\n".join(lines) + "\n"
