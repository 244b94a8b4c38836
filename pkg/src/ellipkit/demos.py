"""Two elasticity demos built on the library: the flexural elastica and
the finite-strain cantilever loaded by a follower force.

Both curves are closed-form in the Jacobian functions.  The cantilever's
deformed length L is only defined for the shearless case (stiffness ratio
nu = 1); otherwise it is reported as NaN.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .core import NAN
from .integrals import melE, melK
from .jacobi import sncndn
from .jacobi_integrals import mJzeta, mjepsilon, mjlambda

__all__ = ["CurveSample", "ElasticaConfig", "CantileverConfig",
           "elastica_curve", "cantilever_solve", "CantileverResult"]


@dataclass(frozen=True)
class CurveSample:
    s: float
    x: float
    y: float
    phi: float


def _check_grid(s_grid):
    grid = [float(s) for s in s_grid]
    if len(grid) == 0:
        raise ValueError("empty arclength grid")
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise ValueError("arclength grid must be strictly increasing")
    return grid


@dataclass(frozen=True)
class ElasticaConfig:
    """Flexural elastica: load parameter omega, constant C, moduli k."""
    omega: float = 5.0
    C: float = 1.0
    k_list: tuple = (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9)
    s_grid: tuple = tuple(i / 100.0 for i in range(101))

    def __post_init__(self):
        if not self.omega > 0.0:
            raise ValueError("omega must be positive")
        if any(not 0.0 < k < 1.0 for k in self.k_list):
            raise ValueError("all moduli k must lie in (0, 1)")
        _check_grid(self.s_grid)


def elastica_curve(cfg: ElasticaConfig) -> dict:
    """Curve samples per modulus k.

    x(s) = 2[eps(omega s + C | k^2) - eps(C | k^2)]/omega - s,
    y(s) = 2k[cn(C | k^2) - cn(omega s + C | k^2)]/omega,
    phi(s) = 2 am((omega s + C)/... ) is not needed here; the tangent angle
    follows from x', y' and is emitted as atan2(y', x') via finite sn/cn.
    """
    w = cfg.omega
    out = {}
    for k in cfg.k_list:
        m = k * k
        eps_c = mjepsilon(cfg.C, m)
        _, cn_c, _ = sncndn(cfg.C, m)
        rows = []
        for s in cfg.s_grid:
            u = w * s + cfg.C
            sn_u, cn_u, dn_u = sncndn(u, m)
            x = 2.0 * (mjepsilon(u, m) - eps_c) / w - s
            y = 2.0 * k * (cn_c - cn_u) / w
            # tangent angle of the elastica: x' = 2 dn^2 - 1, y' = 2 k sn dn
            phi = math.atan2(2.0 * k * sn_u * dn_u, 2.0 * dn_u * dn_u - 1.0)
            rows.append(CurveSample(s=float(s), x=x, y=y, phi=phi))
        out[k] = rows
    return out


@dataclass(frozen=True)
class CantileverConfig:
    """Cantilever under a follower force.

    psi1: angle between force direction and inward normal at the free end;
    lam: generalized slenderness; nu: stiffness ratio in [-1, 1];
    omega: load factor.
    """
    psi1: float = math.pi / 3.0
    lam: float = 10.0
    nu: float = 1.0
    omega: float = 4.0
    s_grid: tuple = tuple(i / 100.0 for i in range(101))

    def __post_init__(self):
        if not self.lam > 0.0:
            raise ValueError("lambda must be positive")
        if not -1.0 <= self.nu <= 1.0:
            raise ValueError("nu must lie in [-1, 1]")
        if not self.omega > 0.0:
            raise ValueError("omega must be positive")
        _check_grid(self.s_grid)


@dataclass(frozen=True)
class CantileverResult:
    C: float
    alpha: float
    L: float
    samples: tuple
    # derived constants, useful for cross-checks
    k: float = NAN
    m2: float = NAN
    omegal: float = NAN
    k1: float = NAN


def cantilever_solve(cfg: CantileverConfig,
                     use_epsilon_form: bool = False) -> CantileverResult:
    """Solve the cantilever shape.

    The x-coordinate can be evaluated through the zeta-based formula
    (default, as in the closed-form solution) or through the equivalent
    epsilon-based one (use_epsilon_form=True); the two agree to roundoff
    and the pair serves as an internal consistency check.
    """
    eta2 = (cfg.omega / cfg.lam) ** 2
    k = math.sin(cfg.psi1 / 2.0)
    den = 1.0 - cfg.nu * eta2 * (1.0 - k * k)
    rad = 1.0 + cfg.nu * eta2 * (2.0 * k * k - 1.0)
    if den == 0.0 or rad < 0.0:
        nan_samples = tuple(CurveSample(float(s), NAN, NAN, NAN)
                            for s in cfg.s_grid)
        return CantileverResult(NAN, NAN, NAN, nan_samples)
    m2 = cfg.nu * eta2 * k * k / den
    omegal = cfg.omega * math.sqrt(rad)
    k1 = math.sqrt((k * k + m2) / (1.0 + m2))
    m1 = k1 * k1
    c0 = -omegal + melK(m1)

    def sn_cn_dn(u):
        return sncndn(u, m1)

    sn_c, cn_c, dn_c = sn_cn_dn(c0)
    alpha = 2.0 * math.asin(k * sn_c / math.sqrt(1.0 + m2 * cn_c * cn_c))

    ek_ratio = melE(m1) / melK(m1)
    zeta_c = mJzeta(c0, m1)
    eps_c = mjepsilon(c0, m1)

    def frac(sn_u, cn_u, dn_u):
        return sn_u * cn_u * dn_u / (1.0 + m2 * cn_u * cn_u)

    frac_c = frac(sn_c, cn_c, dn_c)
    cnfrac_c = cn_c / (1.0 + m2 * cn_c * cn_c)
    w2 = cfg.omega ** 2

    samples = []
    for s in cfg.s_grid:
        u = omegal * s + c0
        sn_u, cn_u, dn_u = sn_cn_dn(u)
        if use_epsilon_form:
            bracket = (mjepsilon(u, m1) - eps_c - 0.5 * omegal * s
                       - m2 * (frac(sn_u, cn_u, dn_u) - frac_c))
        else:
            bracket = ((ek_ratio - 0.5) * omegal * s
                       + mJzeta(u, m1) - zeta_c
                       - m2 * (frac(sn_u, cn_u, dn_u) - frac_c))
        xx = 0.5 * (cfg.nu - 1.0) * w2 * s / cfg.lam ** 2 \
            + 2.0 * omegal / w2 * bracket
        yy = -(2.0 * omegal * k * math.sqrt(1.0 + m2) / w2) * (
            cn_u / (1.0 + m2 * cn_u * cn_u) - cnfrac_c)
        x = xx * math.cos(alpha) + yy * math.sin(alpha)
        y = -xx * math.sin(alpha) + yy * math.cos(alpha)
        phi = 2.0 * math.asin(
            k * sn_u / math.sqrt(1.0 + m2 * cn_u * cn_u)) - alpha
        samples.append(CurveSample(s=float(s), x=x, y=y, phi=phi))

    if cfg.nu == 1.0:
        nu_char = m2 / (1.0 + m2)
        big_l = (1.0 - (1.0 + 2.0 * k * k / m2) * eta2
                 + 2.0 * k * k / m2 / omegal * eta2
                 * (mjlambda(omegal + c0, nu_char, m1)
                    - mjlambda(c0, nu_char, m1)))
    else:
        big_l = NAN

    return CantileverResult(C=c0, alpha=alpha, L=big_l,
                            samples=tuple(samples),
                            k=k, m2=m2, omegal=omegal, k1=k1)
