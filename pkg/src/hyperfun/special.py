"""Ruijsenaars' R-function, the Askey-Wilson function and their machinery.

The R-function is the hyperbolic Barnes integral at a distinguished
parameter specialization; the Askey-Wilson function is the analogous
specialization of the trigonometric Barnes integral.  Both are self-dual
eigenfunctions of the same second-order difference operator, and the
modular prefactors defined at the bottom assemble the R-function as a
bilinear combination of Askey-Wilson functions in the two modular bases.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import DomainError
from .gammas import HyperbolicPeriods, eexp, gamma_h, qpoch, theta
from .integrals import eval_Bh, eval_Eh
from .series import bt_series, qpoch_many, sum_phi

__all__ = [
    "dual_gamma",
    "CouplingPoint",
    "AWParams",
    "aw_parameters",
    "reptrig_point",
    "barnes_point",
    "n_factor",
    "c_factor",
    "r_function",
    "r_function_vdbult",
    "r_function_euler",
    "r_eval_rhs",
    "aw_series",
    "aw_function",
    "aw_coeff_A",
    "aw_eigenvalue_B",
    "aw_operator_apply",
    "gauge_h",
    "gauge_g",
    "multiplier_M",
    "prefactor_K",
    "psi_solution",
    "r_bilinear_rhs",
]

_HALF_HADAMARD = (
    (0.5, 0.5, 0.5, 0.5),
    (0.5, 0.5, -0.5, -0.5),
    (0.5, -0.5, 0.5, -0.5),
    (0.5, -0.5, -0.5, 0.5),
)


def dual_gamma(gamma):
    """Dual coupling parameters: the involutive half-Hadamard map."""
    g = tuple(complex(x) for x in gamma)
    if len(g) != 4:
        raise DomainError("coupling vector has four components")
    return tuple(sum(r[j] * g[j] for j in range(4)) for r in _HALF_HADAMARD)


def _s23(gamma):
    return (gamma[0], gamma[1], gamma[3], gamma[2])


def _neg(gamma):
    return tuple(-x for x in gamma)


@dataclass(frozen=True)
class CouplingPoint:
    """Coupling constants, geometric and spectral variables, periods."""

    gamma: tuple
    x: complex
    lam: complex
    periods: HyperbolicPeriods

    def __post_init__(self):
        object.__setattr__(self, "gamma", tuple(complex(g) for g in self.gamma))
        if len(self.gamma) != 4:
            raise DomainError("coupling vector has four components")

    @property
    def dual(self) -> "CouplingPoint":
        return CouplingPoint(dual_gamma(self.gamma), self.lam, self.x, self.periods)


@dataclass(frozen=True)
class AWParams:
    """Askey-Wilson parameters and their duals for one coupling point."""

    a: complex
    b: complex
    c: complex
    d: complex
    mu: complex
    z: complex
    q: complex
    a_dual: complex
    b_dual: complex
    c_dual: complex
    d_dual: complex


def aw_parameters(gamma, x, lam, w1, w2) -> AWParams:
    """Exponential Askey-Wilson parameters of a coupling point.

    Valid for any period pair with Im(w1/w2) > 0 (in particular the
    modular-flipped pair (-w2, w1)).
    """
    g = tuple(complex(v) for v in gamma)
    gd = dual_gamma(g)
    w = (w1 + w2) / 2
    a, b, c, d = (eexp((gj + w) / w2) for gj in g)
    ad, bd, cd, dd = (eexp((gj + w) / w2) for gj in gd)
    return AWParams(
        a=a, b=b, c=c, d=d,
        mu=eexp(-1j * lam / w2), z=eexp(-1j * x / w2),
        q=eexp(w1 / w2),
        a_dual=ad, b_dual=bd, c_dual=cd, d_dual=dd,
    )


def reptrig_point(gamma, x, lam, w1, w2):
    """Eight-tuple on prod(t) = 1 whose Barnes integral gives the AW function."""
    p = aw_parameters(gamma, x, lam, w1, w2)
    return (
        1 / (p.a * p.b), 1.0 + 0j, p.a_dual * p.mu, p.a * p.z,
        p.a / p.z, p.a_dual / p.mu, p.q / (p.a * p.d), 1 / (p.a * p.c),
    )


def barnes_point(gamma, x, lam, periods):
    """Hyperbolic Barnes parameters of the R-function specialization."""
    g = tuple(complex(v) for v in gamma)
    g0d = dual_gamma(g)[0]
    iw = 1j * periods.omega
    return (
        iw,
        iw + 1j * g[0] + 1j * g[1],
        -1j * g[0] + x,
        -1j * g[0] - x,
        -1j * g0d + lam,
        -1j * g0d - lam,
        iw + 1j * g[0] + 1j * g[2],
        iw + 1j * g[0] + 1j * g[3],
    )


def n_factor(gamma, periods):
    """Normalization N = prod_j G(i gamma_0 + i gamma_j + i omega)."""
    g = tuple(complex(v) for v in gamma)
    iw = 1j * periods.omega
    out = 1.0 + 0j
    for j in (1, 2, 3):
        out *= complex(gamma_h(1j * g[0] + 1j * g[j] + iw, periods.w1, periods.w2))
    return out


def c_factor(gamma, y, periods):
    """Harish-Chandra-type c-function of the R-function theory."""
    g = tuple(complex(v) for v in gamma)
    w1, w2 = periods.w1, periods.w2
    out = 1 / complex(gamma_h(2 * y + 1j * periods.omega, w1, w2))
    for gj in g:
        out *= complex(gamma_h(y - 1j * gj, w1, w2))
    return out


def r_function(gamma, x, lam, periods):
    """Ruijsenaars' hypergeometric R-function (Barnes-integral route)."""
    g = tuple(complex(v) for v in gamma)
    g0d = dual_gamma(g)[0]
    w1, w2 = periods.w1, periods.w2
    u = barnes_point(g, x, lam, periods)
    pref = n_factor(g, periods) / (2 * cmath.sqrt(w1 * w2))
    for arg in (1j * g[0] + x, 1j * g[0] - x, 1j * g0d + lam, 1j * g0d - lam):
        pref /= complex(gamma_h(arg, w1, w2))
    return pref * eval_Bh(u, periods)


def r_function_vdbult(gamma, x, lam, periods):
    """R via the Barnes integral at the matrix-coefficient parameter point."""
    g = tuple(complex(v) for v in gamma)
    gd = dual_gamma(g)
    w1, w2 = periods.w1, periods.w2
    iw = 1j * periods.omega
    up = (
        x - lam / 2 + iw / 2 + 0.5j * (g[0] - g[1]),
        x - lam / 2 + iw / 2 - 0.5j * (g[0] - g[1]),
        -x - lam / 2 + iw / 2 + 0.5j * (g[3] - g[2]),
        -x - lam / 2 + iw / 2 - 0.5j * (g[3] - g[2]),
        lam / 2 + iw / 2 + 0.5j * (-g[0] - g[1]),
        lam / 2 + iw / 2 - 0.5j * (-g[0] - g[1]),
        lam / 2 + iw / 2 + 0.5j * (g[2] + g[3]),
        lam / 2 + iw / 2 - 0.5j * (g[2] + g[3]),
    )
    pref = n_factor(g, periods) / (2 * cmath.sqrt(w1 * w2))
    for arg in (x - 1j * g[0], x - 1j * g[1], lam - 1j * gd[0], lam - 1j * gd[1]):
        pref *= complex(gamma_h(arg, w1, w2))
    for arg in (x + 1j * g[2], x + 1j * g[3], lam + 1j * gd[2], lam + 1j * gd[3]):
        pref /= complex(gamma_h(arg, w1, w2))
    return pref * eval_Bh(up, periods)


def r_function_euler(gamma, x, lam, periods, second=False):
    """R via the hyperbolic Euler integral (either of the two parameter points)."""
    g = tuple(complex(v) for v in gamma)
    gd = dual_gamma(g)
    w1, w2 = periods.w1, periods.w2
    iw = 1j * periods.omega
    pref = 1 / (2 * cmath.sqrt(w1 * w2))
    for j in (1, 2, 3):
        pref *= complex(gamma_h(1j * g[0] + 1j * g[j] + iw, w1, w2))
        pref *= complex(gamma_h(lam - 1j * gd[j], w1, w2))
    pref /= complex(gamma_h(lam + 1j * gd[0], w1, w2))
    if not second:
        u = tuple(iw / 2 + 1j * g[j] - 1j * gd[0] / 2 + lam / 2 for j in range(4)) + (
            iw / 2 + x + 1j * gd[0] / 2 - lam / 2,
            iw / 2 - x + 1j * gd[0] / 2 - lam / 2,
        )
        return pref * eval_Eh(u, periods)
    for gj in g:
        pref /= complex(gamma_h(1j * gj + x, w1, w2))
        pref /= complex(gamma_h(1j * gj - x, w1, w2))
    up = tuple(iw / 2 - 1j * g[j] + 1j * gd[0] / 2 + lam / 2 for j in range(4)) + (
        iw / 2 + x - 1j * gd[0] / 2 - lam / 2,
        iw / 2 - x - 1j * gd[0] / 2 - lam / 2,
    )
    return pref * eval_Eh(up, periods)


def r_special_value(gamma, lam, periods):
    """R(gamma; i omega + i gamma_0, lam) through the coupling-permutation
    symmetry (the point itself lies outside every straight-line contour
    window, but swapping gamma_0 and gamma_3 lands on the closed-form
    evaluation point).  Expected value: 1.
    """
    g = tuple(complex(v) for v in gamma)
    sg = (g[3], g[1], g[2], g[0])
    ratio = (
        c_factor(dual_gamma(g), lam, periods)
        * n_factor(g, periods)
        / c_factor(dual_gamma(sg), lam, periods)
        / n_factor(sg, periods)
    )
    return ratio * r_eval_rhs(sg, lam, periods)


def r_eval_rhs(gamma, lam, periods):
    """Closed form of R at the discrete geometric point x = i omega + i gamma_3."""
    g = tuple(complex(v) for v in gamma)
    gd = dual_gamma(g)
    w1, w2 = periods.w1, periods.w2
    iw = 1j * periods.omega
    out = 1.0 + 0j
    for j in (1, 2):
        out *= complex(gamma_h(iw + 1j * g[0] + 1j * g[j], w1, w2))
        out /= complex(gamma_h(iw + 1j * g[j] + 1j * g[3], w1, w2))
        out /= complex(gamma_h(1j * gd[j] + lam, w1, w2))
        out /= complex(gamma_h(1j * gd[j] - lam, w1, w2))
    return out


# ---------------------------------------------------------------------------
# Askey-Wilson function


def aw_series(gamma, x, lam, w1, w2):
    """Askey-Wilson function as the two-term balanced 4-phi-3 sum."""
    p = aw_parameters(gamma, x, lam, w1, w2)
    a, b, c, d, mu, z, q = p.a, p.b, p.c, p.d, p.mu, p.z, p.q
    ad = p.a_dual
    first = (
        qpoch(a * b, q) * qpoch(a * c, q) / qpoch(q / (a * d), q)
        * sum_phi([a * z, a / z, ad * mu, ad / mu], [a * b, a * c, a * d], q, q)
    )
    num = qpoch_many(
        [q * b / d, q * c / d, ad * mu, ad / mu, a * z, a / z], q
    )
    den = qpoch_many(
        [a * d / q, q * ad * mu / (a * d), q * ad / (mu * a * d), q * z / d, q / (z * d)],
        q,
    )
    second = num / den * sum_phi(
        [q * z / d, q / (z * d), q * ad * mu / (a * d), q * ad / (mu * a * d)],
        [q * q / (a * d), q * b / d, q * c / d],
        q,
        q,
    )
    return first + second


def aw_function(gamma, x, lam, w1, w2):
    """Askey-Wilson function via the trigonometric Barnes integral."""
    t = reptrig_point(gamma, x, lam, w1, w2)
    q = eexp(w1 / w2)
    pref = qpoch_many([q, t[1] * t[2], t[1] * t[3], t[1] * t[4], t[1] * t[5]], q) / 2
    return pref * bt_series(t, q)


def aw_coeff_A(gamma, x, w1, w2):
    """Geometric coefficient of the Askey-Wilson difference operator."""
    g = tuple(complex(v) for v in gamma)
    w = (w1 + w2) / 2
    s = lambda v: cmath.sinh(math.pi * v / w2)
    num = 1.0 + 0j
    for gj in g:
        num *= s(1j * w + x + 1j * gj)
    return num / (s(2 * x) * s(2 * (x + 1j * w)))


def aw_eigenvalue_B(gamma, lam, w1, w2):
    """Spectral eigenvalue of the Askey-Wilson difference equation."""
    g0d = dual_gamma(gamma)[0]
    w = (w1 + w2) / 2
    s = lambda v: cmath.sinh(math.pi * v / w2)
    return s(lam - 1j * w - 1j * g0d) * s(lam + 1j * w + 1j * g0d)


def aw_operator_apply(f, gamma, x, w1, w2):
    """Apply the Askey-Wilson operator with step i*w1 to f at x."""
    return aw_coeff_A(gamma, x, w1, w2) * (f(x + 1j * w1) - f(x)) + aw_coeff_A(
        gamma, -x, w1, w2
    ) * (f(x - 1j * w1) - f(x))


# ---------------------------------------------------------------------------
# gauge factors, multipliers, and the modular bilinear form of R


def gauge_h(gamma, x, lam, w1, w2):
    """The 1-coboundary gauge factor h (independent of the spectral variable)."""
    g = tuple(complex(v) for v in gamma)
    gd = dual_gamma(g)
    q = eexp(w1 / w2)
    w = (w1 + w2) / 2
    num = theta(eexp((g[3] - gd[0] + 1j * x) / w2), q)
    den = theta(eexp((w - g[3] - 1j * x) / w2), q)
    for gj in g:
        den *= qpoch(eexp((w - gj + 1j * x) / w2), q)
    return num / den


def gauge_g(gamma, x, w1, w2):
    """Gauge factor conjugating the operator into sign-flipped couplings."""
    g = tuple(complex(v) for v in gamma)
    q = eexp(w1 / w2)
    w = (w1 + w2) / 2
    num = qpoch(eexp((g[2] + w + 1j * x) / w2), q) * qpoch(
        eexp((g[2] + w - 1j * x) / w2), q
    )
    den = qpoch(eexp((-g[3] + w + 1j * x) / w2), q) * qpoch(
        eexp((-g[3] + w - 1j * x) / w2), q
    )
    return num / den


def multiplier_M(gamma, x, w1, w2):
    """Elliptic multiplier in front of the bilinear Askey-Wilson sum."""
    g = tuple(complex(v) for v in gamma)
    gd = dual_gamma(g)
    q = eexp(w1 / w2)
    w = (w1 + w2) / 2
    num = (
        theta(eexp((gd[0] - g[3] - 1j * x) / w2), q)
        * theta(eexp((w + g[2] + 1j * x) / w2), q)
        * theta(eexp((w + g[3] - 1j * x) / w2), q)
    )
    den = (
        theta(eexp((g[3] - gd[0] - 1j * x) / w2), q)
        * theta(eexp((w + g[0] - 1j * x) / w2), q)
        * theta(eexp((w + g[1] - 1j * x) / w2), q)
    )
    return num / den


def prefactor_K(gamma, periods):
    """Constant prefactor of the bilinear Askey-Wilson expansion of R."""
    g = tuple(complex(v) for v in gamma)
    w1, w2 = periods.w1, periods.w2
    q = eexp(w1 / w2)
    w = periods.omega
    out = cmath.exp(-1j * math.pi / 4)
    out *= eexp(-(w1 / w2 + w2 / w1) / 24)
    out *= eexp(-3 * w * (g[0] + g[1] + g[2] - g[3]) / (2 * w1 * w2))
    for j in (1, 2, 3):
        out *= complex(gamma_h(1j * w + 1j * g[0] + 1j * g[j], w1, w2))
    out /= theta(eexp((g[2] - g[3]) / w2), q)
    out *= eexp(
        (
            -g[0] ** 2 - g[1] ** 2 - g[2] ** 2 + g[3] ** 2
            - 2 * g[0] * g[1] - 2 * g[0] * g[2] + 2 * g[0] * g[3]
        )
        / (4 * w1 * w2)
    )
    return out


def psi_solution(gamma, x, lam, w1, w2):
    """Self-dual gauge-twisted Askey-Wilson eigenfunction psi."""
    g = tuple(complex(v) for v in gamma)
    gd = dual_gamma(g)
    ratio = (
        gauge_h(g, x, lam, w1, w2)
        * gauge_h(gd, lam, x, w1, w2)
        / gauge_h(_neg(g), x, lam, w1, w2)
        / gauge_h(_neg(gd), lam, x, w1, w2)
    )
    return ratio * aw_function(_neg(g), x, lam, w1, w2)


def r_bilinear_rhs(gamma, x, lam, periods):
    """R as a bilinear sum of Askey-Wilson functions in the two modular bases."""
    w1, w2 = periods.w1, periods.w2

    def term(g):
        return (
            prefactor_K(g, periods)
            * multiplier_M(g, x, w1, w2)
            * multiplier_M(dual_gamma(g), lam, w1, w2)
            * aw_function(_s23(g), x, lam, w1, w2)
            * psi_solution(_neg(g), x, lam, -w2, w1)
        )

    g = tuple(complex(v) for v in gamma)
    return term(g) + term(_s23(g))
