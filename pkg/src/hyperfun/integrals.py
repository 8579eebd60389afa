"""Contour quadrature for the nine hypergeometric integrals and their closed forms.

Circle integrals use the n-point trapezoid rule on scaled circles (the mean
of the integrand over roots of unity), doubled until two successive
estimates agree.  Line integrals run along a horizontal line Im z = y0
chosen automatically inside the strip that separates the upward pole
sequences of the integrand from the downward ones; the truncation point
follows from the known exponential decay rate.

Hyperbolic integrands are assembled in log space so that the degeneration
checks (large parameter shifts) cannot overflow.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import AccuracyError, ContourDomainError, DomainError, TruncationError
from .gammas import (
    HyperbolicPeriods,
    eexp,
    gamma_e,
    gamma_h,
    gamma_h_log,
    qpoch,
    theta,
)
from .series import bt_series, ut_series, vt_series

__all__ = [
    "ContourSpec",
    "circle_quadrature",
    "line_quadrature",
    "eval_Se",
    "eval_Sh",
    "eval_Bh",
    "eval_Eh",
    "eval_St",
    "eval_Et",
    "eval_Ut",
    "eval_Ut_contour",
    "eval_Ut_contour_special",
    "eval_Bt",
    "eval_Bt_contour",
    "eval_Vt",
    "eval_Vt_contour",
    "eval_aw_integral",
    "eval_vt_closed_lhs",
    "eval_bt_closed_lhs",
    "closed_form",
    "CLOSED_FORMS",
]


@dataclass(frozen=True)
class ContourSpec:
    """Optional quadrature overrides: kind is inferred by each evaluator."""

    radius: float = None
    truncation: float = None
    n_start: int = 256
    n_cap: int = 65536
    tol: float = 1e-12


_DEFAULT = ContourSpec()


# ---------------------------------------------------------------------------
# generic quadrature


def circle_quadrature(f, n_start=256, tol=1e-12, n_cap=65536, radius=1.0):
    """Mean of f over n-th roots of unity (radius-scaled), doubled to tolerance.

    Computes integral of f(z) dz / (2 pi i z) over the circle.  Returns
    (value, change-at-last-doubling).
    """
    n = max(8, n_start)
    zs = radius * np.exp(2j * np.pi * np.arange(n) / n)
    prev = complex(np.mean(f(zs)))
    while n < n_cap:
        n *= 2
        zs = radius * np.exp(2j * np.pi * np.arange(n) / n)
        val = complex(np.mean(f(zs)))
        err = abs(val - prev)
        if err <= tol * max(abs(val), 1e-300):
            return val, err
        prev = val
    raise AccuracyError(
        "circle quadrature did not converge at %d nodes" % n, estimates=(prev, val)
    )


def line_quadrature(f, decay, T=None, offset=0.0, n_start=256, tol=1e-12, n_cap=65536):
    """Trapezoid rule for integral of f over R + i*offset with exponential decay.

    `decay` is the known rate a with |f| = O(exp(-a |Re z|)); the domain is
    truncated at T = 40/a by default.  Returns (value, change-at-last-doubling).
    """
    if decay <= 0:
        raise DomainError("line quadrature requires a positive decay rate")
    if T is None:
        T = 40.0 / decay
    for _attempt in range(2):
        n = max(16, n_start)
        value, err = _trap_refine(f, T, offset, n, tol, n_cap)
        tail = _tail_bound(f, T, offset, decay)
        if tail <= 10 * tol * max(abs(value), 1e-300):
            return value, max(err, tail)
        T *= 1.5
    raise TruncationError(
        "integrand tail %g exceeds tolerance at T=%g" % (tail, T), estimates=(value,)
    )


def _trap_refine(f, T, offset, n, tol, n_cap):
    prev = _trap(f, T, offset, n)
    while n < n_cap:
        n *= 2
        val = _trap(f, T, offset, n)
        err = abs(val - prev)
        if err <= tol * max(abs(val), 1e-300):
            return val, err
        prev = val
    raise AccuracyError(
        "line quadrature did not converge at %d nodes" % n, estimates=(prev, val)
    )


def _trap(f, T, offset, n):
    xs = np.linspace(-T, T, n + 1)
    vals = np.asarray(f(xs + 1j * offset))
    h = 2 * T / n
    return complex(h * (vals.sum() - (vals[0] + vals[-1]) / 2))


def _tail_bound(f, T, offset, decay):
    ends = np.asarray(f(np.array([-T + 1j * offset, T + 1j * offset])))
    return float(np.abs(ends).sum()) / decay


def _window_radius(include, exclude, margin=1.02):
    lo = max(include) if include else 0.0
    hi = min(exclude) if exclude else math.inf
    if lo * margin * margin >= hi:
        raise ContourDomainError(
            "no circle separates the pole sequences (inner %g, outer %g)" % (lo, hi)
        )
    if math.isinf(hi):
        return max(1.0, lo * margin)
    return math.sqrt(lo * hi)


# ---------------------------------------------------------------------------
# elliptic


def _coords(t, n):
    vals = tuple(complex(x) for x in t)
    if len(vals) != n:
        raise DomainError("expected %d parameters, got %d" % (n, len(vals)))
    return vals


def _check_balance(t, target, label):
    prod = 1.0 + 0j
    for x in t:
        prod *= x
    if abs(prod / target - 1) > 1e-6:
        raise DomainError("%s balancing condition violated" % label)


def elliptic_integrand(t, p, q):
    """I_e(t; .) with 8 parameters, as a vectorized function of z.

    1/Gamma_e(z^{+-2}) is computed as Gamma_e(pq z^{-+2}) via the reflection
    equation, so circle nodes at z = +-1 (zeros of the integrand) are safe.
    """
    t = _coords(t, 8)

    def f(z):
        num = gamma_e(p * q * z * z, p, q) * gamma_e(p * q / (z * z), p, q)
        for tj in t:
            num = num * gamma_e(tj * z, p, q) * gamma_e(tj / z, p, q)
        return num

    return f


def eval_ell_beta_lhs(t, p, q, contour=_DEFAULT, return_error=False):
    """Left side of the elliptic beta integral: six parameters, prod(t) = pq."""
    t = _coords(t, 6)
    _check_balance(t, p * q, "elliptic beta integral")
    if any(abs(x) >= 1 for x in t):
        raise ContourDomainError("elliptic beta integral needs |t_j| < 1")
    radius = contour.radius or _window_radius(
        [abs(x) for x in t], [1 / abs(x) for x in t]
    )

    def f(z):
        num = gamma_e(p * q * z * z, p, q) * gamma_e(p * q / (z * z), p, q)
        for tj in t:
            num = num * gamma_e(tj * z, p, q) * gamma_e(tj / z, p, q)
        return num

    val, err = circle_quadrature(
        f, n_start=contour.n_start, tol=contour.tol, n_cap=contour.n_cap, radius=radius
    )
    pref = qpoch(q, q) * qpoch(p, p) / 2
    return (pref * val, pref * err) if return_error else pref * val


def eval_Se(t, p, q, contour=_DEFAULT, return_error=False):
    """Elliptic hypergeometric function S_e(t; p, q) on the unit circle.

    Needs |t_j| < 1 for all j and prod(t) = (pq)^2.
    """
    t = _coords(t, 8)
    _check_balance(t, (p * q) ** 2, "S_e")
    if any(abs(x) >= 1 for x in t):
        raise ContourDomainError("S_e needs |t_j| < 1 for the undeformed circle")
    radius = contour.radius or _window_radius(
        [abs(x) for x in t], [1 / abs(x) for x in t]
    )
    val, err = circle_quadrature(
        elliptic_integrand(t, p, q),
        n_start=contour.n_start, tol=contour.tol, n_cap=contour.n_cap, radius=radius,
    )
    return (val, err) if return_error else val


# ---------------------------------------------------------------------------
# hyperbolic


def _hyp_rate(periods):
    w = periods.omega
    rate = 4 * math.pi * (w / (periods.w1 * periods.w2)).real
    if rate <= 0:
        raise DomainError("integrand does not decay for these periods")
    return rate


def _hyp_T_n(rate, u, contour):
    """Truncation and starting nodes: the asymptotic decay only sets in
    beyond the spread of the parameter real parts."""
    spread = max(abs(x.real) for x in u)
    T = contour.truncation or (40.0 / rate + 1.1 * spread + 1.0)
    n = max(contour.n_start, 1 << int(math.ceil(math.log2(max(32 * T, 32)))))
    return T, min(n, 8192)


def _strip_window(upper_points, lower_points, w, extra=None):
    """Admissible horizontal contours: max(lower) < y0 < min(upper)."""
    lo = max(lower_points)
    hi = min(upper_points)
    if extra is not None:
        lo = max(lo, extra[0])
        hi = min(hi, extra[1])
    if hi - lo < 0.02 * w.real:
        raise ContourDomainError(
            "no horizontal line separates the pole sequences (%g, %g)" % (lo, hi)
        )
    return (lo + hi) / 2


def eval_Sh(u, periods, contour=_DEFAULT, return_error=False):
    """Hyperbolic hypergeometric function S_h(u) for u on sum(u) = 4 i omega."""
    u = _coords(u, 8)
    periods = _as_periods(periods)
    w1, w2 = periods.ordered()
    w = periods.omega
    _check_additive_balance(u, 4j * w, "S_h")
    y0 = _strip_window(
        [w.real - x.imag for x in u],
        [x.imag - w.real for x in u],
        w,
        extra=(-0.98 * w.real, 0.98 * w.real),
    )

    def f(z):
        s = gamma_h_log(1j * w + 2 * z, w1, w2) + gamma_h_log(1j * w - 2 * z, w1, w2)
        for uj in u:
            s = s - gamma_h_log(uj + z, w1, w2) - gamma_h_log(uj - z, w1, w2)
        return np.exp(s)

    rate = _hyp_rate(periods)
    T, n0 = _hyp_T_n(rate, u, contour)
    val, err = line_quadrature(
        f, rate, T=T, offset=y0, n_start=n0, tol=contour.tol, n_cap=contour.n_cap,
    )
    return (val, err) if return_error else val


def eval_Bh(u, periods, contour=_DEFAULT, return_error=False):
    """Hyperbolic Barnes integral B_h(u), u on sum(u) = 4 i omega.

    The contour is a horizontal line chosen in the window left open by the
    two four-parameter pole families (so boundary cases such as u_1 = i
    omega are admissible).
    """
    u = _coords(u, 8)
    periods = _as_periods(periods)
    w1, w2 = periods.ordered()
    w = periods.omega
    _check_additive_balance(u, 4j * w, "B_h")
    num_idx = (2, 3, 4, 5)
    den_idx = (0, 1, 6, 7)
    y0 = _strip_window(
        [w.real - u[j].imag for j in den_idx],
        [u[j].imag - w.real for j in num_idx],
        w,
    )

    def f(z):
        s = np.zeros_like(z)
        for j in num_idx:
            s = s + gamma_h_log(z - u[j], w1, w2)
        for j in den_idx:
            s = s - gamma_h_log(z + u[j], w1, w2)
        return np.exp(s)

    rate = _hyp_rate(periods)
    T, n0 = _hyp_T_n(rate, u, contour)
    val, err = line_quadrature(
        f, rate, T=T, offset=y0, n_start=n0, tol=contour.tol, n_cap=contour.n_cap,
    )
    val, err = 2 * val, 2 * err
    return (val, err) if return_error else val


def eval_Eh(u, periods, contour=_DEFAULT, return_error=False):
    """Hyperbolic Euler integral E_h(u) for six free parameters.

    Needs the convergence condition Im(sum(u)/(w1 w2)) > Re(2 omega/(w1 w2))
    and all Im(u_j) < Re(omega).
    """
    u = _coords(u, 6)
    periods = _as_periods(periods)
    w1, w2 = periods.ordered()
    w = periods.omega
    total = sum(u)
    slack = (total / (w1 * w2)).imag - (2 * w / (w1 * w2)).real
    if slack <= 0:
        raise DomainError("E_h convergence condition violated")
    y0 = _strip_window(
        [w.real - x.imag for x in u],
        [x.imag - w.real for x in u],
        w,
        extra=(-0.98 * w.real, 0.98 * w.real),
    )
    rate = 2 * math.pi * slack

    def f(z):
        s = gamma_h_log(1j * w + 2 * z, w1, w2) + gamma_h_log(1j * w - 2 * z, w1, w2)
        for uj in u:
            s = s - gamma_h_log(uj + z, w1, w2) - gamma_h_log(uj - z, w1, w2)
        return np.exp(s)

    T, n0 = _hyp_T_n(rate, u, contour)
    val, err = line_quadrature(
        f, rate, T=T, offset=y0, n_start=n0, tol=contour.tol, n_cap=contour.n_cap,
    )
    return (val, err) if return_error else val


def _as_periods(p):
    if isinstance(p, HyperbolicPeriods):
        return p
    return HyperbolicPeriods(*p)


def _check_additive_balance(u, target, label):
    if abs(sum(u) - target) > 1e-6 * max(1.0, abs(target)):
        raise DomainError("%s balancing condition violated" % label)


# ---------------------------------------------------------------------------
# trigonometric


def _qp_pair(a, q, z):
    """(a z; q)_inf (a / z; q)_inf on arrays z."""
    return qpoch(a * z, q) * qpoch(a / z, q)


def eval_St(t, q, contour=_DEFAULT, return_error=False):
    """Trigonometric hypergeometric function S_t(t; q), prod(t) = 1.

    t_1 and t_8 enter only through numerator factors; |t_j| < 1 is
    required for j = 2..7.
    """
    t = _coords(t, 8)
    _check_balance(t, 1.0, "S_t")
    inner = t[1:7]
    if any(abs(x) >= 1 for x in inner):
        raise ContourDomainError("S_t needs |t_j| < 1 for j = 2..7")
    radius = contour.radius or _window_radius(
        [abs(x) for x in inner], [1 / abs(x) for x in inner]
    )

    def f(z):
        num = (
            qpoch(z * z, q) * qpoch(1 / (z * z), q)
            * _qp_pair(1 / t[0], q, z) * _qp_pair(1 / t[7], q, z)
        )
        den = np.ones_like(z)
        for tj in inner:
            den = den * _qp_pair(tj, q, z)
        return num / den

    val, err = circle_quadrature(
        f, n_start=contour.n_start, tol=contour.tol, n_cap=contour.n_cap, radius=radius
    )
    return (val, err) if return_error else val


def eval_Et(t, q, contour=_DEFAULT, return_error=False):
    """Trigonometric Euler integral E_t(t) with six free parameters."""
    t = _coords(t, 6)
    inner = t[1:]
    if any(abs(x) >= 1 for x in inner):
        raise ContourDomainError("E_t needs |t_j| < 1 for j = 2..6")
    radius = contour.radius or _window_radius(
        [abs(x) for x in inner], [1 / abs(x) for x in inner]
    )

    def f(z):
        num = qpoch(z * z, q) * qpoch(1 / (z * z), q) * _qp_pair(1 / t[0], q, z)
        den = np.ones_like(z)
        for tj in inner:
            den = den * _qp_pair(tj, q, z)
        return num / den

    val, err = circle_quadrature(
        f, n_start=contour.n_start, tol=contour.tol, n_cap=contour.n_cap, radius=radius
    )
    return (val, err) if return_error else val


def _default_mu(ta, tb, q):
    """Geometric mean of the two distinguished parameters, rotated off the
    zero locus of the constant theta factors."""
    mu = cmath.sqrt(ta * tb)
    for _ in range(8):
        rot = mu * cmath.exp(0.4j)
        if min(abs(theta(ta / rot, q)), abs(theta(tb / rot, q))) > 1e-6:
            return rot
        mu = rot
    raise DomainError("could not rotate mu off the theta zero locus")


def eval_Ut(t, q):
    """U_t via its canonical two-term 10_W_9 series representation."""
    return ut_series(t, q)


def eval_Ut_contour(t, q, mu=None, contour=_DEFAULT, return_error=False):
    """U_t by quadrature over a single separating circle, when one exists.

    No admissible circle exists on a large part of the parameter space
    (the unit circle never works); this evaluator is the optional
    cross-check used where max(|t1|,|t8|) is small enough.
    """
    t = _coords(t, 8)
    _check_balance(t, 1.0, "U_t")
    q = complex(q)
    if mu is None:
        mu = _default_mu(t[0], t[7], q)
    radius = contour.radius or _window_radius(
        [abs(t[0]), abs(t[7])],
        [1 / abs(x) for x in t[1:7]] + [abs(q) / abs(t[0]), abs(q) / abs(t[7])],
    )
    th_const = theta(t[0] / mu, q) * theta(t[7] / mu, q)
    if abs(th_const) < 1e-12:
        raise DomainError("mu sits on the theta zero locus")

    def f(z):
        val = (
            2 * theta(t[0] * t[7] / (mu * z), q) * theta(z / mu, q) / th_const
            * (1 - z * z / q)
        )
        for tj in t[1:7]:
            val = val * qpoch(z / tj, q) / qpoch(tj * z, q)
        for tj in (t[0], t[7]):
            val = val / (qpoch(tj * z / q, q) * qpoch(tj / z, q))
        return val

    val, err = circle_quadrature(
        f, n_start=contour.n_start, tol=contour.tol, n_cap=contour.n_cap, radius=radius
    )
    return (val, err) if return_error else val


def eval_Ut_contour_special(t, q, contour=_DEFAULT, return_error=False):
    """U_t at the special mu = q/(t1 t7 t8) that cancels the t7 pole family.

    The admissible-circle window is then independent of |t7|, which is what
    the V_t degeneration channel needs.
    """
    t = _coords(t, 8)
    _check_balance(t, 1.0, "U_t")
    q = complex(q)
    th_const = theta(t[0] * t[6], q) * theta(t[6] * t[7], q)
    if abs(th_const) < 1e-12:
        raise DomainError("special mu sits on the theta zero locus")
    radius = contour.radius or _window_radius(
        [abs(t[0]), abs(t[7])],
        [1 / abs(x) for x in t[1:6]] + [abs(q) / abs(t[0]), abs(q) / abs(t[7])],
    )

    def f(z):
        val = 2 * theta(t[0] * t[6] * t[7] / z, q) / th_const * (1 - z * z / q)
        for tj in t[1:6]:
            val = val * qpoch(z / tj, q) / qpoch(tj * z, q)
        val = val * qpoch(z / t[6], q) * qpoch(q / (t[6] * z), q)
        for tj in (t[0], t[7]):
            val = val / (qpoch(tj * z / q, q) * qpoch(tj / z, q))
        return val

    val, err = circle_quadrature(
        f, n_start=contour.n_start, tol=contour.tol, n_cap=contour.n_cap, radius=radius
    )
    return (val, err) if return_error else val


def eval_Bt(t, q):
    """B_t via its two-term balanced 4_phi_3 series representation."""
    return bt_series(t, q)


def eval_Bt_contour(t, q, mu=None, contour=_DEFAULT, return_error=False):
    """Trigonometric Barnes integral by quadrature over a separating circle."""
    t = _coords(t, 8)
    _check_balance(t, 1.0, "B_t")
    q = complex(q)
    if mu is None:
        mu = _default_mu(t[1], t[6], q)
    radius = contour.radius or _window_radius(
        [abs(t[1]), abs(t[6])], [1 / abs(x) for x in t[2:6]]
    )
    th_const = theta(t[1] / mu, q) * theta(t[6] / mu, q)
    if abs(th_const) < 1e-12:
        raise DomainError("mu sits on the theta zero locus")

    def f(z):
        val = (
            2 * theta(t[1] * t[6] / (mu * z), q) * theta(z / mu, q) / th_const
            * qpoch(z / t[0], q) * qpoch(z / t[7], q)
            / (qpoch(t[1] / z, q) * qpoch(t[6] / z, q))
        )
        for tj in t[2:6]:
            val = val / qpoch(tj * z, q)
        return val

    val, err = circle_quadrature(
        f, n_start=contour.n_start, tol=contour.tol, n_cap=contour.n_cap, radius=radius
    )
    return (val, err) if return_error else val


def eval_Vt(t, q):
    """V_t via its very-well-poised 8_W_7 series representation."""
    return vt_series(t, q)


def eval_Vt_contour(t, q, contour=_DEFAULT, return_error=False):
    """Third trigonometric integral V_t by quadrature over a separating circle."""
    t = _coords(t, 6)
    q = complex(q)
    rest = t[1] * t[2] * t[3] * t[4] * t[5]
    th_const = theta(q * t[0] * rest, q)
    if abs(th_const) < 1e-12:
        raise DomainError("theta prefactor vanishes at these parameters")
    radius = contour.radius or _window_radius(
        [abs(t[0])], [1 / abs(x) for x in t[1:]] + [abs(q) / abs(t[0])]
    )

    def f(z):
        val = 2 * theta(q * rest * z, q) / th_const * (1 - z * z / q)
        for tj in t[1:]:
            val = val * qpoch(z / tj, q) / qpoch(tj * z, q)
        return val / (qpoch(t[0] * z / q, q) * qpoch(t[0] / z, q))

    val, err = circle_quadrature(
        f, n_start=contour.n_start, tol=contour.tol, n_cap=contour.n_cap, radius=radius
    )
    return (val, err) if return_error else val


# --- the three four-parameter evaluation-formula integrands ---------------


def eval_aw_integral(t, q, contour=_DEFAULT, return_error=False):
    """Askey-Wilson integral: four denominator parameter pairs inside T."""
    t = _coords(t, 4)
    if any(abs(x) >= 1 for x in t):
        raise ContourDomainError("Askey-Wilson integral needs |t_j| < 1")
    radius = contour.radius or _window_radius(
        [abs(x) for x in t], [1 / abs(x) for x in t]
    )

    def f(z):
        num = qpoch(z * z, q) * qpoch(1 / (z * z), q)
        den = np.ones_like(z)
        for tj in t:
            den = den * _qp_pair(tj, q, z)
        return num / den

    val, err = circle_quadrature(
        f, n_start=contour.n_start, tol=contour.tol, n_cap=contour.n_cap, radius=radius
    )
    return (val, err) if return_error else val


def eval_vt_closed_lhs(t, q, contour=_DEFAULT, return_error=False):
    """Left side of the V_t-type four-parameter evaluation formula."""
    t = _coords(t, 4)
    q = complex(q)
    t1, t2, t3, t4 = t
    th_const = theta(q * t1 * t2 * t3 * t4, q)
    if abs(th_const) < 1e-12:
        raise DomainError("theta prefactor vanishes at these parameters")
    radius = contour.radius or _window_radius(
        [abs(t1)], [1 / abs(t2), 1 / abs(t3), 1 / abs(t4), abs(q) / abs(t1)]
    )

    def f(z):
        return (
            theta(q * t2 * t3 * t4 * z, q) / th_const
            * (1 - z * z / q)
            * qpoch(z / t2, q) * qpoch(z / t3, q) * qpoch(z / t4, q)
            / (
                qpoch(t1 / z, q) * qpoch(t1 * z / q, q)
                * qpoch(t2 * z, q) * qpoch(t3 * z, q) * qpoch(t4 * z, q)
            )
        )

    val, err = circle_quadrature(
        f, n_start=contour.n_start, tol=contour.tol, n_cap=contour.n_cap, radius=radius
    )
    return (val, err) if return_error else val


def eval_bt_closed_lhs(t, q, mu=None, contour=_DEFAULT, return_error=False):
    """Left side of the Barnes-type 3x3 trigonometric evaluation formula."""
    t = _coords(t, 6)
    _check_balance(t, 1.0, "trigonometric Barnes evaluation")
    q = complex(q)
    if mu is None:
        mu = _default_mu(t[0], t[4], q)
    th_const = theta(t[0] / mu, q) * theta(t[4] / mu, q)
    if abs(th_const) < 1e-12:
        raise DomainError("mu sits on the theta zero locus")
    radius = contour.radius or _window_radius(
        [abs(t[0]), abs(t[4])], [1 / abs(t[1]), 1 / abs(t[2]), 1 / abs(t[3])]
    )

    def f(z):
        return (
            theta(t[0] * t[4] / (mu * z), q) * theta(z / mu, q) / th_const
            * qpoch(z / t[5], q)
            / (
                qpoch(t[0] / z, q) * qpoch(t[4] / z, q)
                * qpoch(t[1] * z, q) * qpoch(t[2] * z, q) * qpoch(t[3] * z, q)
            )
        )

    val, err = circle_quadrature(
        f, n_start=contour.n_start, tol=contour.tol, n_cap=contour.n_cap, radius=radius
    )
    return (val, err) if return_error else val


# ---------------------------------------------------------------------------
# closed forms


def _cf_ell_beta(params):
    t = _coords(params["t"], 6)
    p, q = params["p"], params["q"]
    out = 1.0 + 0j
    for j in range(6):
        for k in range(j + 1, 6):
            out *= gamma_e(t[j] * t[k], p, q)
    return out


def _cf_hyp_beta(params):
    u = _coords(params["u"], 6)
    periods = _as_periods(params["periods"])
    w1, w2 = periods.w1, periods.w2
    iw = 1j * periods.omega
    out = 2 * cmath.sqrt(w1 * w2)
    for j in range(6):
        for k in range(j + 1, 6):
            out *= complex(gamma_h(iw - u[j] - u[k], w1, w2))
    return out


def _cf_hyp_barnes(params):
    u = _coords(params["u"], 6)
    periods = _as_periods(params["periods"])
    w1, w2 = periods.w1, periods.w2
    iw = 1j * periods.omega
    out = cmath.sqrt(w1 * w2)
    for j in range(3):
        for k in range(3, 6):
            out *= complex(gamma_h(iw - u[j] - u[k], w1, w2))
    return out


def _cf_hyp_aw(params):
    u = _coords(params["u"], 4)
    periods = _as_periods(params["periods"])
    w1, w2 = periods.w1, periods.w2
    iw = 1j * periods.omega
    out = 2 * cmath.sqrt(w1 * w2) * complex(gamma_h(sum(u) - 3 * iw, w1, w2))
    for j in range(4):
        for k in range(j + 1, 4):
            out *= complex(gamma_h(iw - u[j] - u[k], w1, w2))
    return out


def _cf_nr_trig(params):
    t = _coords(params["t"], 6)
    q = params["q"]
    num = 1.0 + 0j
    for tj in t[1:]:
        num *= qpoch(1 / (t[0] * tj), q)
    den = qpoch(q, q)
    for j in range(1, 6):
        for k in range(j + 1, 6):
            den *= qpoch(t[j] * t[k], q)
    return 2 * num / den


def _cf_gasper(params):
    t = _coords(params["t"], 6)
    q = params["q"]
    num = 1.0 + 0j
    for j in range(4):
        for k in range(j + 1, 4):
            num *= qpoch(1 / (t[j] * t[k]), q)
    den = qpoch(q, q) * qpoch(t[4] * t[5] / q, q)
    for j in range(4):
        for k in (4, 5):
            den *= qpoch(t[j] * t[k], q)
    return num / den


def _cf_aw(params):
    t = _coords(params["t"], 4)
    q = params["q"]
    den = qpoch(q, q)
    for j in range(4):
        for k in range(j + 1, 4):
            den *= qpoch(t[j] * t[k], q)
    return 2 * qpoch(t[0] * t[1] * t[2] * t[3], q) / den


def _cf_vt_eval(params):
    t = _coords(params["t"], 4)
    q = params["q"]
    t1, t2, t3, t4 = t
    num = qpoch(1 / (t2 * t3), q) * qpoch(1 / (t2 * t4), q) * qpoch(1 / (t3 * t4), q)
    den = (
        qpoch(q, q) * qpoch(1 / (t1 * t2 * t3 * t4), q)
        * qpoch(t1 * t2, q) * qpoch(t1 * t3, q) * qpoch(t1 * t4, q)
    )
    return num / den


def _cf_bt_eval(params):
    t = _coords(params["t"], 6)
    q = params["q"]
    out = 1 / qpoch(q, q)
    for j in (1, 2, 3):
        out *= qpoch(1 / (t[j] * t[5]), q) / (
            qpoch(t[0] * t[j], q) * qpoch(t[j] * t[4], q)
        )
    return out


CLOSED_FORMS = {
    "ell-beta": _cf_ell_beta,
    "hyp-beta": _cf_hyp_beta,
    "hyp-barnes": _cf_hyp_barnes,
    "hyp-aw": _cf_hyp_aw,
    "nr-trig": _cf_nr_trig,
    "gasper": _cf_gasper,
    "aw": _cf_aw,
    "vt-eval": _cf_vt_eval,
    "bt-eval": _cf_bt_eval,
}


def closed_form(name, params):
    """Right-hand side of a named beta-integral evaluation formula."""
    try:
        fn = CLOSED_FORMS[name]
    except KeyError:
        raise DomainError("unknown closed form %r" % name) from None
    return fn(params)
