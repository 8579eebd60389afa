"""Scalar special functions: q-Pochhammer, theta, elliptic and hyperbolic gamma.

All evaluators accept numpy arrays in their first argument and broadcast, so
the contour integrators can evaluate integrands on whole node sets at once.

Branch conventions: sqrt is the principal branch (positive on the positive
reals, cut along the negative reals); fractional powers are exp(w log) with
the principal log; e(x) means exp(2 pi i x).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

from .errors import AccuracyError, DomainError, PoleError

__all__ = [
    "eexp",
    "qpoch",
    "qpoch_log",
    "theta",
    "theta_log",
    "gamma_e",
    "EllipticBases",
    "HyperbolicPeriods",
    "gamma_h",
    "gamma_h_shintani",
    "gamma_h_log",
    "gamma_h_integral",
    "theta_inversion_pair",
    "eta_modularity_pair",
]

_TWO_PI_I = 2j * math.pi


def eexp(x):
    """e(x) = exp(2 pi i x)."""
    return np.exp(_TWO_PI_I * np.asarray(x)) if isinstance(x, np.ndarray) else cmath.exp(_TWO_PI_I * x)


def _check_base(q):
    q = complex(q)
    if abs(q) >= 1:
        raise DomainError("base must satisfy |q| < 1, got |q| = %g" % abs(q))
    return q


def _nterms(amax, q_abs, eps):
    """Smallest N with amax * q_abs^N / (1 - q_abs) <= eps."""
    if amax == 0.0:
        return 1
    if q_abs == 0.0:
        return 1
    target = eps * (1.0 - q_abs) / amax
    if target >= 1.0:
        return 1
    n = int(math.ceil(math.log(target) / math.log(q_abs))) + 1
    if n > 2_000_000:
        raise AccuracyError("q-product needs %d terms; base too close to 1" % n)
    return max(n, 1)


def qpoch(a, q, eps=1e-16):
    """Infinite q-shifted factorial (a; q)_inf = prod_{j>=0} (1 - a q^j).

    Entire in a with zeros exactly on a = q^{-j}; truncated once the
    logarithmic tail bound |a| |q|^N / (1 - |q|) drops below eps.
    """
    q = _check_base(q)
    arr = np.asarray(a, dtype=complex)
    scalar = arr.ndim == 0
    x = np.atleast_1d(arr).copy()
    out = np.ones_like(x)
    n = _nterms(float(np.max(np.abs(x))), abs(q), eps)
    for _ in range(n):
        out *= 1.0 - x
        x *= q
    return complex(out[0]) if scalar else out


def qpoch_log(a, q, eps=1e-16):
    """A logarithm of (a; q)_inf (branch chosen termwise via log1p).

    Only meaningful up to 2 pi i when used inside a larger exponent;
    exp(qpoch_log(a, q)) == qpoch(a, q).
    """
    q = _check_base(q)
    arr = np.asarray(a, dtype=complex)
    scalar = arr.ndim == 0
    x = np.atleast_1d(arr).copy()
    out = np.zeros_like(x)
    n = _nterms(float(np.max(np.abs(x))), abs(q), eps)
    with np.errstate(divide="ignore", invalid="ignore"):
        for _ in range(n):
            out += np.log1p(-x)
            x *= q
    return complex(out[0]) if scalar else out


def theta(a, q, eps=1e-16):
    """Renormalized Jacobi theta function theta(a; q) = (a; q)_inf (q/a; q)_inf."""
    arr = np.asarray(a, dtype=complex)
    if np.any(arr == 0):
        raise DomainError("theta(a; q) requires a != 0")
    return qpoch(arr, q, eps) * qpoch(q / arr, q, eps)


def theta_log(a, q, eps=1e-16):
    arr = np.asarray(a, dtype=complex)
    if np.any(arr == 0):
        raise DomainError("theta(a; q) requires a != 0")
    return qpoch_log(arr, q, eps) + qpoch_log(q / arr, q, eps)


@dataclass(frozen=True)
class EllipticBases:
    """Pair of elliptic bases with |p| < 1 and |q| < 1."""

    p: complex
    q: complex

    def __post_init__(self):
        object.__setattr__(self, "p", _check_base(self.p))
        object.__setattr__(self, "q", _check_base(self.q))


def gamma_e(z, p, q, eps=1e-16):
    """Elliptic gamma function, the double product over (1 - z^-1 p^j+1 q^k+1)/(1 - z p^j q^k).

    Raises PoleError (with the lattice indices) when z is within ~1e-10
    relative distance of a pole z = p^-j q^-k.
    """
    p = _check_base(p)
    q = _check_base(q)
    arr = np.asarray(z, dtype=complex)
    scalar = arr.ndim == 0
    zz = np.atleast_1d(arr)
    if np.any(zz == 0):
        raise DomainError("gamma_e requires z != 0")
    out = np.ones_like(zz)
    zmax = float(np.max(np.abs(zz)))
    zinvmax = float(np.max(np.abs(1.0 / zz)))
    scale = max(zmax, abs(q) * zinvmax)
    guard = (1.0 - abs(p)) * (1.0 - abs(q))
    pj = 1.0 + 0j
    j = 0
    nq = _nterms(max(zmax, abs(q) * zinvmax), abs(q), eps)
    while True:
        # denominator factor (z p^j; q)_inf with pole guard
        x = zz * pj
        for k in range(nq):
            f = 1.0 - x
            bad = np.abs(f) < 1e-10
            if np.any(bad):
                raise PoleError(
                    "gamma_e pole near z = p^-%d q^-%d" % (j, k), nearest=(j, k)
                )
            out /= f
            x = x * q
        # numerator factor (p^{j+1} q / z; q)_inf
        out *= qpoch(pj * p * q / zz, q, eps)
        j += 1
        pj *= p
        if scale * abs(pj) / guard <= eps:
            break
        if j > 500_000:
            raise AccuracyError("gamma_e double product did not truncate")
    return complex(out[0]) if scalar else out


# ---------------------------------------------------------------------------
# hyperbolic gamma


@dataclass(frozen=True)
class HyperbolicPeriods:
    """Period pair with Re(w1) > 0, Re(w2) > 0."""

    w1: complex
    w2: complex

    def __post_init__(self):
        w1, w2 = complex(self.w1), complex(self.w2)
        if w1.real <= 0 or w2.real <= 0:
            raise DomainError("periods must have positive real part")
        object.__setattr__(self, "w1", w1)
        object.__setattr__(self, "w2", w2)

    @property
    def omega(self) -> complex:
        return (self.w1 + self.w2) / 2

    @property
    def tau(self) -> complex:
        return self.w1 / self.w2

    @property
    def q(self) -> complex:
        return eexp(self.tau)

    @property
    def qtilde(self) -> complex:
        return eexp(-1 / self.tau)

    def ordered(self) -> tuple:
        """Periods reordered so that Im(w1/w2) >= 0 (gamma_h is symmetric)."""
        if (self.w1 / self.w2).imag < 0:
            return (self.w2, self.w1)
        return (self.w1, self.w2)


def _as_periods(w1, w2=None) -> HyperbolicPeriods:
    if isinstance(w1, HyperbolicPeriods):
        return w1
    return HyperbolicPeriods(w1, w2)


def gamma_h_shintani(z, w1, w2, eps=1e-16):
    """Hyperbolic gamma via the double-base product; needs Im(w1/w2) > 0.

    Spurious zero/pole pairs of the two q-factors cancel analytically;
    accuracy degrades within ~1e-6 of those off-lattice points.
    """
    tau = w1 / w2
    if tau.imag <= 1e-14:
        raise DomainError("Shintani product needs Im(w1/w2) > 0")
    q = eexp(tau)
    qt = eexp(-1 / tau)
    w = (w1 + w2) / 2
    arr = np.asarray(z, dtype=complex)
    pref = np.exp(_TWO_PI_I * (-(tau + 1 / tau) / 48 - arr * arr / (4 * w1 * w2)))
    num = qpoch(eexp_arr((1j * arr + w) / w2), q, eps)
    den = qpoch(eexp_arr((1j * arr - w) / w1), qt, eps)
    small = np.abs(np.atleast_1d(den)) < 1e-250
    if np.any(small):
        raise PoleError("gamma_h evaluated on a pole")
    return pref * num / den


def eexp_arr(x):
    return np.exp(_TWO_PI_I * np.asarray(x, dtype=complex))


def gamma_h_log(z, w1, w2, eps=1e-16):
    """log of gamma_h via the Shintani product (defined up to 2 pi i)."""
    tau = w1 / w2
    if tau.imag <= 1e-14:
        raise DomainError("Shintani product needs Im(w1/w2) > 0")
    q = eexp(tau)
    qt = eexp(-1 / tau)
    w = (w1 + w2) / 2
    arr = np.asarray(z, dtype=complex)
    return (
        _TWO_PI_I * (-(tau + 1 / tau) / 48 - arr * arr / (4 * w1 * w2))
        + qpoch_log(eexp_arr((1j * arr + w) / w2), q, eps)
        - qpoch_log(eexp_arr((1j * arr - w) / w1), qt, eps)
    )


def _integral_core(z, w1, w2):
    """Defining integral of log G / i on the strip |Im z| < Re omega."""
    w = (w1 + w2) / 2
    if abs(z.imag) >= 0.999 * w.real:
        raise DomainError("z outside the integral strip")
    f0 = -(z / (w1 * w2)) * (2 * z * z / 3 + (w1 * w1 + w2 * w2) / 6)
    cut = 1e-7

    def f(t):
        if t < cut:
            return f0
        return (
            cmath.sin(2 * z * t) / (2 * cmath.sinh(w1 * t) * cmath.sinh(w2 * t))
            - z / (w1 * w2 * t)
        ) / t

    T = 21.0 / min(w1.real, w2.real)
    val, _ = quad(f, 0.0, T, complex_func=True, epsabs=1e-14, epsrel=1e-13, limit=800)
    return val - z / (w1 * w2 * T)


def gamma_h_integral(z, w1, w2, max_shifts=64):
    """Hyperbolic gamma via its defining integral, shifted into the strip.

    Scalar z only; the workhorse for real period ratios and the
    independent cross-check for the Shintani route.
    """
    z = complex(z)
    w = (w1 + w2) / 2
    strip = 0.98 * w.real
    mult = 1.0 + 0j
    shifts = 0
    while z.imag >= strip:
        if shifts >= max_shifts:
            raise DomainError("more than %d period shifts needed" % max_shifts)
        z = z - 1j * w1
        s = cmath.sinh(math.pi * (z + 1j * w) / w2)
        if abs(s) < 1e-12:
            raise PoleError("gamma_h evaluated on a pole/zero lattice point")
        mult *= -2j * s
        shifts += 1
    while z.imag <= -strip:
        if shifts >= max_shifts:
            raise DomainError("more than %d period shifts needed" % max_shifts)
        s = cmath.sinh(math.pi * (z + 1j * w) / w2)
        if abs(s) < 1e-12:
            raise PoleError("gamma_h evaluated on a pole/zero lattice point")
        mult /= -2j * s
        z = z + 1j * w1
        shifts += 1
    return mult * cmath.exp(1j * _integral_core(z, w1, w2))


def gamma_h(z, w1, w2=None, eps=1e-16):
    """Ruijsenaars hyperbolic gamma G(z; w1, w2).

    Uses the double-base product when the period ratio is non-real
    (after reordering the symmetric periods), else the defining integral
    extended by the first-order difference equations.
    """
    periods = _as_periods(w1, w2)
    a, b = periods.ordered()
    if (a / b).imag > 1e-12:
        return gamma_h_shintani(z, a, b, eps)
    arr = np.asarray(z, dtype=complex)
    if arr.ndim == 0:
        return gamma_h_integral(complex(z), a, b)
    return np.array([gamma_h_integral(complex(x), a, b) for x in arr.ravel()]).reshape(arr.shape)


# ---------------------------------------------------------------------------
# modular pairs


def theta_inversion_pair(u, w1, w2=None):
    """Both sides of Jacobi's inversion formula for theta, as (lhs, rhs)."""
    periods = _as_periods(w1, w2)
    w1, w2 = periods.w1, periods.w2
    tau = w1 / w2
    if tau.imag <= 0:
        raise DomainError("theta inversion needs Im(w1/w2) > 0")
    q = eexp(tau)
    qt = eexp(-1 / tau)
    w = (w1 + w2) / 2
    lhs = theta(eexp(u / w1), qt)
    rhs = (
        eexp(-(tau + 1 / tau) / 24)
        * eexp((u + w) ** 2 / (2 * w1 * w2))
        * theta(eexp(-u / w2), q)
    )
    return lhs, rhs


def eta_modularity_pair(w1, w2=None):
    """(q; q)_inf / (qt; qt)_inf and its closed modular form, as (lhs, rhs)."""
    periods = _as_periods(w1, w2)
    w1, w2 = periods.w1, periods.w2
    tau = w1 / w2
    if tau.imag <= 0:
        raise DomainError("eta modularity needs Im(w1/w2) > 0")
    q = eexp(tau)
    qt = eexp(-1 / tau)
    lhs = qpoch(q, q) / qpoch(qt, qt)
    rhs = cmath.sqrt(w2 / (-1j * w1)) * eexp(-(tau + 1 / tau) / 24)
    return lhs, rhs
