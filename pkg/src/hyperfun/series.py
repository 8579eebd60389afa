"""Convergent basic hypergeometric series and the named two-term sums.

Everything here is plain term-recursive summation with explicit tail
control; the samplers that feed these evaluators stay well inside the
convergence domains, so no acceleration is attempted.
"""

from __future__ import annotations

import cmath

from .errors import DomainError
from .gammas import qpoch

__all__ = [
    "sum_phi",
    "sum_vwp",
    "sum_bilateral_psi",
    "ut_series",
    "bt_series",
    "vt_series",
]

_EPS = 1e-14
_QUIET = 64          # consecutive negligible terms required before stopping
_MAX_TERMS = 100_000
_ZERO = 1e-12        # factor threshold treated as exact termination


def _prod(vals):
    out = 1.0 + 0j
    for v in vals:
        out *= v
    return out


def sum_phi(numer, denom, q, z, eps=_EPS):
    """Basic hypergeometric series r+1_phi_r(numer; denom; q, z).

    Requires len(numer) == len(denom) + 1.  Convergence needs |z| < 1
    unless some numerator parameter lies in q^(-Z>=0), which terminates
    the series.  A denominator parameter in q^(-Z>=0) is a pole.
    """
    numer = [complex(a) for a in numer]
    denom = [complex(b) for b in denom]
    if len(numer) != len(denom) + 1:
        raise DomainError("need r+1 numerator and r denominator parameters")
    q = complex(q)
    z = complex(z)
    if abs(q) >= 1:
        raise DomainError("|q| < 1 required")

    total = 1.0 + 0j
    term = 1.0 + 0j
    qn = 1.0 + 0j  # q^n
    quiet = 0
    for n in range(_MAX_TERMS):
        ratio = z
        terminate = False
        for a in numer:
            f = 1.0 - a * qn
            if abs(f) < _ZERO:
                terminate = True
            ratio *= f
        for b in denom:
            f = 1.0 - b * qn
            if abs(f) < _ZERO:
                raise DomainError("denominator parameter in q^(-N); series pole")
            ratio /= f
        fq = 1.0 - q * qn
        ratio /= fq
        if terminate:
            return total
        term *= ratio
        total += term
        qn *= q
        # geometric tail estimate from the current term ratio
        scale = max(abs(total), 1e-300)
        if abs(term) < eps * scale:
            quiet += 1
            if quiet >= _QUIET:
                r = abs(ratio)
                if r < 1 and abs(term) * r / (1 - r) < eps * scale:
                    return total
        else:
            quiet = 0
        if n > 200 and abs(term) > 1e260:
            raise DomainError("series diverges")
    if abs(z) >= 1:
        raise DomainError("series argument outside |z| < 1 and not terminating")
    raise DomainError("series did not converge within %d terms" % _MAX_TERMS)


def sum_vwp(a1, upper, q, z, eps=_EPS):
    """Very-well-poised r+1_W_r(a1; a4..a(r+1); q, z).

    Expands to the phi form with the +-sqrt(a1) parameter pairing and
    delegates; the value does not depend on the square-root branch.
    """
    a1 = complex(a1)
    q = complex(q)
    r = cmath.sqrt(a1)
    numer = [a1, q * r, -q * r] + [complex(b) for b in upper]
    denom = [r, -r] + [q * a1 / complex(b) for b in upper]
    return sum_phi(numer, denom, q, z, eps)


def sum_bilateral_psi(numer, denom, q, z, eps=_EPS):
    """Bilateral r_psi_r as the sum of its two unilateral halves.

    Convergence window |b1...br / a1...ar| < |z| < 1.
    """
    numer = [complex(a) for a in numer]
    denom = [complex(b) for b in denom]
    if len(numer) != len(denom):
        raise DomainError("bilateral series needs equally many parameters")
    q = complex(q)
    z = complex(z)
    lower = abs(_prod(denom) / _prod(numer))
    if not (lower < abs(z) < 1):
        raise DomainError("argument outside the bilateral convergence window")

    # n >= 0 part
    total = 1.0 + 0j
    term = 1.0 + 0j
    qn = 1.0 + 0j
    quiet = 0
    for _ in range(_MAX_TERMS):
        ratio = z
        for a in numer:
            ratio *= 1.0 - a * qn
        for b in denom:
            f = 1.0 - b * qn
            if abs(f) < _ZERO:
                raise DomainError("bilateral series pole")
            ratio /= f
        term *= ratio
        total += term
        qn *= q
        scale = max(abs(total), 1e-300)
        if abs(term) < eps * scale:
            quiet += 1
            if quiet >= 8:
                break
        else:
            quiet = 0
    # n >= 1 part with inverted parameters and argument
    zinv = _prod(denom) / (_prod(numer) * z)
    term = 1.0 + 0j
    qn = 1.0 + 0j
    quiet = 0
    for _ in range(_MAX_TERMS):
        ratio = zinv
        for b in denom:
            ratio *= 1.0 - q * qn / b
        for a in numer:
            f = 1.0 - q * qn / a
            if abs(f) < _ZERO:
                raise DomainError("bilateral series pole")
            ratio /= f
        term *= ratio
        total += term
        qn *= q
        scale = max(abs(total), 1e-300)
        if abs(term) < eps * scale:
            quiet += 1
            if quiet >= 8:
                break
        else:
            quiet = 0
    return total


def _balanced_guard(t, label):
    prod = _prod(t)
    if abs(prod - 1) > 1e-8 and abs(prod + 1) > 1e-8:
        raise DomainError("%s requires prod(t) = 1 (got %r)" % (label, prod))


def _pole_guard(q, *vals):
    for v in vals:
        if abs(v) < 1e-250:
            raise DomainError("series prefactor vanishes at these parameters")


def ut_series(t, q, eps=_EPS):
    """Two-term sum of nonterminating very-well-poised 10_W_9 series.

    The canonical evaluator for the trigonometric integral U_t on the
    balanced parameter space prod(t) = 1.
    """
    t = [complex(x) for x in t]
    if len(t) != 8:
        raise DomainError("U_t takes 8 parameters")
    _balanced_guard(t, "U_t")
    q = complex(q)

    def half(t1, t8, rest):
        den = qpoch_many([q, t1 * t1, t1 * t8 / q, t8 / t1], q)
        _pole_guard(q, den)
        pref = 2 / den
        for tj in rest:
            pref *= _qp(t1 / tj, q) / _qp(t1 * tj, q)
        w = sum_vwp(
            t1 * t1 / q,
            [t1 * tj for tj in rest] + [t1 * t8 / q],
            q,
            q,
            eps,
        )
        return pref * w

    rest = t[1:7]
    return half(t[0], t[7], rest) + half(t[7], t[0], rest)


def bt_series(t, q, eps=_EPS):
    """Two-term balanced 4_phi_3 sum for the trigonometric Barnes integral."""
    t = [complex(x) for x in t]
    if len(t) != 8:
        raise DomainError("B_t takes 8 parameters")
    _balanced_guard(t, "B_t")
    q = complex(q)

    def half(t2, t7):
        t1, t3, t4, t5, t6, t8 = t[0], t[2], t[3], t[4], t[5], t[7]
        pref_num = qpoch_many([t2 / t1, t2 / t8], q)
        pref_den = qpoch_many([q, t7 / t2, t2 * t3, t2 * t4, t2 * t5, t2 * t6], q)
        _pole_guard(q, pref_den)
        phi = sum_phi(
            [t2 * t3, t2 * t4, t2 * t5, t2 * t6],
            [q * t2 / t7, t2 / t1, t2 / t8],
            q,
            q,
            eps,
        )
        return 2 * pref_num / pref_den * phi

    return half(t[1], t[6]) + half(t[6], t[1])


def vt_series(t, q, eps=_EPS):
    """Very-well-poised 8_W_7 form of the third trigonometric integral V_t.

    Valid for |t1 t2 t3 t4 t5 t6| > 1 (the series argument is its inverse).
    """
    t = [complex(x) for x in t]
    if len(t) != 6:
        raise DomainError("V_t takes 6 parameters")
    q = complex(q)
    prod = _prod(t)
    if abs(prod) <= 1:
        raise DomainError("V_t series needs |t1...t6| > 1")
    t1 = t[0]
    pref = 2 / qpoch_many([q, t1 * t1], q)
    _pole_guard(q, qpoch_many([q, t1 * t1], q))
    for tj in t[1:]:
        pref *= _qp(t1 / tj, q) / _qp(t1 * tj, q)
    w = sum_vwp(t1 * t1 / q, [t1 * tj for tj in t[1:]], q, 1 / prod, eps)
    return pref * w


def _qp(a, q):
    return qpoch(a, q)


def qpoch_many(vals, q):
    """Product of (a; q)_inf over a list, the (a1, ..., am; q)_inf shorthand."""
    out = 1.0 + 0j
    for a in vals:
        out *= qpoch(a, q)
    return out
