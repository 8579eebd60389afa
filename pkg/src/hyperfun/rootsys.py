"""Root systems E8 > E7 > E6 > D6/D5 and Weyl actions on parameter spaces.

Roots live in (1/2)Z^8 and are stored with doubled integer coordinates, so
all group-theoretic computations are exact.  Two parameter spaces carry the
(affine) Weyl action: an additive hyperplane of points u in C^8 with
sum(u) = 2c, and its exponential image, a multiplicative space of 8-tuples
with prod(t) = c^2 modulo the simultaneous sign flip t -> -t.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Sequence, Union

from .errors import DomainError

__all__ = [
    "RootVector",
    "alpha_plus",
    "alpha_minus",
    "beta",
    "gamma_root",
    "delta",
    "BASES",
    "SYSTEMS",
    "basis_roots",
    "generate_roots",
    "cartan_matrix",
    "expand_in_basis",
    "highest_root",
    "isotropy_basis",
    "AdditiveParamPoint",
    "MultiplicativeParamPoint",
    "Reflection",
    "Translation",
    "WeylWord",
    "s_jk",
    "w_letter",
    "refl",
    "tau",
    "v_word",
    "reflect",
    "apply_word",
    "exp_map",
]


# ---------------------------------------------------------------------------
# roots


@dataclass(frozen=True)
class RootVector:
    """Vector in (1/2)Z^8, stored as doubled integer coordinates."""

    coords2: tuple

    def __post_init__(self):
        if len(self.coords2) != 8 or not all(isinstance(c, int) for c in self.coords2):
            raise DomainError("RootVector needs 8 integer doubled coordinates")

    @property
    def coords(self):
        """Actual (possibly half-integer) coordinates as floats."""
        return tuple(c / 2.0 for c in self.coords2)

    def dot(self, other: "RootVector") -> int:
        n = sum(a * b for a, b in zip(self.coords2, other.coords2))
        if n % 4:
            raise DomainError("inner product is not an integer; not lattice vectors")
        return n // 4

    def dot_point(self, u: Sequence[complex]) -> complex:
        """Complex bilinear pairing with a point of C^8."""
        return sum(uj * c for uj, c in zip(u, self.coords2)) / 2

    def is_root(self) -> bool:
        c = self.coords2
        if sum(x * x for x in c) != 8:
            return False
        parities = {x & 1 for x in c}
        return len(parities) == 1 and sum(c) % 4 == 0

    def reflect_root(self, v: "RootVector") -> "RootVector":
        """Image of v under the reflection in this root."""
        m = self.dot(v)
        return RootVector(tuple(a - m * b for a, b in zip(v.coords2, self.coords2)))

    def __neg__(self):
        return RootVector(tuple(-c for c in self.coords2))

    def __repr__(self):
        return "RootVector(%s)" % (
            ",".join("%g" % (c / 2.0) for c in self.coords2)
        )


def alpha_plus(j: int, k: int) -> RootVector:
    """e_j + e_k  (1-based, j != k)."""
    c = [0] * 8
    c[j - 1] += 2
    c[k - 1] += 2
    return RootVector(tuple(c))


def alpha_minus(j: int, k: int) -> RootVector:
    """e_j - e_k  (1-based, j != k)."""
    c = [0] * 8
    c[j - 1] += 2
    c[k - 1] -= 2
    return RootVector(tuple(c))


def beta(j: int, k: int, l: int, m: int) -> RootVector:
    """(e_j+e_k+e_l+e_m - sum of the other four)/2."""
    plus = {j, k, l, m}
    if len(plus) != 4:
        raise DomainError("beta needs four distinct indices")
    return RootVector(tuple(1 if i in plus else -1 for i in range(1, 9)))


def gamma_root(j: int, k: int) -> RootVector:
    """(-e_j-e_k + sum of the other six)/2."""
    minus = {j, k}
    if len(minus) != 2:
        raise DomainError("gamma needs two distinct indices")
    return RootVector(tuple(-1 if i in minus else 1 for i in range(1, 9)))


def delta() -> RootVector:
    """(e_1 + ... + e_8)/2."""
    return RootVector((1,) * 8)


# The printed simple-root lists.  Keys use ASCII names for the bases
# Delta-bar-1/2 of E8, Delta-1/2 of E7, Delta-1'/2' of E6 and the D6/D5
# sub-bases.
BASES = {
    "E8-1bar": (
        alpha_minus(7, 6), beta(1, 2, 3, 4), alpha_minus(6, 5), alpha_minus(5, 4),
        alpha_minus(4, 3), alpha_minus(3, 2), alpha_minus(2, 1), alpha_plus(1, 8),
    ),
    "E8-2bar": (
        alpha_minus(2, 3), alpha_minus(5, 6), alpha_minus(3, 4), alpha_minus(4, 5),
        beta(5, 6, 7, 8), alpha_minus(1, 8), alpha_minus(8, 7), gamma_root(1, 8),
    ),
    "E7-1": (
        alpha_minus(7, 6), beta(1, 2, 3, 4), alpha_minus(6, 5), alpha_minus(5, 4),
        alpha_minus(4, 3), alpha_minus(3, 2), alpha_minus(2, 1),
    ),
    "E7-2": (
        alpha_minus(2, 3), alpha_minus(5, 6), alpha_minus(3, 4), alpha_minus(4, 5),
        beta(5, 6, 7, 8), alpha_minus(1, 8), alpha_minus(8, 7),
    ),
    "E6-1": (
        alpha_minus(7, 6), beta(1, 2, 3, 4), alpha_minus(6, 5), alpha_minus(5, 4),
        alpha_minus(4, 3), alpha_minus(3, 2),
    ),
    "E6-2": (
        alpha_minus(2, 3), alpha_minus(5, 6), alpha_minus(3, 4), alpha_minus(4, 5),
        beta(5, 6, 7, 8), alpha_minus(1, 8),
    ),
    "D6-1": (
        beta(1, 2, 3, 4), alpha_minus(6, 5), alpha_minus(5, 4),
        alpha_minus(4, 3), alpha_minus(3, 2), alpha_minus(2, 1),
    ),
    "D6-2": (
        alpha_minus(5, 6), alpha_minus(3, 4), alpha_minus(4, 5),
        beta(5, 6, 7, 8), alpha_minus(1, 8), alpha_minus(8, 7),
    ),
    "D5": (
        beta(1, 2, 3, 4), alpha_minus(6, 5), alpha_minus(5, 4),
        alpha_minus(4, 3), alpha_minus(3, 2),
    ),
    "D5-prime": (
        alpha_minus(5, 6), alpha_minus(3, 4), alpha_minus(4, 5),
        beta(5, 6, 7, 8), alpha_minus(1, 8),
    ),
}

SYSTEMS = ("E8", "E7", "E6", "D6-1", "D6-2", "D5")


def basis_roots(basis: Union[str, Sequence[RootVector]]) -> tuple:
    if isinstance(basis, str):
        try:
            return BASES[basis]
        except KeyError:
            raise DomainError("unknown basis tag %r" % basis) from None
    return tuple(basis)


def _all_e8_roots():
    roots = set()
    for j, k in combinations(range(1, 9), 2):
        roots.add(alpha_plus(j, k))
        roots.add(-alpha_plus(j, k))
        roots.add(alpha_minus(j, k))
        roots.add(alpha_minus(k, j))
        roots.add(gamma_root(j, k))
        roots.add(-gamma_root(j, k))
    for quad in combinations(range(1, 9), 4):
        roots.add(beta(*quad))
    roots.add(delta())
    roots.add(-delta())
    return roots


def _reflection_closure(seed):
    roots = set(seed)
    frontier = set(seed)
    gens = tuple(seed)
    while frontier:
        new = set()
        for r in frontier:
            for g in gens:
                img = g.reflect_root(r)
                if img not in roots:
                    new.add(img)
        roots |= new
        frontier = new
    return roots


def generate_roots(system: str) -> frozenset:
    """Full root set of one of the systems named in SYSTEMS."""
    if system == "E8":
        out = _all_e8_roots()
    elif system == "E7":
        d = delta()
        out = {r for r in _all_e8_roots() if r.dot(d) == 0}
    elif system == "E6":
        out = _reflection_closure(BASES["E6-1"])
    elif system in ("D6-1", "D6-2"):
        out = _reflection_closure(BASES[system])
    elif system == "D5":
        out = _reflection_closure(BASES["D5"])
    else:
        raise DomainError("unknown root system tag %r" % (system,))
    assert all(r.is_root() for r in out)
    return frozenset(out)


def cartan_matrix(basis) -> list:
    """Integer matrix <a_i, a_j> for the given (ordered) basis."""
    rs = basis_roots(basis)
    return [[a.dot(b) for b in rs] for a in rs]


def expand_in_basis(root: RootVector, basis) -> tuple:
    """Integer coefficients of `root` in the span of `basis`.

    Raises DomainError if the root is not an integer combination.
    """
    rs = basis_roots(basis)
    # Solve the Gram system exactly over the rationals via Gaussian
    # elimination on Fractions; entries are tiny integers.
    from fractions import Fraction

    n = len(rs)
    gram = [[Fraction(a.dot(b)) for b in rs] for a in rs]
    rhs = [Fraction(a.dot(root)) for a in rs]
    # forward elimination with partial pivoting
    for col in range(n):
        piv = next((r for r in range(col, n) if gram[r][col] != 0), None)
        if piv is None:
            raise DomainError("basis is degenerate")
        gram[col], gram[piv] = gram[piv], gram[col]
        rhs[col], rhs[piv] = rhs[piv], rhs[col]
        for r in range(col + 1, n):
            f = gram[r][col] / gram[col][col]
            rhs[r] -= f * rhs[col]
            for c in range(col, n):
                gram[r][c] -= f * gram[col][c]
    coeffs = [Fraction(0)] * n
    for r in range(n - 1, -1, -1):
        acc = rhs[r] - sum(gram[r][c] * coeffs[c] for c in range(r + 1, n))
        coeffs[r] = acc / gram[r][r]
    # verify the combination reproduces the root exactly
    combo = [Fraction(0)] * 8
    for f, b in zip(coeffs, rs):
        for i, c2 in enumerate(b.coords2):
            combo[i] += f * c2
    if any(x != y for x, y in zip(combo, root.coords2)):
        raise DomainError("root does not lie in the span of the basis")
    if any(f.denominator != 1 for f in coeffs):
        raise DomainError("root is not an integer combination of the basis")
    return tuple(int(f) for f in coeffs)


def highest_root(system: str, basis) -> RootVector:
    """The unique root of `system` dominant for `basis` with maximal height."""
    rs = basis_roots(basis)
    best, best_h = None, None
    for r in generate_roots(system):
        try:
            coeffs = expand_in_basis(r, rs)
        except DomainError:
            continue
        if any(c < 0 for c in coeffs):
            continue
        h = sum(coeffs)
        if best_h is None or h > best_h:
            best, best_h = r, h
    if best is None:
        raise DomainError("no dominant root found")
    return best


def isotropy_basis(v: RootVector, basis) -> tuple:
    """Simple roots (basis order) of the isotropy group of v.

    v must be in the closed positive chamber of the basis up to sign
    (the stabilizers of v and -v coincide).
    """
    rs = basis_roots(basis)
    prods = [a.dot(v) for a in rs]
    if any(p > 0 for p in prods) and any(p < 0 for p in prods):
        raise DomainError(
            "vector is not in the closed positive chamber (up to sign); "
            "isotropy group is not a standard parabolic for this basis"
        )
    return tuple(a for a, p in zip(rs, prods) if p == 0)


# ---------------------------------------------------------------------------
# parameter spaces

_BALANCE_TOL = 1e-8


@dataclass(frozen=True)
class AdditiveParamPoint:
    """Point u of C^8 with sum(u) = 2c (renormalized on construction)."""

    u: tuple
    c: complex

    @staticmethod
    def make(u: Sequence[complex], c: complex = None) -> "AdditiveParamPoint":
        u = tuple(complex(x) for x in u)
        if len(u) != 8:
            raise DomainError("additive point needs 8 coordinates")
        total = sum(u)
        if c is None:
            c = total / 2
        else:
            c = complex(c)
            defect = 2 * c - total
            if abs(defect) > _BALANCE_TOL * max(1.0, abs(c)):
                raise DomainError("sum(u) != 2c beyond tolerance")
            u = tuple(x + defect / 8 for x in u)
        return AdditiveParamPoint(u, c)

    def __iter__(self):
        return iter(self.u)


def _canonical_sign(t):
    a = cmath.phase(t[0])
    if -cmath.pi / 2 < a <= cmath.pi / 2:
        return tuple(t)
    return tuple(-x for x in t)


@dataclass(frozen=True)
class MultiplicativeParamPoint:
    """Class of +-t in (C^x)^8 with prod(t) = c^2, canonical sign stored.

    The representative has arg(t_1) in (-pi/2, pi/2].
    """

    t: tuple
    c: complex

    @staticmethod
    def make(t: Sequence[complex], c: complex = None) -> "MultiplicativeParamPoint":
        t = tuple(complex(x) for x in t)
        if len(t) != 8:
            raise DomainError("multiplicative point needs 8 coordinates")
        if any(x == 0 for x in t):
            raise DomainError("multiplicative coordinates must be nonzero")
        prod = 1.0 + 0j
        for x in t:
            prod *= x
        if c is None:
            c = cmath.sqrt(prod)
        else:
            c = complex(c)
            if c == 0:
                raise DomainError("c must be nonzero")
            ratio = c * c / prod
            if abs(ratio - 1) > 1e-6:
                raise DomainError("prod(t) != c^2 beyond tolerance")
            r = cmath.exp(cmath.log(ratio) / 8)
            t = tuple(x * r for x in t)
        return MultiplicativeParamPoint(_canonical_sign(t), c)

    def __iter__(self):
        return iter(self.t)

    def isclose(self, other: "MultiplicativeParamPoint", rel=1e-10) -> bool:
        for a, b in zip(self.t, other.t):
            if abs(a - b) > rel * max(abs(a), abs(b), 1e-300):
                return False
        return True


# ---------------------------------------------------------------------------
# Weyl words


@dataclass(frozen=True)
class Reflection:
    root: RootVector

    def __post_init__(self):
        if not self.root.is_root():
            raise DomainError("reflection letter requires a root")


@dataclass(frozen=True)
class Translation:
    root: RootVector
    step: complex

    def __post_init__(self):
        if not self.root.is_root():
            raise DomainError("translation letter requires a root")


WeylWord = Sequence[Union[Reflection, Translation]]


def s_jk(j: int, k: int) -> Reflection:
    """Transposition of coordinates j and k."""
    return Reflection(alpha_minus(j, k))


def w_letter() -> Reflection:
    """The reflection in beta_1234."""
    return Reflection(beta(1, 2, 3, 4))


def refl(root: RootVector) -> Reflection:
    return Reflection(root)


def tau(j: int, k: int, step: complex) -> Translation:
    """Affine shift along e_j - e_k; additively u_j -= step, u_k += step."""
    return Translation(alpha_minus(j, k), step)


def v_word() -> tuple:
    """Word for the longest element of W(E7), as products of s_jk and w."""
    w = w_letter()
    return (
        s_jk(4, 5), s_jk(3, 6), s_jk(4, 8), s_jk(3, 7), s_jk(3, 4), s_jk(1, 2),
        w, s_jk(3, 7), s_jk(4, 8), w, s_jk(3, 5), s_jk(4, 6), w,
    )


def reflect(root: RootVector, point: AdditiveParamPoint) -> AdditiveParamPoint:
    """u - <u, root> root."""
    if not root.is_root():
        raise DomainError("reflect requires a root")
    m = root.dot_point(point.u)
    u = tuple(x - m * c2 / 2 for x, c2 in zip(point.u, root.coords2))
    return AdditiveParamPoint.make(u)


def _classify(root: RootVector):
    """Normalized sign, family tag and index sets of a root."""
    c2 = root.coords2
    first = next(x for x in c2 if x != 0)
    if first < 0:
        c2 = tuple(-x for x in c2)
    if all(x & 1 for x in c2):
        minus = tuple(i for i, x in enumerate(c2) if x < 0)
        if len(minus) == 0:
            return "delta", ()
        if len(minus) == 2:
            return "gamma", minus
        if len(minus) == 4:
            return "beta", tuple(i for i, x in enumerate(c2) if x > 0)
        raise DomainError("not a root")
    nz = tuple(i for i, x in enumerate(c2) if x != 0)
    if len(nz) != 2:
        raise DomainError("not a root")
    if c2[nz[0]] * c2[nz[1]] > 0:
        return "alpha+", nz
    return "alpha-", (nz[0], nz[1]) if c2[nz[0]] > 0 else (nz[1], nz[0])


def _mult_reflect(root: RootVector, point: MultiplicativeParamPoint):
    kind, idx = _classify(root)
    t = list(point.t)
    c = point.c
    if kind == "alpha-":
        j, k = idx
        t[j], t[k] = t[k], t[j]
        return MultiplicativeParamPoint.make(t, c)
    if kind == "alpha+":
        j, k = idx
        t[j], t[k] = 1 / t[k], 1 / t[j]
        return MultiplicativeParamPoint.make(t)
    if kind == "beta":
        prod = t[idx[0]] * t[idx[1]] * t[idx[2]] * t[idx[3]]
        s = cmath.sqrt(c / prod)
        t = [x * s if i in idx else x / s for i, x in enumerate(t)]
        return MultiplicativeParamPoint.make(t, c)
    if kind == "gamma":
        j, k = idx
        s = cmath.sqrt(c / (t[j] * t[k]))
        t = [x * s if i in (j, k) else x / s for i, x in enumerate(t)]
        return MultiplicativeParamPoint.make(t, c)
    # delta: u -> u - c/2 in every coordinate
    rc = cmath.sqrt(c)
    return MultiplicativeParamPoint.make([x / rc for x in t])


def apply_word(word: WeylWord, point):
    """Apply the letters of a word left-to-right to a parameter point."""
    for letter in word:
        if isinstance(point, AdditiveParamPoint):
            if isinstance(letter, Reflection):
                point = reflect(letter.root, point)
            else:
                u = tuple(
                    x - letter.step * c2 / 2
                    for x, c2 in zip(point.u, letter.root.coords2)
                )
                point = AdditiveParamPoint.make(u)
        elif isinstance(point, MultiplicativeParamPoint):
            if isinstance(letter, Reflection):
                point = _mult_reflect(letter.root, point)
            else:
                t = tuple(
                    x * cmath.exp(-letter.step * c2 / 2)
                    for x, c2 in zip(point.t, letter.root.coords2)
                )
                point = MultiplicativeParamPoint.make(t)
        else:
            raise DomainError("apply_word expects a parameter point")
    return point


def exp_map(point: AdditiveParamPoint) -> MultiplicativeParamPoint:
    """Coordinatewise exponential G_c -> H_{exp c}."""
    return MultiplicativeParamPoint.make(
        [cmath.exp(x) for x in point.u], cmath.exp(point.c)
    )
