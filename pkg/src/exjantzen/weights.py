"""Predicates and normal forms on weights."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .root_data import Algebra, Root, Weight, WeylElement

__all__ = [
    "Weight",
    "Regular",
    "Singular",
    "RegularityResult",
    "rho_shift",
    "is_g0_integral",
    "is_g0_dominant",
    "is_g_integral",
    "is_integral_dominant",
    "atypical_roots",
    "is_typical",
    "make_dominant",
    "chamber_reduce",
    "lambda_bar0",
]


@dataclass(frozen=True)
class Singular:
    """No element of W_0 moves the weight to a regular dominant one."""

    def __bool__(self) -> bool:
        return False


@dataclass(frozen=True)
class Regular:
    w: WeylElement
    dominant: Weight

    def __bool__(self) -> bool:
        return True


RegularityResult = Regular | Singular


def rho_shift(lam: Weight) -> Weight:
    return lam + lam.algebra.rho


def _pairings(lam: Weight, roots) -> list[Fraction]:
    alg = lam.algebra
    return [alg.coroot(lam, alpha) for alpha in roots]


def is_g0_integral(lam: Weight) -> bool:
    return all(c.denominator == 1 for c in _pairings(lam, lam.algebra.g0_positive))


def is_g0_dominant(lam: Weight) -> bool:
    """g_0-integral dominant, i.e. lam lies in P_0^+."""
    return all(c.denominator == 1 and c >= 0 for c in _pairings(lam, lam.algebra.g0_positive))


def is_g_integral(lam: Weight) -> bool:
    return all(c.denominator == 1 for c in _pairings(lam, lam.algebra.even_positive))


def is_integral_dominant(lam: Weight) -> bool:
    """Membership in P^+, the highest weights of finite dimensional simples."""
    alg = lam.algebra
    if not all(c.denominator == 1 and c >= 0 for c in _pairings(lam, alg.even_positive)):
        return False
    if lam.is_zero():
        return True
    l0 = lam[0]
    if alg.name == "d21a":
        if l0 >= 2:
            return True
        if l0 != 1:
            return False
        lhs, rhs = lam[1] + 1, lam[2] + 1
        if alg.a is None:
            # a is transcendental: l1 + 1 = +-a (l2 + 1) forces both sides to vanish
            return lhs == 0 and rhs == 0
        return lhs == alg.a * rhs or lhs == -alg.a * rhs
    if alg.name == "f4":
        if l0 >= 2:
            return True
        if l0 == Fraction(3, 2):
            return 2 * (lam[1] - lam[2] - lam[3]) + 1 == 0
        return l0 == 1 and lam[1] == lam[2] and lam[3] == 0
    if l0 >= 3:
        return True
    return l0 == 2 and lam[1] == lam[2]


def atypical_roots(lam: Weight) -> tuple[Root, ...]:
    """Isotropic odd positive roots orthogonal to lam + rho."""
    alg = lam.algebra
    lr = rho_shift(lam)
    return tuple(
        r for r in alg.odd_roots if r.isotropic and alg.is_zero(alg.form(lr, r.weight))
    )


def is_typical(lam: Weight) -> bool:
    return not atypical_roots(lam)


def make_dominant(lam: Weight) -> RegularityResult:
    """Scan W_0 for the element moving lam (dot action) to a regular dominant weight."""
    alg = lam.algebra
    shifted = lam + alg.rho0
    for w in alg.W0:
        x = alg.act(w, shifted)
        if all(c > 0 for c in _pairings(x, alg.g0_positive)):
            return Regular(w, x - alg.rho0)
    return Singular()


def chamber_reduce(x: Weight) -> tuple[int, Weight] | None:
    """Move x (a rho_0-shifted weight) into the open dominant chamber of W_0.

    Returns ``(sign, y)`` with ``y = w x`` strictly dominant and ``sign = sgn(w)``,
    or None when x lies on a wall.  Equivalent to the orbit scan in
    :func:`make_dominant`, but works by sorting coordinates.
    """
    alg = x.algebra
    e = list(x.coords[1:])
    sign = 1
    if alg.name == "d21a":
        for i in range(2):
            if e[i] == 0:
                return None
            if e[i] < 0:
                e[i], sign = -e[i], -sign
        return sign, Weight(alg, (x[0], *e))
    if alg.name == "f4":
        for i in range(3):
            if e[i] == 0:
                return None
            if e[i] < 0:
                e[i], sign = -e[i], -sign
        sign *= _sort_desc(e)
        if e[0] == e[1] or e[1] == e[2]:
            return None
        return sign, Weight(alg, (x[0], *e))
    # G3: work with the sum-zero representative; W_0 = Sym3 x {+-1} and -1 is even.
    mean = sum(e) / 3
    y = [c - mean for c in e]
    sign = _sort_desc(y)
    if y[1] < 0:
        y = [-y[2], -y[1], -y[0]]
        sign = -sign  # reversing three entries is a transposition
    if y[1] == 0 or y[0] == y[1] or y[1] == y[2]:
        return None
    return sign, Weight(alg, (x[0], *y))


def _sort_desc(v: list) -> int:
    """Sort v in place descending; return the sign of the permutation used."""
    sign = 1
    for i in range(len(v)):
        for j in range(len(v) - 1 - i):
            if v[j] < v[j + 1]:
                v[j], v[j + 1] = v[j + 1], v[j]
                sign = -sign
    return sign


def lambda_bar0(lam: Weight) -> Fraction:
    """``2(theta, lam)/(theta, theta)``."""
    return lam.algebra.coroot(lam, lam.algebra.theta)
