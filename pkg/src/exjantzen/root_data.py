"""Root data of the exceptional Lie superalgebras D(2,1;a), F4 and G3.

Weights live in the space spanned by the orthogonal basis delta, eps_1, ...,
eps_I (I = 2 for D(2,1;a), 3 otherwise) and are written ``(l0 | l1, l2, ...)``.
For G3 the roots span a proper subspace, and weights differing by a multiple
of ``(0 | 1, 1, 1)`` are identified; we store them with ``l3 = 0``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

__all__ = [
    "AlgebraKind",
    "Scalar",
    "Weight",
    "Root",
    "WeylElement",
    "Algebra",
    "build_algebra",
    "parse_a",
    "to_fraction",
    "parse_weight",
    "WeightSyntaxError",
    "bilinear",
    "weyl_action",
    "dot_action",
]

KINDS = ("d21a", "f4", "g3")


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


def format_fraction(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class AlgebraKind:
    """Selector for one of the three algebras.

    ``a`` is ``None`` for D(2,1;a) with transcendental (generic) parameter, or
    an exact rational; it must be ``None`` for F4 and G3.
    """

    name: str
    a: Fraction | None = None

    def __post_init__(self):
        if self.name not in KINDS:
            raise ValueError(f"unknown algebra {self.name!r}; expected one of {KINDS}")
        if self.name != "d21a":
            if self.a is not None:
                raise ValueError(f"{self.name} takes no parameter a")
            return
        if self.a is not None:
            a = to_fraction(self.a)
            if a == 0 or a == -1:
                raise ValueError("D(2,1;a) requires a != 0, -1")
            object.__setattr__(self, "a", a)


def parse_a(text: str | None) -> Fraction | None:
    """Parse ``generic`` or ``p/q`` into the parameter a."""
    if text is None or text.strip().lower() == "generic":
        return None
    return to_fraction(text)


@dataclass(frozen=True)
class Scalar:
    """The exact value ``r + s*a``; ``s`` is always zero for F4 and G3."""

    r: Fraction = Fraction(0)
    s: Fraction = Fraction(0)

    def __add__(self, other: Scalar) -> Scalar:
        return Scalar(self.r + other.r, self.s + other.s)

    def __sub__(self, other: Scalar) -> Scalar:
        return Scalar(self.r - other.r, self.s - other.s)

    def __neg__(self) -> Scalar:
        return Scalar(-self.r, -self.s)

    def __mul__(self, c) -> Scalar:
        if isinstance(c, Scalar):
            # a*a would be needed; inner products are affine in a.
            if self.s and c.s:
                raise ArithmeticError("product would contain an a^2 term")
            return Scalar(self.r * c.r, self.r * c.s + self.s * c.r)
        c = to_fraction(c)
        return Scalar(self.r * c, self.s * c)

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> Fraction:
        """Exact ratio of two proportional scalars."""
        if other.r == 0 and other.s == 0:
            raise ZeroDivisionError("division by the zero scalar")
        c = self.r / other.r if other.r else self.s / other.s
        if self.r != c * other.r or self.s != c * other.s:
            raise ArithmeticError(f"{self} and {other} are not proportional")
        return c

    def value(self, a: Fraction | None) -> Fraction:
        if self.s == 0:
            return self.r
        if a is None:
            raise ArithmeticError("scalar depends on the generic parameter a")
        return self.r + self.s * a

    def __str__(self) -> str:
        if self.s == 0:
            return format_fraction(self.r)
        return f"{format_fraction(self.r)} + ({format_fraction(self.s)})a"


class Weight:
    """An element of h^* in delta-epsilon coordinates, tagged with its algebra."""

    __slots__ = ("algebra", "coords", "_hash")


    def __init__(self, algebra: Algebra, coords: Iterable):
        coords = tuple(c if type(c) is Fraction else to_fraction(c) for c in coords)
        n = algebra.n_eps + 1
        if len(coords) != n:
            raise ValueError(f"{algebra.key} weights have {n} coordinates, got {len(coords)}")
        if algebra.name == "g3" and coords[3] != 0:
            shift = coords[3]
            coords = (coords[0], coords[1] - shift, coords[2] - shift, Fraction(0))
        self.algebra = algebra
        self.coords = coords
        self._hash = None

    @classmethod
    def _raw(cls, algebra: Algebra, coords: tuple) -> Weight:
        # Internal constructor for coordinates that are already canonical Fractions.
        w = object.__new__(cls)
        w.algebra = algebra
        w.coords = coords
        w._hash = None
        return w

    def _check(self, other: Weight) -> None:
        if not isinstance(other, Weight) or (
            other.algebra is not self.algebra and other.algebra != self.algebra
        ):
            raise TypeError("weights belong to different algebras")

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, Weight):
            return NotImplemented
        return self.coords == other.coords and (
            self.algebra is other.algebra or self.algebra == other.algebra
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.algebra.key, self.coords))
        return self._hash

    def __add__(self, other: Weight) -> Weight:
        self._check(other)
        return Weight._raw(self.algebra, tuple(x + y for x, y in zip(self.coords, other.coords)))

    def __sub__(self, other: Weight) -> Weight:
        self._check(other)
        return Weight._raw(self.algebra, tuple(x - y for x, y in zip(self.coords, other.coords)))

    def __neg__(self) -> Weight:
        return Weight._raw(self.algebra, tuple(-x for x in self.coords))

    def __mul__(self, c) -> Weight:
        c = to_fraction(c)
        return Weight._raw(self.algebra, tuple(c * x for x in self.coords))

    __rmul__ = __mul__

    def __getitem__(self, i: int) -> Fraction:
        return self.coords[i]

    def __iter__(self):
        return iter(self.coords)

    def __lt__(self, other: Weight) -> bool:
        # Only used for deterministic ordering of output.
        return self.coords < other.coords

    def is_zero(self) -> bool:
        return not any(self.coords)

    def text(self) -> str:
        """Compact text form ``l0|l1,l2,...`` (the parseable format)."""
        head, *tail = (format_fraction(c) for c in self.coords)
        return f"{head}|{','.join(tail)}"

    def __str__(self) -> str:
        head, *tail = (format_fraction(c) for c in self.coords)
        return f"({head} | {', '.join(tail)})"

    def __repr__(self) -> str:
        return f"Weight({self.algebra.key}, {self})"


@dataclass(frozen=True)
class Root:
    weight: Weight
    parity: str  # "even" | "odd"
    odd_class: str  # "none" | "ddagger" | "plusminus"
    isotropic: bool

    def __str__(self) -> str:
        return str(self.weight)


@dataclass(frozen=True)
class WeylElement:
    """Signed permutation of the eps-coordinates, optionally composed with sigma_0.

    Acting on a weight x gives ``(w x)_i = signs[i] * x_{perm[i]}`` on the
    eps-coordinates; sigma_0 negates the delta-coordinate.
    """

    perm: tuple[int, ...]
    signs: tuple[int, ...]
    sigma0: bool
    length: int

    @property
    def sign(self) -> int:
        return -1 if self.length % 2 else 1

    def is_identity(self) -> bool:
        return (
            not self.sigma0
            and self.perm == tuple(range(len(self.perm)))
            and all(s == 1 for s in self.signs)
        )


class Algebra:
    """Complete root datum of one exceptional Lie superalgebra.

    Build instances with :func:`build_algebra`; they are immutable and cached.
    """

    def __init__(self, kind: AlgebraKind):
        self.kind = kind
        self.name = kind.name
        self.a = kind.a
        self.n_eps = 2 if self.name == "d21a" else 3
        if self.name == "d21a":
            self.key = "d21a" if self.a is None else f"d21a(a={format_fraction(self.a)})"
        else:
            self.key = self.name
        self._build_roots()
        self._build_weyl()

    # -- construction -----------------------------------------------------

    def weight(self, *coords) -> Weight:
        if len(coords) == 1 and not isinstance(coords[0], (int, Fraction, str)):
            coords = tuple(coords[0])
        return Weight(self, coords)

    def zero(self) -> Weight:
        return Weight(self, [0] * (self.n_eps + 1))

    def basis(self, i: int) -> Weight:
        v = [0] * (self.n_eps + 1)
        v[i] = 1
        return Weight(self, v)

    def _w(self, d, *e) -> Weight:
        return Weight(self, (d, *e))

    def _build_roots(self) -> None:
        h = Fraction(1, 2)
        w = self._w
        if self.name == "d21a":
            self.simple_roots = (w(1, -1, -1), w(0, 2, 0), w(0, 0, 2))
            even = [w(0, 2, 0), w(0, 0, 2), w(2, 0, 0)]
            self.theta = w(2, 0, 0)
            dd = [w(1, 1, s) for s in (1, -1)]
            pm = [w(1, -1, s) for s in (1, -1)]
        elif self.name == "f4":
            self.simple_roots = (w(h, -h, -h, -h), w(0, 1, -1, 0), w(0, 0, 1, -1), w(0, 0, 0, 1))
            even = [w(1, 0, 0, 0)]
            even += [self.basis(i) for i in (1, 2, 3)]
            for i, j in itertools.combinations((1, 2, 3), 2):
                for s in (1, -1):
                    v = [0, 0, 0, 0]
                    v[i], v[j] = 1, s
                    even.append(Weight(self, v))
            self.theta = w(1, 0, 0, 0)
            dd = [w(h, h, s2 * h, s3 * h) for s2 in (1, -1) for s3 in (1, -1)]
            pm = [w(h, -h, s2 * h, s3 * h) for s2 in (1, -1) for s3 in (1, -1)]
        else:
            self.simple_roots = (w(1, -1, 0, 1), w(0, 1, -1, 0), w(0, -1, 2, -1))
            even = [
                w(2, 0, 0, 0),
                w(0, 1, -1, 0),
                w(0, 1, 0, -1),
                w(0, 0, 1, -1),
                w(0, 2, -1, -1),
                w(0, -1, 2, -1),
                w(0, 1, 1, -2),
            ]
            self.theta = w(2, 0, 0, 0)
            dd = [w(1, 1, -1, 0), w(1, 1, 0, -1), w(1, 0, 1, -1)]
            pm = [w(1, 0, 0, 0), w(1, -1, 1, 0), w(1, -1, 0, 1), w(1, 0, -1, 1)]

        self.even_positive = tuple(even)
        self.g0_positive = tuple(x for x in even if x != self.theta)
        odd = []
        for cls, roots in (("ddagger", dd), ("plusminus", pm)):
            for r in roots:
                odd.append(Root(r, "odd", cls, self.is_zero(self.form(r, r))))
        self.odd_roots = tuple(odd)
        self.odd_positive = tuple(r.weight for r in odd)
        self.isotropic_odd = tuple(r.weight for r in odd if r.isotropic)
        self.roots = tuple(Root(x, "even", "none", False) for x in even) + self.odd_roots

        def half_sum(xs: Sequence[Weight]) -> Weight:
            total = self.zero()
            for x in xs:
                total = total + x
            return total * Fraction(1, 2)

        self.rho0bar = half_sum(self.even_positive)
        self.rho1 = half_sum(self.odd_positive)
        self.rho = self.rho0bar - self.rho1
        # rho of g_0 alone; differs from rho0bar by theta/2, a W_0-invariant vector.
        self.rho0 = self.rho0bar - self.theta * Fraction(1, 2)
        self.sigma0_constant = -2 * self.rho[0]

        # Coordinates used for the simple-root expansion (G3 drops l3 = 0).
        ncols = self.n_eps + 1 if self.name != "g3" else 3
        from sympy import Matrix, Rational

        m = Matrix([[Rational(r[i].numerator, r[i].denominator) for r in self.simple_roots]
                    for i in range(ncols)])
        inv = m.inv()
        self._simple_inv = tuple(
            tuple(Fraction(int(inv[i, j].p), int(inv[i, j].q)) for j in range(ncols))
            for i in range(ncols)
        )
        self._ncols = ncols

    def _build_weyl(self) -> None:
        n = self.n_eps
        if self.name == "d21a":
            gens = [((0, 1), s) for s in itertools.product((1, -1), repeat=2)]
        elif self.name == "f4":
            gens = [(p, s) for p in itertools.permutations(range(3))
                    for s in itertools.product((1, -1), repeat=3)]
        else:
            gens = [(p, s) for p in itertools.permutations(range(3))
                    for s in ((1, 1, 1), (-1, -1, -1))]
        negatives = {-x for x in self.g0_positive}
        elements = []
        for perm, signs in gens:
            probe = WeylElement(perm, signs, False, 0)
            length = sum(1 for x in self.g0_positive if self.act(probe, x) in negatives)
            elements.append(WeylElement(perm, signs, False, length))
        assert len(elements[0].perm) == n
        self.W0 = tuple(elements)
        self.W = self.W0 + tuple(
            WeylElement(w.perm, w.signs, True, w.length + 1) for w in self.W0
        )
        self.identity = next(w for w in self.W0 if w.is_identity())
        self.sigma0 = next(w for w in self.W if w.sigma0 and w.perm == self.identity.perm
                           and w.signs == self.identity.signs)

    # -- arithmetic ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Algebra) and other.key == self.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"Algebra({self.key})"

    @property
    def generic(self) -> bool:
        return self.name == "d21a" and self.a is None

    def _eps_part(self, x: Weight) -> tuple[Fraction, ...]:
        e = x.coords[1:]
        if self.name == "g3":
            mean = sum(e) / 3
            e = tuple(c - mean for c in e)
        return e

    def form(self, x: Weight, y: Weight) -> Scalar:
        """The invariant bilinear form, as ``r + s*a``."""
        if x.algebra != self or y.algebra != self:
            raise TypeError("bilinear form of weights from different algebras")
        if self.name == "d21a":
            d = x[0] * y[0]
            return Scalar(-d + x[1] * y[1], -d + x[2] * y[2])
        ex, ey = self._eps_part(x), self._eps_part(y)
        dot = sum(p * q for p, q in zip(ex, ey))
        if self.name == "f4":
            return Scalar(-6 * x[0] * y[0] + 2 * dot)
        return Scalar(-2 * x[0] * y[0] + dot)

    def g0_form(self, x: Weight, y: Weight) -> Fraction:
        """A rational W_0-invariant form on the eps-part (used for Freudenthal)."""
        ex, ey = self._eps_part(x), self._eps_part(y)
        return sum(p * q for p, q in zip(ex, ey))

    def is_zero(self, s: Scalar) -> bool:
        if self.a is None:
            return s.r == 0 and s.s == 0
        return s.r + s.s * self.a == 0

    def coroot(self, x: Weight, alpha: Weight) -> Fraction:
        """``2(x, alpha)/(alpha, alpha)`` for a non-isotropic root alpha."""
        return 2 * (self.form(x, alpha) / self.form(alpha, alpha))

    def act(self, w: WeylElement, x: Weight) -> Weight:
        """Linear action of a Weyl group element."""
        e = x.coords[1:]
        new = [w.signs[i] * e[w.perm[i]] for i in range(self.n_eps)]
        head = -x[0] if w.sigma0 else x[0]
        return Weight(self, (head, *new))

    def dot(self, w: WeylElement, x: Weight) -> Weight:
        """Dot action ``w(x + rho) - rho``."""
        return self.act(w, x + self.rho) - self.rho

    def compose(self, w1: WeylElement, w2: WeylElement) -> WeylElement:
        """The product ``w1 w2`` (apply w2 first)."""
        perm = tuple(w2.perm[w1.perm[i]] for i in range(self.n_eps))
        signs = tuple(w1.signs[i] * w2.signs[w1.perm[i]] for i in range(self.n_eps))
        sigma0 = w1.sigma0 != w2.sigma0
        for w in self.W:
            if w.perm == perm and w.signs == signs and w.sigma0 == sigma0:
                return w
        raise AssertionError("Weyl group not closed under composition")

    def simple_coeffs(self, x: Weight) -> tuple[Fraction, ...]:
        """Coefficients of x in the basis of simple roots."""
        return _simple_coeffs(self, x)

    def preceq(self, mu: Weight, lam: Weight) -> bool:
        """The partial order: ``mu <= lam`` iff lam - mu is in Z_+ Pi."""
        return _preceq(self, mu, lam)

    def depth(self, mu: Weight, lam: Weight) -> int | None:
        """Sum of simple-root coefficients of lam - mu, or None if mu is not below lam."""
        cs = self.simple_coeffs(lam - mu)
        if all(c.denominator == 1 and c >= 0 for c in cs):
            return int(sum(cs))
        return None

    @cached_property
    def odd_positive_sorted(self) -> tuple[Weight, ...]:
        """Odd positive roots in the lexicographic order of simple-root coefficients."""
        return tuple(sorted(self.odd_positive, key=self.simple_coeffs, reverse=True))


@lru_cache(maxsize=65536)
def _simple_coeffs(alg: Algebra, x: Weight) -> tuple[Fraction, ...]:
    v = x.coords[: alg._ncols]
    return tuple(sum(r * c for r, c in zip(row, v)) for row in alg._simple_inv)


@lru_cache(maxsize=262144)
def _preceq(alg: Algebra, mu: Weight, lam: Weight) -> bool:
    a, b = _simple_coeffs(alg, lam), _simple_coeffs(alg, mu)
    return all((c - d).denominator == 1 and c >= d for c, d in zip(a, b))


@lru_cache(maxsize=None)
def _build(name: str, a: Fraction | None) -> Algebra:
    return Algebra(AlgebraKind(name, a))


def build_algebra(kind: AlgebraKind | str, a=None) -> Algebra:
    """Return the (cached) root datum for an algebra selector.

    >>> build_algebra("f4").rho
    Weight(f4, (-3/2 | 5/2, 3/2, 1/2))
    """
    if isinstance(kind, str):
        kind = AlgebraKind(kind, parse_a(a) if isinstance(a, str) else a)
    return _build(kind.name, kind.a)


def bilinear(x: Weight, y: Weight) -> Scalar:
    """The invariant form ``(x, y)``."""
    return x.algebra.form(x, y)


def weyl_action(w: WeylElement, x: Weight) -> Weight:
    return x.algebra.act(w, x)


def dot_action(w: WeylElement, lam: Weight) -> Weight:
    """``w . lam = w(lam + rho) - rho``."""
    return lam.algebra.dot(w, lam)


class WeightSyntaxError(ValueError):
    """Unparsable weight text; ``position`` is the offending character offset."""

    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position


def parse_weight(alg: Algebra, text: str) -> Weight:
    """Parse ``"l0|l1,l2[,l3]"``; each coordinate is ``p`` or ``p/q``.

    G3 weights may omit l3, which is then taken to be 0.
    """
    if text.count("|") != 1:
        pos = text.find("|", text.find("|") + 1) if "|" in text else len(text)
        raise WeightSyntaxError("expected exactly one '|'", text, pos)
    head, tail = text.split("|")
    fields = [(0, head)]
    offset = len(head) + 1
    for part in tail.split(","):
        fields.append((offset, part))
        offset += len(part) + 1
    values = []
    for pos, raw in fields:
        item = raw.strip()
        try:
            if not item:
                raise ValueError
            values.append(Fraction(item))
        except (ValueError, ZeroDivisionError):
            raise WeightSyntaxError(f"bad coordinate {raw!r}", text, pos) from None
    want = alg.n_eps + 1
    if alg.name == "g3" and len(values) == want - 1:
        values.append(Fraction(0))
    if len(values) != want:
        raise WeightSyntaxError(f"{alg.key} weights need {want} coordinates", text, len(text))
    return Weight(alg, values)
