"""Integer polynomials in q."""
from __future__ import annotations

from typing import Iterable, Mapping

__all__ = ["QPolynomial"]


class QPolynomial:
    """Polynomial with integer coefficients, stored as exponent -> coefficient."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[int] | int = 0):
        if isinstance(coeffs, int):
            c = {0: coeffs}
        elif isinstance(coeffs, Mapping):
            c = dict(coeffs)
        else:
            c = dict(enumerate(coeffs))
        self._c = {k: int(v) for k, v in c.items() if v}

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> QPolynomial:
        return cls({exponent: coeff})

    @classmethod
    def q(cls) -> QPolynomial:
        return cls.monomial(1)

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def coefficient_list(self) -> list[int]:
        """Coefficients of q^0, q^1, ... up to the degree."""
        if not self._c:
            return []
        if min(self._c) < 0:
            raise ValueError("negative exponents have no coefficient list")
        return [self._c.get(i, 0) for i in range(max(self._c) + 1)]

    def degree(self) -> int:
        return max(self._c) if self._c else -1

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def _coerce(self, other) -> QPolynomial:
        return other if isinstance(other, QPolynomial) else QPolynomial(int(other))

    def __add__(self, other) -> QPolynomial:
        other = self._coerce(other)
        c = dict(self._c)
        for k, v in other._c.items():
            c[k] = c.get(k, 0) + v
        return QPolynomial(c)

    __radd__ = __add__

    def __neg__(self) -> QPolynomial:
        return QPolynomial({k: -v for k, v in self._c.items()})

    def __sub__(self, other) -> QPolynomial:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> QPolynomial:
        return self._coerce(other) - self

    def __mul__(self, other) -> QPolynomial:
        other = self._coerce(other)
        c: dict[int, int] = {}
        for i, a in self._c.items():
            for j, b in other._c.items():
                c[i + j] = c.get(i + j, 0) + a * b
        return QPolynomial(c)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> QPolynomial:
        out = QPolynomial(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = QPolynomial(other)
        return isinstance(other, QPolynomial) and self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def __call__(self, q):
        return sum(v * q**k for k, v in self._c.items())

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for k in sorted(self._c):
            v = self._c[k]
            mono = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            if mono and abs(v) == 1:
                term = mono
            else:
                term = f"{abs(v)}{mono}"
            parts.append(("-" if v < 0 else "+", term))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for s, t in parts[1:]:
            out += f" {s} {t}"
        return out

    def __repr__(self) -> str:
        return f"QPolynomial({self})"
