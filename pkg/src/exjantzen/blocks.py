"""Classification of integral atypical weights into the chains atp1 and atp2.

Every chain lies on a line ``seed + t*gamma`` in rho-shifted coordinates.  Its
members are the dominant representatives of the regular points on that line,
numbered outwards from the seed; up and down moves step along the line.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
import threading
from functools import lru_cache

from .root_data import Algebra, Root, Weight
from .weights import (
    atypical_roots,
    chamber_reduce,
    is_g0_dominant,
    is_g_integral,
    rho_shift,
)

__all__ = [
    "Block",
    "BlockPosition",
    "Typical",
    "Singular",
    "ClassificationError",
    "up_move",
    "down_move",
    "chain_weight",
    "classify",
    "has_tail_root",
    "sigma0_partner",
    "shift_index",
    "window",
    "blocks_for_sweep",
]

# Regular points on a chain line are never far apart; this only guards bugs.
_MAX_STEPS = 10_000


class ClassificationError(ValueError):
    """The weight is outside the domain of the classification."""


@dataclass(frozen=True)
class Typical:
    weight: Weight


@dataclass(frozen=True)
class Singular:
    weight: Weight


@dataclass(frozen=True)
class Block:
    """One chain: an algebra, a family tag and the chain parameters."""

    algebra: Algebra
    family: str  # "atp1" | "atp2"
    params: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        alg, p = self.algebra, self.param_dict
        if self.family == "atp1":
            if alg.name == "d21a" and p:
                raise ValueError("the D(2,1;a) atp1 chain has no parameters")
            if alg.name == "f4" and (set(p) != {"x"} or p["x"] < 1):
                raise ValueError("F4 atp1 needs x >= 1")
            if alg.name == "g3" and (set(p) != {"x"} or p["x"] < 0):
                raise ValueError("G3 atp1 needs x >= 0")
        elif self.family == "atp2":
            if alg.name == "g3":
                raise ValueError("G3 has no atp2 chains")
            if alg.name == "d21a":
                if alg.a is None:
                    raise ValueError("atp2 is empty for generic a")
                if set(p) != {"p", "q", "x"} or p["x"] < 1:
                    raise ValueError("D(2,1;a) atp2 needs p, q and x >= 1")
                if Fraction(p["p"], p["q"]) != alg.a:
                    raise ValueError("p/q does not match the parameter a")
            if alg.name == "f4" and (set(p) != {"a2", "a3"} or not 1 <= p["a3"] < p["a2"]):
                raise ValueError("F4 atp2 needs 1 <= a3 < a2")
        else:
            raise ValueError(f"unknown family {self.family!r}")

    @property
    def param_dict(self) -> dict[str, int]:
        return dict(self.params)

    @classmethod
    def atp1(cls, algebra: Algebra, x: int | None = None) -> Block:
        return cls(algebra, "atp1", () if x is None else (("x", int(x)),))

    @classmethod
    def atp2(cls, algebra: Algebra, **params: int) -> Block:
        if algebra.name == "d21a" and "p" not in params and algebra.a is not None:
            params = {"p": algebra.a.numerator, "q": algebra.a.denominator, **params}
        return cls(algebra, "atp2", tuple(sorted((k, int(v)) for k, v in params.items())))

    # -- geometry ------------------------------------------------------------

    @property
    def seed(self) -> Weight:
        """The rho-shifted point the chain is numbered from."""
        alg, p = self.algebra, self.param_dict
        if alg.name == "d21a":
            if self.family == "atp1":
                return alg.zero()
            return alg.weight(0, abs(p["p"]) * p["x"], p["q"] * p["x"])
        if alg.name == "f4":
            if self.family == "atp1":
                return alg.weight(0, p["x"], p["x"], 0)
            return alg.weight(0, p["a2"] + p["a3"], p["a2"], p["a3"])
        x = p["x"]
        return alg.weight(Fraction(1, 2), 3 * x + 2, 3 * x + 1, 0)

    @property
    def gamma(self) -> Weight:
        """The atypical root of an atp1 chain."""
        alg = self.algebra
        if self.family != "atp1":
            raise AttributeError("atp2 chains have two roots; use gamma_pm")
        if alg.name == "d21a":
            return alg.weight(1, -1, -1)
        if alg.name == "f4":
            h = Fraction(1, 2)
            return alg.weight(h, h, -h, -h)
        return alg.weight(1, 1, -1, 0)

    @property
    def gamma_pm(self) -> dict[str, Weight]:
        alg = self.algebra
        if self.family != "atp2":
            raise AttributeError("only atp2 chains have the pair of roots")
        if alg.name == "d21a":
            s = 1 if self.param_dict["p"] > 0 else -1
            return {"+": alg.weight(1, 1, -s), "-": alg.weight(1, -1, s)}
        h = Fraction(1, 2)
        return {"+": alg.weight(h, h, -h, -h), "-": alg.weight(h, -h, h, h)}

    def line(self, index: int, branch: str | None) -> tuple[Weight, int]:
        """(direction, first t) of the ray carrying the given index."""
        if self.family == "atp1":
            return (self.gamma, 0) if index > 0 else (-self.gamma, 1)
        g = self.gamma_pm
        other = "-" if branch == "+" else "+"
        return (g[branch], 1) if index > 0 else (-g[other], 1)

    def __str__(self) -> str:
        inner = ", ".join(f"{k}={v}" for k, v in self.params)
        return f"{self.family}[{self.algebra.key}{'; ' + inner if inner else ''}]"


@dataclass(frozen=True)
class BlockPosition:
    block: Block
    index: int
    branch: str | None = None

    def __post_init__(self):
        if self.block.family == "atp1":
            if self.index == 0:
                raise ValueError("atp1 chains have no index 0")
            if self.branch is not None:
                raise ValueError("atp1 positions carry no branch")
        else:
            if self.index == 0:
                object.__setattr__(self, "branch", None)
            elif self.branch not in ("+", "-"):
                raise ValueError("atp2 positions with index != 0 need branch '+' or '-'")

    @property
    def family(self) -> str:
        return self.block.family

    @property
    def is_tail(self) -> bool:
        return self.index < 0

    def to_json(self) -> dict:
        return {
            "family": self.block.family,
            "params": self.block.param_dict,
            "branch": self.branch,
            "index": self.index,
        }

    @classmethod
    def from_json(cls, algebra: Algebra, data: dict) -> BlockPosition:
        params = data.get("params") or {}
        family = data["family"]
        if family == "atp1":
            block = Block.atp1(algebra, params.get("x"))
        else:
            block = Block.atp2(algebra, **params)
        return cls(block, int(data["index"]), data.get("branch"))

    def label(self) -> str:
        sup = str(self.index)
        return f"lambda^{sup}" + (f"_{self.branch}" if self.branch else "")

    def __str__(self) -> str:
        return f"{self.block} {self.label()}"


def _dominant_point(p: Weight) -> Weight | None:
    """Dominant conjugate of a rho-shifted point, or None if it is singular."""
    r = chamber_reduce(p)
    return None if r is None else r[1]


def _root_weight(gamma: Root | Weight) -> Weight:
    return gamma.weight if isinstance(gamma, Root) else gamma


def _scan(base: Weight, step: Weight, n: int, start: int) -> Weight:
    """The n-th regular point of ``base + t*step`` for t >= start, unshifted by rho."""
    found = 0
    for t in range(start, start + _MAX_STEPS):
        dom = _dominant_point(base + step * t)
        if dom is not None:
            found += 1
            if found == n:
                return dom - base.algebra.rho
    raise RuntimeError("no regular point found along the line")


def _move(lam: Weight, gamma: Root | Weight, sign: int) -> Weight:
    g = _root_weight(gamma)
    alg = lam.algebra
    if not any(r.weight == g for r in atypical_roots(lam)):
        raise ClassificationError(f"{g} is not an atypical root of {lam}")
    return _scan(rho_shift(lam), g * sign, 1, 1)


def up_move(lam: Weight, gamma: Root | Weight) -> Weight:
    """``(lam + k gamma)^+`` for the least k >= 1 giving a regular weight."""
    return _move(lam, gamma, 1)


def down_move(lam: Weight, gamma: Root | Weight) -> Weight:
    """``(lam - k gamma)^+`` for the least k >= 1 giving a regular weight."""
    return _move(lam, gamma, -1)


_rays: dict = {}
_rays_lock = threading.Lock()


@lru_cache(maxsize=None)
def _chain_weight(block: Block, index: int, branch: str | None) -> Weight:
    if index == 0:
        return block.seed - block.algebra.rho
    step, start = block.line(index, branch)
    key = (block, step)
    n = abs(index)
    with _rays_lock:
        found, t = _rays.get(key, ((), start))
        if len(found) >= n:
            return found[n - 1]
        found = list(found)
        while len(found) < n:
            if t - start > _MAX_STEPS:
                raise RuntimeError("no regular point found along the line")
            dom = _dominant_point(block.seed + step * t)
            if dom is not None:
                found.append(dom - block.algebra.rho)
            t += 1
        _rays[key] = (tuple(found), t)
        return found[n - 1]


def chain_weight(pos: BlockPosition) -> Weight:
    """The weight sitting at a chain position."""
    return _chain_weight(pos.block, pos.index, pos.branch)


def shift_index(pos: BlockPosition, d: int) -> BlockPosition:
    """Move d steps along the chain (index 0 is skipped in atp1)."""
    i = pos.index
    if pos.block.family == "atp1":
        j = i + d
        if i > 0 >= j or i < 0 <= j:
            j += 1 if d > 0 else -1
        return BlockPosition(pos.block, j, None)
    j = i + d
    if j == 0:
        return BlockPosition(pos.block, 0, None)
    if i == 0:
        raise ValueError("leaving index 0 of an atp2 chain needs a branch")
    return BlockPosition(pos.block, j, pos.branch)


def sigma0_partner(pos: BlockPosition) -> BlockPosition:
    """The position of the sigma_0 dot-image: the index is negated."""
    return BlockPosition(pos.block, -pos.index, pos.branch)


def _count_regular(base: Weight, step: Weight, lo: int, hi: int) -> int:
    return sum(1 for t in range(lo, hi + 1) if _dominant_point(base + step * t) is not None)


def classify(lam: Weight) -> Typical | Singular | BlockPosition:
    """Locate a g-integral, g_0-dominant weight in atp1 or atp2."""
    return _classify(lam)


@lru_cache(maxsize=None)
def _classify(lam: Weight) -> Typical | Singular | BlockPosition:
    alg = lam.algebra
    if not is_g_integral(lam):
        raise ClassificationError(f"{lam} is not g-integral (predicate is_g_integral)")
    if not is_g0_dominant(lam):
        raise ClassificationError(f"{lam} is not g0-dominant (predicate is_g0_dominant)")
    roots = [r.weight for r in atypical_roots(lam)]
    if not roots:
        return Typical(lam)
    p = rho_shift(lam)
    if _dominant_point(p) is None:
        return Singular(lam)

    if len(roots) >= 2:
        pos = BlockPosition(_atp2_block(p), 0)
    else:
        g = roots[0]
        target = Fraction(1, 2) if alg.name == "g3" else Fraction(0)
        k = (target - p[0]) / g[0]
        if k.denominator != 1:
            raise AssertionError("no integral shift to the seed level")
        k = int(k)
        nu = p + g * k
        tstar = -k
        if _dominant_point(nu) is None or alg.name == "g3":
            if alg.name == "d21a":
                block = Block.atp1(alg)
            elif alg.name == "f4":
                block = Block.atp1(alg, max(abs(c) for c in nu.coords[1:]))
            else:
                s = _dominant_point(nu)
                x = 0 if s is None else (s[1] - 2) / 3
                block = Block.atp1(alg, int(x))
            if tstar >= 0:
                index = _count_regular(nu, g, 0, tstar)
            else:
                index = -_count_regular(nu, g, tstar, -1)
            pos = BlockPosition(block, index)
        else:
            s = _dominant_point(nu)
            block = _atp2_block(s)
            w = next(w for w in alg.W0 if alg.act(w, nu) == s)
            g2 = alg.act(w, g)
            gpm = block.gamma_pm
            name = "+" if g2 == gpm["+"] else "-"
            assert g2 == gpm[name]
            if tstar > 0:
                pos = BlockPosition(block, _count_regular(nu, g, 1, tstar), name)
            else:
                other = "-" if name == "+" else "+"
                pos = BlockPosition(block, -_count_regular(nu, g, tstar, -1), other)

    if chain_weight(pos) != lam:
        raise AssertionError(f"classification of {lam} does not round-trip ({pos})")
    return pos


def _atp2_block(s: Weight) -> Block:
    """The atp2 block whose seed is the rho-shifted dominant point s."""
    alg = s.algebra
    if s[0] != 0:
        raise AssertionError("two atypical roots off the seed level")
    if alg.name == "d21a":
        if alg.a is None:
            raise AssertionError("generic a has no weights with two atypical roots")
        q = alg.a.denominator
        x = s[2] / q
        return Block.atp2(alg, x=int(x))
    if alg.name == "f4":
        return Block.atp2(alg, a2=int(s[2]), a3=int(s[3]))
    raise AssertionError("G3 has no atp2 chains")


def has_tail_root(lam: Weight) -> bool:
    """True iff lam is a chain weight with negative index."""
    pos = classify(lam)
    return isinstance(pos, BlockPosition) and pos.index < 0


def window(block: Block, radius: int) -> list[BlockPosition]:
    """All chain positions with ``|index| <= radius``, in a fixed order."""
    out: list[BlockPosition] = []
    if block.family == "atp1":
        for i in range(-radius, radius + 1):
            if i:
                out.append(BlockPosition(block, i))
        return out
    out.append(BlockPosition(block, 0))
    for b in ("+", "-"):
        for i in range(-radius, radius + 1):
            if i:
                out.append(BlockPosition(block, i, b))
    return out


def blocks_for_sweep(alg: Algebra, xmax: int = 3) -> list[Block]:
    """The chains used by the standard sweeps for one algebra."""
    if alg.name == "d21a":
        out = [Block.atp1(alg)]
        if alg.a is not None:
            out += [Block.atp2(alg, x=x) for x in range(1, xmax + 1)]
        return out
    if alg.name == "f4":
        out = [Block.atp1(alg, x) for x in range(1, xmax + 1)]
        return out + [Block.atp2(alg, a2=a2, a3=a3) for a2, a3 in ((2, 1), (3, 1), (3, 2))]
    return [Block.atp1(alg, x) for x in range(0, xmax + 1)]
