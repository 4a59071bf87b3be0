"""u^- homology, Kazhdan-Lusztig polynomials and the identities linking them
to the Jantzen filtration."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from graphlib import TopologicalSorter

from .blocks import (
    Block,
    BlockPosition,
    chain_weight,
    classify,
    window,
)
from .characters import (
    CharacterTruncation,
    _key,
    _over_one_minus,
    _root_key,
    _times_one_plus,
    char_simple_truncated,
    g0_character,
)
from .qpoly import QPolynomial
from .root_data import Weight
from .verma import (
    DomainError,
    jantzen_polynomials,
    loewy_layers,
    lower_neighbour,
    primitive_weight_graph,
    sigma0_dot,
)
from .weights import atypical_roots, is_g0_dominant, is_g_integral, is_integral_dominant

__all__ = [
    "HomologyTable",
    "KLBlockMatrix",
    "IncompleteWindowError",
    "homology",
    "kl_polynomial",
    "inverse_kl",
    "verify_kl_identity",
    "verify_grothendieck_cancellation",
    "verify_euler",
    "cohomology_table",
    "cohomology_chain",
]


class IncompleteWindowError(LookupError):
    """A matrix entry depends on chain weights outside the requested window."""


@dataclass
class HomologyTable:
    """``H_k(u^-, L(lam))`` as multisets of g_0 highest weights, for k <= kmax."""

    weight: Weight
    entries: dict[int, list[Weight]]
    derived: bool = False  # True outside the range covered by the atypical tables

    def __getitem__(self, k: int) -> list[Weight]:
        return self.entries.get(k, [])

    def to_json(self) -> dict:
        return {
            "weight": self.weight.text(),
            "derived": self.derived,
            "entries": {str(k): [w.text() for w in v] for k, v in sorted(self.entries.items())},
        }


def _atp1_terms(i: int, k: int) -> list[int]:
    if k == 0 or i <= -1:
        return [i - k]
    if i == 1:
        return [-k - 1]
    if k >= i:
        return [-i - k, -k + i - 2]
    if k == i - 1:
        return [-i - k, 1, -1]
    return [-i - k, i - k]


def _atp2_terms(i: int, k: int) -> list[tuple[int, bool]]:
    """Indices and a flag for 'same branch' (True) or the opposite one (False)."""
    if k == 0 or i <= -1:
        return [(i - k, True)]
    if i == 0:
        return [(-k, True), (-k, False)]
    if k >= i:
        return [(i - k, False), (-i - k, True)]
    return [(i - k, True), (-i - k, True)]


def homology(lam: Weight, kmax: int) -> HomologyTable:
    """u^- homology of L(lam) in degrees 0..kmax."""
    t = _homology(lam, kmax)
    return HomologyTable(t.weight, {k: list(v) for k, v in t.entries.items()}, t.derived)


@lru_cache(maxsize=None)
def _homology(lam: Weight, kmax: int) -> HomologyTable:
    if not is_g0_dominant(lam):
        raise DomainError(f"{lam} is not g0-dominant (predicate is_g0_dominant)")
    entries: dict[int, list[Weight]] = {}
    if not atypical_roots(lam):
        entries[0] = [lam]
        if is_integral_dominant(lam) and kmax >= 1:
            entries[1] = [sigma0_dot(lam)]
        return HomologyTable(lam, entries, derived=True)
    if not is_g_integral(lam):
        w = lam
        for k in range(kmax + 1):
            entries[k] = [w]
            w = lower_neighbour(w)
        return HomologyTable(lam, entries, derived=True)
    pos = classify(lam)
    if not isinstance(pos, BlockPosition):
        raise DomainError(f"{lam} is singular")
    block, i = pos.block, pos.index
    for k in range(kmax + 1):
        if block.family == "atp1":
            entries[k] = [chain_weight(BlockPosition(block, j)) for j in _atp1_terms(i, k)]
        else:
            # index 0 behaves like the '+' branch; the '-' branch is its mirror image.
            b = pos.branch or "+"
            other = "-" if b == "+" else "+"
            entries[k] = [
                chain_weight(BlockPosition(block, j, b if same else other))
                for j, same in _atp2_terms(i, k)
            ]
    return HomologyTable(lam, entries)


def _kmax_for(lam: Weight, mu: Weight) -> int:
    """Degrees beyond the depth of mu below lam cannot contain L0(mu)."""
    d = lam.algebra.depth(mu, lam)
    return -1 if d is None else d


def kl_polynomial(lam: Weight, mu: Weight) -> QPolynomial:
    """``p_{lam,mu}(q) = sum_k (-q)^k [H_k(u^-, L(lam)) : L0(mu)]``."""
    kmax = _kmax_for(lam, mu)
    if kmax < 0:
        return QPolynomial(0)
    # Round the degree bound up so that the cached tables are shared.
    table = _homology(lam, -(-(kmax + 1) // 16) * 16)
    c = {}
    for k in range(kmax + 1):
        n = table[k].count(mu)
        if n:
            c[k] = n * (-1) ** k
    return QPolynomial(c)


def _positions_between(block: Block, lam: Weight, nu: Weight, limit: int = 200) -> list[Weight]:
    """All chain weights mu of the block with nu <= mu <= lam.

    Along each ray of the chain the delta-coordinate is strictly monotone,
    so each ray is scanned only until it leaves the range [nu_0, lam_0].
    """
    alg = block.algebra
    lo, hi = nu[0], lam[0]
    rays = [(None, 1), (None, -1)] if block.family == "atp1" else [
        ("+", 1), ("+", -1), ("-", 1), ("-", -1)
    ]
    found = []
    if block.family == "atp2":
        w = chain_weight(BlockPosition(block, 0))
        if alg.preceq(nu, w) and alg.preceq(w, lam):
            found.append(w)
    for branch, sgn in rays:
        for j in range(1, limit):
            w = chain_weight(BlockPosition(block, sgn * j, branch))
            if sgn > 0 and w[0] > hi or sgn < 0 and w[0] < lo:
                break
            if alg.preceq(nu, w) and alg.preceq(w, lam) and w not in found:
                found.append(w)
        else:
            raise AssertionError("chain ray did not leave the delta range")
    return found


@dataclass
class KLBlockMatrix:
    """p and a = p^{-1} on a window of a block, indexed by chain weights."""

    block: Block
    radius: int
    positions: list[BlockPosition]
    weights: list[Weight]
    p: dict[tuple[Weight, Weight], QPolynomial] = field(default_factory=dict)
    a: dict[tuple[Weight, Weight], QPolynomial] = field(default_factory=dict)
    incomplete: set = field(default_factory=set)

    def p_entry(self, lam: Weight, nu: Weight) -> QPolynomial:
        return self.p.get((lam, nu), QPolynomial(0))

    def a_entry(self, lam: Weight, nu: Weight) -> QPolynomial:
        if (lam, nu) in self.incomplete:
            raise IncompleteWindowError(
                f"a({lam}, {nu}) needs chain weights outside the window of radius {self.radius}"
            )
        if lam not in self.weights or nu not in self.weights:
            raise IncompleteWindowError(f"({lam}, {nu}) is not inside the window")
        return self.a.get((lam, nu), QPolynomial(0))

    def check_inverse(self) -> bool:
        """Recompute sum_mu a(lam, mu) p(mu, nu) on every complete pair."""
        for lam in self.weights:
            for nu in self.weights:
                if (lam, nu) in self.incomplete:
                    continue
                total = QPolynomial(0)
                for mu in self.weights:
                    if (lam, mu) in self.incomplete:
                        continue
                    am = self.a.get((lam, mu))
                    pm = self.p.get((mu, nu))
                    if am and pm:
                        total = total + am * pm
                if total != QPolynomial(1 if lam == nu else 0):
                    return False
        return True

    def to_json(self) -> dict:
        def enc(d):
            return [
                {"lambda": l.text(), "mu": m.text(), "coeffs": v.coefficient_list()}
                for (l, m), v in d.items()
                if v
            ]

        return {
            "block": str(self.block),
            "radius": self.radius,
            "positions": [p.to_json() for p in self.positions],
            "p": enc(self.p),
            "a": enc(self.a),
        }


def inverse_kl(block: Block, radius: int) -> KLBlockMatrix:
    """p on the window ``|index| <= radius`` and its inverse a.

    Entries a(lam, nu) whose interval [nu, lam] leaves the window are recorded
    as incomplete and raise on lookup.
    """
    positions = window(block, radius)
    weights = [chain_weight(p) for p in positions]
    alg = block.algebra
    inside = set(weights)
    m = KLBlockMatrix(block, radius, positions, weights)
    for lam in weights:
        for nu in weights:
            if alg.preceq(nu, lam):
                v = kl_polynomial(lam, nu)
                if v:
                    m.p[(lam, nu)] = v
    below = {w: [v for v in weights if v != w and alg.preceq(v, w)] for w in weights}
    # static_order lists lower weights first; a(lam, nu) needs a(lam, mu) for mu above nu.
    order = list(TopologicalSorter(below).static_order())[::-1]
    for lam in weights:
        m.a[(lam, lam)] = QPolynomial(1)
        for nu in order:
            if nu == lam or nu not in below[lam]:
                continue
            between = _positions_between(block, lam, nu)
            if any(w not in inside for w in between) or any(
                (lam, w) in m.incomplete for w in between if w != nu
            ):
                m.incomplete.add((lam, nu))
                continue
            total = QPolynomial(0)
            for mu in between:
                if mu == nu:
                    continue
                am, pm = m.a.get((lam, mu)), m.p.get((mu, nu))
                if am and pm:
                    total = total + am * pm
            if total:
                m.a[(lam, nu)] = -total
    return m


def verify_kl_identity(lam: Weight, nu: Weight) -> bool:
    """``sum_mu J_{lam,mu}(q) p_{mu,nu}(q) = delta_{lam,nu}``."""
    total = QPolynomial(0)
    for mu, j in jantzen_polynomials(lam).items():
        total = total + j * kl_polynomial(mu, nu)
    return total == QPolynomial(1 if lam == nu else 0)


def verify_grothendieck_cancellation(lam: Weight, kmax: int) -> bool:
    """``sum_j (-1)^j H_j(V(lam)_{k-j}) = 0`` for 1 <= k <= kmax."""
    layers = loewy_layers(primitive_weight_graph(lam))
    tables = {mu: homology(mu, kmax) for layer in layers for mu in layer}
    for k in range(1, kmax + 1):
        acc: Counter = Counter()
        for j in range(k + 1):
            if k - j >= len(layers):
                continue
            for mu in layers[k - j]:
                for w in tables[mu][j]:
                    acc[w] += (-1) ** j
        if any(acc.values()):
            return False
    return True


def verify_euler(lam: Weight, depth: int) -> bool:
    """Euler characteristic of u^- homology against ch L(lam) on the depth box."""
    alg = lam.algebra
    table = homology(lam, depth)
    lhs = CharacterTruncation(lam, depth, {})
    for k in range(depth + 1):
        for mu in table[k]:
            off = _key(alg, lam, mu)
            if off is None:
                raise AssertionError(f"homology weight {mu} is not below {lam}")
            if sum(off) > depth:
                continue
            lhs = lhs + g0_character(mu, depth - sum(off)).embed(lam, depth).scaled((-1) ** k)
    s = dict(char_simple_truncated(lam, depth).terms)
    th = _root_key(alg, alg.theta)
    shifted = {}
    for k, v in s.items():
        k2 = tuple(a + b for a, b in zip(k, th))
        if sum(k2) <= depth:
            shifted[k2] = shifted.get(k2, 0) - v
    for k, v in shifted.items():
        s[k] = s.get(k, 0) + v
    for b in alg.odd_positive:
        # divide by (1 + e^{-b}): multiply by sum_n (-1)^n e^{-n b}
        bk = _root_key(alg, b)
        out = {}
        for k, v in s.items():
            sign, kk = 1, k
            while sum(kk) <= depth:
                out[kk] = out.get(kk, 0) + sign * v
                kk = tuple(a + c for a, c in zip(kk, bk))
                sign = -sign
        s = out
    rhs = CharacterTruncation(lam, depth, s)
    return lhs == rhs


def cohomology_chain(alg) -> Block:
    """The atp1 chain passing through the trivial weight."""
    if alg.name == "d21a":
        return Block.atp1(alg)
    return Block.atp1(alg, 1 if alg.name == "f4" else 0)


def cohomology_table(lam: Weight, kind: str, degree: int) -> int:
    """``dim H^degree(g, M)`` for M = L(lam) ('simple') or K(lam) ('kac')."""
    if kind not in ("simple", "kac"):
        raise ValueError("kind must be 'simple' or 'kac'")
    if degree not in (1, 2):
        raise ValueError("only degrees 1 and 2 are tabulated")
    if not is_integral_dominant(lam):
        raise DomainError(f"{lam} is not integral dominant (predicate is_integral_dominant)")
    block = cohomology_chain(lam.algebra)
    hits = {
        ("simple", 1): (2,),
        ("kac", 1): (3,),
        ("simple", 2): (1, 3),
        ("kac", 2): (1, 4),
    }[(kind, degree)]
    return int(any(chain_weight(BlockPosition(block, i)) == lam for i in hits))
