"""Primitive weight graphs of parabolic Verma modules and their Loewy layers.

The graph is produced by case dispatch on typicality, integral dominance and
the chain position of the highest weight.  All composition factors occur with
multiplicity one, so the Jantzen polynomials are monomials.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from graphlib import TopologicalSorter

from .blocks import (
    BlockPosition,
    chain_weight,
    classify,
    down_move,
    shift_index,
    sigma0_partner,
)
from .qpoly import QPolynomial
from .root_data import Weight
from .weights import (
    atypical_roots,
    is_g0_dominant,
    is_g_integral,
    is_integral_dominant,
)

__all__ = [
    "PrimitiveGraph",
    "DomainError",
    "sigma0_dot",
    "lower_neighbour",
    "primitive_weight_graph",
    "loewy_layers",
    "jantzen_polynomials",
    "composition_factors",
    "kac_factors",
]


class DomainError(ValueError):
    """An operation was called outside the domain where it is defined."""


def sigma0_dot(lam: Weight) -> Weight:
    """The dot action of sigma_0: ``(c - l0 | l1, ...)``."""
    alg = lam.algebra
    return alg.dot(alg.sigma0, lam)


def lower_neighbour(lam: Weight) -> Weight:
    """``lam`` moved down along its unique atypical root."""
    roots = atypical_roots(lam)
    if len(roots) != 1:
        raise DomainError(f"{lam} has {len(roots)} atypical roots, expected one")
    return down_move(lam, roots[0])


@dataclass(frozen=True)
class PrimitiveGraph:
    source: Weight
    vertices: tuple[Weight, ...]
    edges: tuple[tuple[Weight, Weight], ...]
    shape: str
    labels: dict = field(default_factory=dict, compare=False)

    def _longest(self, edges) -> dict[Weight, int]:
        preds: dict[Weight, list[Weight]] = {v: [] for v in self.vertices}
        for a, b in edges:
            preds[b].append(a)
        level: dict[Weight, int] = {}
        for v in TopologicalSorter(preds).static_order():
            level[v] = max((level[u] + 1 for u in preds[v]), default=0)
        return level

    @cached_property
    def levels(self) -> dict[Weight, int]:
        """Longest path length from the source."""
        lv = self._longest(self.edges)
        roots = [v for v in self.vertices if lv[v] == 0]
        if roots != [self.source]:
            raise AssertionError("the source must be the unique vertex of level 0")
        return lv

    @cached_property
    def depth_below(self) -> dict[Weight, int]:
        """Longest path length from each vertex to a sink."""
        return self._longest([(b, a) for a, b in self.edges])

    @property
    def length(self) -> int:
        return max(self.levels.values())

    def is_rigid(self) -> bool:
        """Top-down and bottom-up layerings coincide."""
        n = self.length
        return all(self.levels[v] + self.depth_below[v] == n for v in self.vertices)

    def label(self, v: Weight) -> str:
        return self.labels.get(v, v.text())

    def to_json(self) -> dict:
        return {
            "algebra": self.source.algebra.key,
            "source": self.source.text(),
            "shape": self.shape,
            "vertices": [
                {"weight": v.text(), "level": self.levels[v], "label": self.labels.get(v)}
                for v in self.vertices
            ],
            "edges": [[a.text(), b.text()] for a, b in self.edges],
        }

    def to_dot(self) -> str:
        lines = ["digraph primitive {", "\trankdir=TB;"]
        by_level: dict[int, list[Weight]] = {}
        for v in self.vertices:
            by_level.setdefault(self.levels[v], []).append(v)
        ids = {v: f"v{i}" for i, v in enumerate(self.vertices)}
        for lvl in sorted(by_level):
            lines.append("\t{ rank = same;")
            for v in by_level[lvl]:
                text = v.text()
                extra = self.labels.get(v)
                label = f"{text}\\n{extra}" if extra else text
                lines.append(f'\t\t{ids[v]} [label="{label}"];')
            lines.append("\t}")
        for a, b in self.edges:
            lines.append(f"\t{ids[a]} -> {ids[b]};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _graph(source, edges, shape, labels=None, extra=()) -> PrimitiveGraph:
    verts = [source]
    for a, b in edges:
        for v in (a, b):
            if v not in verts:
                verts.append(v)
    for v in extra:
        if v not in verts:
            verts.append(v)
    return PrimitiveGraph(source, tuple(verts), tuple(edges), shape, dict(labels or {}))


def primitive_weight_graph(lam: Weight) -> PrimitiveGraph:
    """Skeleton of the primitive weight graph of the parabolic Verma module V(lam)."""
    return _primitive_weight_graph(lam)


@lru_cache(maxsize=None)
def _primitive_weight_graph(lam: Weight) -> PrimitiveGraph:
    if not is_g0_dominant(lam):
        raise DomainError(f"{lam} is not g0-dominant (predicate is_g0_dominant)")
    roots = atypical_roots(lam)
    if not roots:
        if is_integral_dominant(lam):
            return _graph(lam, [(lam, sigma0_dot(lam))], "typical")
        return _graph(lam, [], "irreducible")
    if not is_g_integral(lam):
        return _graph(lam, [(lam, lower_neighbour(lam))], "tail")

    pos = classify(lam)
    if not isinstance(pos, BlockPosition):
        raise AssertionError(f"atypical g0-dominant weight {lam} did not classify")

    def at(p: BlockPosition) -> Weight:
        return chain_weight(p)

    labels = {}

    def name(p: BlockPosition) -> Weight:
        w = at(p)
        labels[w] = p.label()
        return w

    name(pos)
    fam, i = pos.family, pos.index
    if i < 0 or not is_integral_dominant(lam):
        down = lower_neighbour(lam)
        expected = name(shift_index(pos, -1))
        if down != expected:
            raise AssertionError("down move disagrees with the chain")
        return _graph(lam, [(lam, down)], "tail", labels)
    if fam == "atp2" and i == 0:
        block = pos.block
        lp = name(BlockPosition(block, -1, "+"))
        lm = name(BlockPosition(block, -1, "-"))
        return _graph(lam, [(lam, lp), (lam, lm)], "atp2-zero", labels)
    if fam == "atp1" and i == 1:
        return _graph(lam, [(lam, name(BlockPosition(pos.block, -2)))], "atp1-one", labels)
    if fam == "atp1" and i == 2:
        b = pos.block
        l1, lm1, lm2, lm3 = (name(BlockPosition(b, j)) for j in (1, -1, -2, -3))
        edges = [(lam, l1), (lam, lm1), (lam, lm3), (l1, lm2), (lm1, lm2), (lm3, lm2)]
        return _graph(lam, edges, "atp1-two", labels)
    # lam^i with i >= 3 in atp1, or i >= 1 in atp2
    down = name(shift_index(pos, -1))
    if down != lower_neighbour(lam):
        raise AssertionError("down move disagrees with the chain")
    mirror_pos = sigma0_partner(pos)
    mirror = name(mirror_pos)
    if mirror != sigma0_dot(lam):
        raise AssertionError("sigma_0 partner disagrees with the dot action")
    mirror_down = name(shift_index(mirror_pos, -1))
    edges = [(lam, down), (lam, mirror_down), (down, mirror), (mirror_down, mirror)]
    return _graph(lam, edges, "generic", labels)


def loewy_layers(g: PrimitiveGraph) -> list[list[Weight]]:
    """Radical layers: layer k holds the vertices at level k."""
    out: list[list[Weight]] = [[] for _ in range(g.length + 1)]
    for v in g.vertices:
        out[g.levels[v]].append(v)
    return out


def jantzen_polynomials(lam: Weight) -> dict[Weight, QPolynomial]:
    """``J_{lam,mu}(q) = q^level(mu)`` for each composition factor mu of V(lam)."""
    g = primitive_weight_graph(lam)
    return {v: QPolynomial.monomial(g.levels[v]) for v in g.vertices}


def composition_factors(lam: Weight) -> list[Weight]:
    return list(primitive_weight_graph(lam).vertices)


def kac_factors(lam: Weight) -> list[Weight]:
    """Composition factors of the Kac module K(lam), each of multiplicity one."""
    if not is_integral_dominant(lam):
        raise DomainError(f"{lam} is not integral dominant (predicate is_integral_dominant)")
    return [v for v in composition_factors(lam) if is_integral_dominant(v)]


def graph_json(g: PrimitiveGraph) -> str:
    return json.dumps(g.to_json(), indent=2)
