"""The eight acceptance criteria, each checked exactly over the standard sweep.

The sweep: D(2,1;a) at a in {generic, 1/2, -3, 2}, F4 with x <= 3 and
(a2, a3) in {(2,1), (3,1), (3,2)}, G3 with x <= 3, chain indices |i| <= 6.
Every criterion records one PASS/FAIL line (see acceptance_report).
"""
import random
import time
from fractions import Fraction
from functools import lru_cache

import pytest

from exjantzen import build_algebra
from exjantzen.blocks import BlockPosition, chain_weight, shift_index, sigma0_partner, window
from exjantzen.characters import (
    char_simple_g0,
    char_simple_truncated,
    char_verma_truncated,
    dim_simple,
    expand_g0,
    g0_multiplicity,
)
from exjantzen.klhom import (
    IncompleteWindowError,
    cohomology_chain,
    cohomology_table,
    inverse_kl,
    verify_euler,
    verify_grothendieck_cancellation,
    verify_kl_identity,
)
from exjantzen.verma import _primitive_weight_graph, jantzen_polynomials, primitive_weight_graph
from exjantzen.weights import atypical_roots, is_integral_dominant

from acceptance_report import record
from oracles import expected_edges, sweep_algebras, sweep_positions

RADIUS = 6
WINDOW = 8
SWEEP = list(sweep_positions(RADIUS))
BLOCKS = list(dict.fromkeys(b for b, _ in SWEEP))


def _depth(lam, mu):
    return int(sum(lam.algebra.simple_coeffs(lam - mu)))


# -- 1. structure theorem ------------------------------------------------------------------


def test_criterion_1_structure_sweep():
    _primitive_weight_graph.cache_clear()
    start = time.perf_counter()
    bad = []
    for _, pos in SWEEP:
        lam = chain_weight(pos)
        g = primitive_weight_graph(lam)
        edges = {(chain_weight(a), chain_weight(b)) for a, b in expected_edges(pos)}
        verts = {lam} | {v for e in edges for v in e}
        if set(g.edges) != edges or set(g.vertices) != verts or not g.is_rigid():
            bad.append(str(pos))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 5
    record(1, ok, f"{len(SWEEP)} graphs match the case table and are rigid, {elapsed:.2f} s (target < 5 s)"
           + (f"; mismatches {bad[:5]}" if bad else ""))
    assert not bad
    assert elapsed < 5


# -- 2. b-oracle ---------------------------------------------------------------------------------


def _omega(pos):
    """Candidate g0-highest weights of V(lam) besides lam."""
    i, fam = pos.index, pos.block.family
    if fam == "atp1" and i == 1:
        return [shift_index(pos, -1), shift_index(pos, -2)]
    if fam == "atp2" and i == 0:
        return [BlockPosition(pos.block, -1, "+"), BlockPosition(pos.block, -1, "-")]
    s = sigma0_partner(pos)
    return [shift_index(pos, -1), s, shift_index(s, -1), shift_index(s, 1)]


@lru_cache(maxsize=None)
def _b_oracle():
    lower_bound, equalities = [], []
    for _, pos in SWEEP:
        lam = chain_weight(pos)
        verts = set(primitive_weight_graph(lam).vertices)
        cands = {chain_weight(p) for p in _omega(pos)} | {lam}
        for mu in cands | verts:
            b = g0_multiplicity(lam, mu)
            need = 1 if mu in verts else 0
            # graph vertices must lie among the candidates
            lower_bound.append((str(pos), mu.text(), b, b >= need and mu in cands))
        fam, i = pos.block.family, pos.index
        if fam == "atp1" and i == 1:
            equalities.append((str(pos), "lambda^-1", g0_multiplicity(lam, chain_weight(shift_index(pos, -1))), 0))
        if fam == "atp1" and i == 2:
            equalities.append((str(pos), "lambda^-1", g0_multiplicity(lam, chain_weight(shift_index(pos, -2))), 1))
        if (fam == "atp1" and i >= 2) or (fam == "atp2" and i >= 1):
            equalities.append((str(pos), "lower", g0_multiplicity(lam, chain_weight(shift_index(pos, -1))), 1))
    lb_bad = [t for t in lower_bound if not t[3]]
    eq_bad = [t for t in equalities if t[2] != t[3]]
    record(
        2,
        not lb_bad and not eq_bad,
        f"b >= 1 on graph vertices, b >= 0 on candidates: {len(lower_bound) - len(lb_bad)}/{len(lower_bound)} hold; "
        f"printed equalities: {len(equalities) - len(eq_bad)}/{len(equalities)} hold"
        + (f"; e.g. {eq_bad[0][0]} b({eq_bad[0][1]}) = {eq_bad[0][2]}, printed {eq_bad[0][3]}" if eq_bad else ""),
    )
    return lb_bad, eq_bad


def test_criterion_2_b_lower_bound():
    lb_bad, _ = _b_oracle()
    assert not lb_bad


@pytest.mark.xfail(
    strict=True,
    reason="the printed values of b disagree with [V(lam):L0(mu)] computed two ways; see the decisions ledger",
)
def test_criterion_2_b_equalities():
    _, eq_bad = _b_oracle()
    assert not eq_bad


# -- 3. Jantzen polynomials are the inverse KL polynomials ------------------------------------------


def test_criterion_3_jantzen_is_inverse_kl():
    start = time.perf_counter()
    checked = skipped = 0
    bad = []
    for block in BLOCKS:
        m = inverse_kl(block, WINDOW)
        nus = [chain_weight(p) for p in window(block, WINDOW)]
        for pos in window(block, RADIUS):
            lam = chain_weight(pos)
            J = jantzen_polynomials(lam)
            for nu in nus:
                if not verify_kl_identity(lam, nu):
                    bad.append((str(pos), nu.text(), "identity"))
                try:
                    a = m.a_entry(lam, nu)
                except IncompleteWindowError:
                    skipped += 1
                    continue
                checked += 1
                if a != J.get(nu, 0):
                    bad.append((str(pos), nu.text(), "entry"))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 10
    record(3, ok, f"KL identity and J = a on {checked} pairs ({skipped} pairs outside the window skipped), "
           f"{elapsed:.2f} s (target < 10 s)" + (f"; failures {bad[:3]}" if bad else ""))
    assert not bad
    assert elapsed < 10


# -- 4. Grothendieck cancellation ------------------------------------------------------------------------


def test_criterion_4_grothendieck():
    bad = [str(pos) for _, pos in SWEEP if not verify_grothendieck_cancellation(chain_weight(pos), 6)]
    record(4, not bad, f"cancellation up to k = 6 on {len(SWEEP)} weights" + (f"; failures {bad[:5]}" if bad else ""))
    assert not bad


# -- 5. character consistency ----------------------------------------------------------------------------------


def test_criterion_5_characters():
    depth = 10
    bad = []
    n_dom = 0
    for _, pos in SWEEP:
        lam = chain_weight(pos)
        verma = char_verma_truncated(lam, depth, "pbw")
        if verma != char_verma_truncated(lam, depth, "formula"):
            bad.append((str(pos), "routes"))
        total = None
        for mu in primitive_weight_graph(lam).vertices:
            d = _depth(lam, mu)
            if d > depth:
                continue
            part = char_simple_truncated(mu, depth - d).embed(lam, depth)
            total = part if total is None else total + part
        if total != verma:
            bad.append((str(pos), "additivity"))
        if is_integral_dominant(lam) and atypical_roots(lam):
            n_dom += 1
            if expand_g0(char_simple_g0(lam), depth) != char_simple_truncated(lam, depth):
                bad.append((str(pos), "simple"))
    record(5, not bad, f"depth-{depth} boxes on {len(SWEEP)} weights ({n_dom} in P+ checked against the closed formula)"
           + (f"; failures {bad[:5]}" if bad else ""))
    assert not bad


# -- 6. dimension formula ------------------------------------------------------------------------------


def test_criterion_6_dimensions():
    bad = []
    dims = {}
    for _, pos in SWEEP:
        lam = chain_weight(pos)
        if not is_integral_dominant(lam):
            continue
        d = dim_simple(lam)
        if not (isinstance(d, int) and d > 0 and d == char_simple_g0(lam).dimension()):
            bad.append(str(pos))
        if lam.algebra.name == "d21a" and pos.block.family == "atp1":
            dims.setdefault((pos.index, lam.text()), set()).add(d)
    drift = [k for k, v in dims.items() if len(v) != 1]
    ok = not bad and not drift
    record(6, ok, f"closed formula = decomposition total on {sum(1 for _, p in SWEEP if is_integral_dominant(chain_weight(p)))} "
           f"weights in P+; D(2,1;a) dimensions independent of a" + (f"; failures {bad[:5]} {drift[:3]}" if not ok else ""))
    assert not bad and not drift


# -- 7. homology and KL consistency ----------------------------------------------------------------------------


def test_criterion_7_euler_and_inverse():
    bad = [str(pos) for _, pos in SWEEP if not verify_euler(chain_weight(pos), 8)]
    inv = [str(b) for b in BLOCKS if not inverse_kl(b, WINDOW).check_inverse()]
    record(7, not bad and not inv, f"Euler characteristic at depth 8 on {len(SWEEP)} weights; p a = 1 on {len(BLOCKS)} windows"
           + (f"; failures {bad[:5]} {inv[:3]}" if bad or inv else ""))
    assert not bad and not inv


# -- 8. cohomology table -----------------------------------------------------------------------------------------


TABLE = {("simple", 1): {2}, ("kac", 1): {3}, ("simple", 2): {1, 3}, ("kac", 2): {1, 4}}


def _random_dominant(alg, rng, avoid):
    found = []
    while len(found) < 20:
        if alg.name == "f4":
            half = Fraction(rng.randint(0, 1), 2)
            d = Fraction(rng.randint(-12, 12), 2)
        else:
            half, d = 0, rng.randint(-8, 8)
        w = alg.weight(d, *(rng.randint(-8, 8) + half for _ in range(alg.n_eps)))
        if is_integral_dominant(w) and w not in avoid and w not in found:
            found.append(w)
    return found


def test_criterion_8_cohomology():
    rng = random.Random(20)
    bad = []
    n = 0
    for kind in ("d21a", "f4", "g3"):
        alg = build_algebra(kind, "1/2" if kind == "d21a" else None)
        chain = cohomology_chain(alg)
        if chain_weight(BlockPosition(chain, -1)) != alg.zero():
            bad.append((kind, "Lambda^-1 is not 0"))
        lams = {i: chain_weight(BlockPosition(chain, i)) for i in (1, 2, 3, 4)}
        for (mod, deg), hits in TABLE.items():
            for i, w in lams.items():
                n += 1
                if cohomology_table(w, mod, deg) != (1 if i in hits else 0):
                    bad.append((kind, mod, deg, i))
        for w in _random_dominant(alg, rng, set(lams.values())):
            for mod, deg in TABLE:
                n += 1
                if cohomology_table(w, mod, deg) != 0:
                    bad.append((kind, mod, deg, w.text()))
    record(8, not bad, f"{n} table lookups (Lambda^1..Lambda^4 and 20 random weights in P+ per algebra)"
           + (f"; failures {bad[:5]}" if bad else ""))
    assert not bad


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q"]))
