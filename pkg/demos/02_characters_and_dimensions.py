"""Characters of finite dimensional simple modules.

The closed character formula writes ch L(lam) as a signed sum over at most two
weights, with one atypical odd root removed from the odd Weyl denominator.
Here it is compared with the character obtained by peeling the Verma module
characters apart along the submodule graph.
"""
from exjantzen import build_algebra
from exjantzen.blocks import Block, BlockPosition, chain_weight
from exjantzen.characters import (
    char_kac,
    char_simple_g0,
    char_simple_truncated,
    dim_kac,
    dim_simple,
    expand_g0,
)

for kind, block in (("d21a", None), ("f4", 1), ("g3", 0)):
    alg = build_algebra(kind)
    chain = Block.atp1(alg) if block is None else Block.atp1(alg, block)
    print(f"{kind}, chain {chain}")
    for i in (1, 2, 3):
        lam = chain_weight(BlockPosition(chain, i))
        dec = char_simple_g0(lam)
        print(f"  L({lam}): dim {dim_simple(lam)}, Kac module dim {dim_kac(lam)}, "
              f"{len(dec.terms)} g0 constituents")

# The adjoint module of D(2,1;a) is L(theta).  Its g0-constituents are the
# pieces of the grading g_-2 + g_-1 + g_0 + g_1 + g_2, with g_0 = gl1+sl2+sl2.
D = build_algebra("d21a", "1/2")
dec = char_simple_g0(D.theta)
print("\nadjoint module of D(2,1;1/2) as a g0-module:")
for mu, c in sorted(dec.terms.items(), key=lambda kv: str(kv[0])):
    print(f"  {c} x L0{mu}")

# Two independent routes to the same truncated character.
lam = chain_weight(BlockPosition(Block.atp1(D), 2))
closed = expand_g0(char_simple_g0(lam), 6)
peeled = char_simple_truncated(lam, 6)
print(f"\nclosed formula and graph peeling agree on the depth-6 box: {closed == peeled}")
print(f"the Kac module K({lam}) has {sum(char_kac(lam, 6).terms.values())} weights (with multiplicity) in that box")
