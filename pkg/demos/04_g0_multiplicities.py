"""g0-multiplicities in parabolic Verma modules.

b(lam, mu) = [V(lam) : L0(mu)] counts g0-highest weight vectors.  It is computed
here two ways: as a signed sum over odd root subsets and powers of theta, and
by peeling g0 characters off the PBW character of V(lam).  Both agree.  Some
of the published small values do not, which the acceptance suite records.
"""
from exjantzen import build_algebra, primitive_weight_graph
from exjantzen.blocks import Block, BlockPosition, chain_weight
from exjantzen.characters import char_verma_truncated, g0_multiplicities_from_character, g0_multiplicity

for kind, x in (("d21a", None), ("f4", 1), ("g3", 0)):
    alg = build_algebra(kind)
    chain = Block.atp1(alg) if x is None else Block.atp1(alg, x)

    def lam(i):
        return chain_weight(BlockPosition(chain, i))

    print(f"{chain}")
    for i, j in ((1, -1), (2, -1), (3, 2)):
        box = alg.depth(lam(j), lam(i))
        peeled = g0_multiplicities_from_character(char_verma_truncated(lam(i), box))
        print(f"  b(lambda^{i}, lambda^{j}) = {g0_multiplicity(lam(i), lam(j))}"
              f"  (peeling: {peeled.get(lam(j), 0)})")
    # every vertex of the graph carries at least one g0-highest weight vector
    g = primitive_weight_graph(lam(3))
    print("  graph of lambda^3:", ", ".join(str(g0_multiplicity(lam(3), mu)) for mu in g.vertices))

# The trivial g0-type inside the adjoint module of D(2,1;a) is the reason
# b(lambda^1, lambda^-1) is not zero: lambda^1 = theta and lambda^-1 = 0.
D = build_algebra("d21a")
print(f"\nD(2,1;a): lambda^1 = {chain_weight(BlockPosition(Block.atp1(D), 1))}, "
      f"lambda^-1 = {chain_weight(BlockPosition(Block.atp1(D), -1))}")
