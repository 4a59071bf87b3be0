"""Atypical chains and the submodule graphs of parabolic Verma modules.

Every integral atypical weight of D(2,1;a), F4 or G3 sits on a chain indexed
by the integers.  The position on the chain alone decides the shape of the
primitive weight graph of V(lam), so the whole structure theory of the
parabolic category reduces to a handful of pictures.
"""
from exjantzen import build_algebra, classify, primitive_weight_graph, loewy_layers
from exjantzen.blocks import Block, BlockPosition, chain_weight

D = build_algebra("d21a", "generic")

# Walk the atp1 chain of D(2,1;a).  Positive indices are integral dominant,
# negative ones are the sigma_0 mirror images.
chain = Block.atp1(D)
print("The atp1 chain of D(2,1;a):")
for i in (3, 2, 1, -1, -2, -3):
    lam = chain_weight(BlockPosition(chain, i))
    print(f"  lambda^{i:<3} = {lam}")

# classify inverts chain_weight.
lam = D.weight(3, 1, 1)
print(f"\n{lam} classifies as {classify(lam)}")

# The graph of lambda^2 has five vertices and three Loewy layers.
g = primitive_weight_graph(lam)
print(f"\nshape {g.shape!r}, {len(g.vertices)} vertices, {len(g.edges)} edges")
for n, layer in enumerate(loewy_layers(g)):
    print(f"  layer {n}: " + ", ".join(str(w) for w in layer))

# Far up the chain the graph is the generic square.
g = primitive_weight_graph(chain_weight(BlockPosition(chain, 5)))
print(f"\nlambda^5: shape {g.shape!r}")
print(g.to_dot())

# A typical weight gives at most one arrow.
t = D.weight(5, 0, 3)
print(f"{t}: shape {primitive_weight_graph(t).shape!r}")
