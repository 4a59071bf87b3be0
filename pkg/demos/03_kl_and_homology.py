"""Homology, Kazhdan-Lusztig polynomials and the Jantzen filtration.

The u^- homology of L(lam) is known in every degree, which gives the KL
polynomials p.  Their inverse a is computed on a finite window of the chain
and compared with the Jantzen polynomials read off the graphs.
"""
from exjantzen import build_algebra, homology, inverse_kl, jantzen_polynomials
from exjantzen.blocks import Block, BlockPosition, chain_weight
from exjantzen.klhom import cohomology_chain, cohomology_table, verify_euler, verify_kl_identity

D = build_algebra("d21a")
chain = Block.atp1(D)


def lam(i):
    return chain_weight(BlockPosition(chain, i))


print(f"homology of L(lambda^3) = L{lam(3)}:")
t = homology(lam(3), 4)
for k in range(5):
    print(f"  H_{k}: " + ", ".join(str(w) for w in t[k]))
print(f"Euler characteristic matches ch L on the depth-8 box: {verify_euler(lam(3), 8)}")

m = inverse_kl(chain, 6)
print(f"\nthe window of radius 6 has {len(m.weights)} weights; p times a is the identity: {m.check_inverse()}")
J = jantzen_polynomials(lam(2))
print("row of lambda^2:")
for mu in m.weights:
    a = m.a_entry(lam(2), mu)
    if a:
        print(f"  a = {a!s:<6} J = {J.get(mu, 0)!s:<6} at {mu}")
print(f"sum_mu J p = delta on the whole window: "
      f"{all(verify_kl_identity(lam(2), nu) for nu in m.weights)}")

# The g-cohomology of simple and Kac modules is concentrated on four weights.
print("\ndim H^1 and H^2 with coefficients in L(Lambda^i):")
C = cohomology_chain(D)
for i in (1, 2, 3, 4):
    w = chain_weight(BlockPosition(C, i))
    print(f"  Lambda^{i} = {w}: H^1 {cohomology_table(w, 'simple', 1)}, H^2 {cohomology_table(w, 'simple', 2)}")
