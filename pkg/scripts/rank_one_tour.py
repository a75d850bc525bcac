"""A walk through osp(1|2): quantum integers, a tensor product module and its
canonical basis, and the canonical basis of U-dot in one block.

    python3 scripts/rank_one_tour.py
"""
from coverquant import cbengine, udot
from coverquant.coeffring import qbinom, qint
from coverquant.halfalg import HalfAlgebra
from coverquant.rootdatum import builtin

datum = builtin("osp(1|2)")
alg = HalfAlgebra(datum, 10)

print("quantum integers (eps+ is the pi = 1 half, eps- the pi = -1 half)")
for n in range(1, 5):
    print("  [%d] = %s" % (n, qint(n).to_text()))
print("  [4 choose 2] =", qbinom(4, 2).to_text())

# N(2, 1) = V(2) (x) omega V(1); its canonical elements are Psi-fixed and
# differ from the standard basis by terms in v Z^pi[v]
print("\ncanonical basis of N(2, 1)")
for e in cbengine.cb_of_N(alg, (2,), (1,)):
    terms = ", ".join("%s: %s" % ((h.b[0][0], h.bp[0][0]), c.to_text())
                      for h, c in sorted(e.coeffs.items()))
    print("  %-6s %-6s %s" % (e.labels[0], e.labels[1], terms))

zeta = (1,)
print("\nU-dot canonical basis in the block 1_%d, height <= 2" % zeta)
for e in cbengine.cb_of_udot(alg, zeta, 2):
    print("  ", udot.to_text(e.vector))
