"""Quasi-R-matrices for osp(1|4): solve Theta_3 from the intertwining
equations, compare with the dual-basis construction, then check unitarity
for all four coproducts.

    python3 scripts/theta_unitarity.py [height]
"""
import sys
import time

from coverquant import quasir
from coverquant.halfalg import HalfAlgebra
from coverquant.rootdatum import builtin

H = int(sys.argv[1]) if len(sys.argv) > 1 else 4
alg = HalfAlgebra(builtin("osp(1|4)"), H + 1)

t0 = time.time()
theta3 = quasir.compute_theta(alg, 3, H)
print("Theta_3 up to height %d solved in %.1fs" % (H, time.time() - t0))
print("  matches dual bases of the form on f:",
      theta3.blocks == quasir.dual_basis_theta3(alg, H).blocks)

for nu in [(1, 0), (0, 1), (1, 1)]:
    print("  Theta_3 at %s:" % (nu,))
    for c, x, y in theta3.element(nu):
        print("    %s  %s (x) %s" % (c.to_text(), alg.dword_str(x), alg.dword_str(y)))

for s in (1, 2, 3, 4):
    rep = quasir.check_unitarity(quasir.compute_theta(alg, s, H))
    print("Theta_%d unitary: %s" % (s, rep["pass"]))

# a wrong coefficient shows up in every weight that sees it
bad = theta3.corrupted((1, 1))
print("corrupted Theta_3 fails at", quasir.check_unitarity(bad)["failures"][:4], "...")
