"""Twistors: build the enhancer for each builtin datum, then read off the
t-exponents by which the twistor scales canonical basis elements.

    python3 scripts/twistor_exponents.py
"""
from coverquant import twistor as T
from coverquant.cbengine import provider_for
from coverquant.halfalg import HalfAlgebra
from coverquant.rootdatum import builtin

for name, height in [("osp(1|2)", 6), ("osp(1|4)", 4)]:
    datum = builtin(name)
    alg = HalfAlgebra(datum, max(height, 6))
    enh = T.build_enhancer(datum)
    print("%s: enhancer matrix %s, axioms ok: %s" % (name, enh.M, not enh.validate()))
    prov = provider_for(alg)
    ells = []
    for nu in alg.weights_upto(height):
        for k, b in enumerate(prov.elements(nu)):
            ells.append("%s:%d" % (prov.label(nu, k), T.ell(alg, b, enh)))
    print("  exponents on the canonical basis of f:", " ".join(ells))

alg = HalfAlgebra(builtin("osp(1|2)"), 8)
print("\nU-dot canonical basis of osp(1|2), twistor exponents by block")
for z in range(-3, 4):
    rows = T.exponent_table(alg, (z,), 2)
    print("  1_%-3d" % z, " ".join("%s<>%s:%s" % (r["b"], r["b2"], r["f"]) for r in rows))
