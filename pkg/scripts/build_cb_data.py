"""Produce the canonical-basis data file for osp(1|4).

Search only: for each weight, keep divided-power monomials whose norm is
pi^e mod v, then complete with small integral combinations until the set is
almost orthonormal.  The library re-validates whatever this writes, so the
file is trusted only after `FileProvider` accepts it.

    python3 scripts/build_cb_data.py [height] > src/coverquant/data/osp_1_4.json
"""
import json
import sys
from itertools import product

from coverquant import halfalg, rootdatum
from coverquant.cbengine import encode_elem, is_almost_orthonormal
from coverquant.coeffring import PiScalar, const, pipow


def dp_monomials(nu):
    out = []

    def rec(rem, last, acc):
        if not any(rem):
            out.append(tuple(acc))
            return
        for i in range(len(rem)):
            if i == last:
                continue
            for a in range(1, rem[i] + 1):
                r = list(rem)
                r[i] -= a
                rec(r, i, acc + [(i, a)])

    rec(list(nu), None, [])
    return out


def evaluate(alg, combo):
    x = alg.zero()
    for dword, c in combo.items():
        x = x + alg.from_dword(dword) * c
    return x


def search(alg, nu):
    """Almost orthonormal set as {monomial dword: coefficient} combinations."""
    one = const(1)
    mons = dp_monomials(nu)
    chosen = []
    for m in mons:
        cand = chosen + [{m: one}]
        if is_almost_orthonormal(alg, [evaluate(alg, c) for c in cand]):
            chosen = cand
    small = [PiScalar.zero(), const(1), const(-1), pipow(1), -pipow(1)]
    for m in mons:
        if len(chosen) == alg.dim(nu):
            return chosen
        base = list(chosen)
        for cs in product(small, repeat=len(base)):
            combo = {m: one}
            for c, g in zip(cs, base):
                if not c.is_zero():
                    for dw, e in g.items():
                        combo[dw] = combo.get(dw, PiScalar.zero()) + c * e
            combo = {dw: e for dw, e in combo.items() if not e.is_zero()}
            if is_almost_orthonormal(alg, [evaluate(alg, c) for c in base + [combo]]):
                chosen.append(combo)
                break
    if len(chosen) == alg.dim(nu):
        return chosen
    raise SystemExit("no almost orthonormal set found in weight %s" % (nu,))


def main():
    height = int(sys.argv[1]) if len(sys.argv) > 1 else 4
    datum = rootdatum.builtin("osp(1|4)")
    alg = halfalg.HalfAlgebra(datum, height)
    elements = []
    for nu in alg.weights_upto(height):
        for combo in search(alg, nu):
            elements.append(encode_elem(combo, nu))
    json.dump({"schema": 1, "datum": datum.name, "height": height, "elements": elements},
              sys.stdout, indent=1, sort_keys=True)
    sys.stdout.write("\n")


if __name__ == "__main__":
    main()
