"""The bilinear form on U-dot for osp(1|2), computed two ways: algebraically,
and as a limit of J-polarizations on N(lam, lam') as both weights grow.

    python3 scripts/golden_forms.py
"""
from coverquant import udot as U
from coverquant.halfalg import HalfAlgebra
from coverquant.rootdatum import builtin

alg = HalfAlgebra(builtin("osp(1|2)"), 30)
ORDER = 12


def show(series):
    plus, minus = series
    fmt = lambda d: " ".join("%+d*v^%d" % (c, e) for e, c in sorted(d.items())) or "0"
    return "eps+: %s | eps-: %s" % (fmt(plus), fmt(minus))


for lam in (-1, 0, 2):
    z = (lam,)
    cases = {
        "F^(2) 1_%d" % lam: U.from_word(alg, [("F", 0, 2)], z),
        "E 1_%d" % lam: U.from_word(alg, [("E", 0, 1)], z),
        "EF 1_%d" % lam: U.from_word(alg, [("E", 0, 1), ("F", 0, 1)], z),
    }
    for name, a in cases.items():
        exact = U.dot_form(a, a)
        limit, k = U.form_limit(a, a, order=ORDER)
        print("(%s, same)" % name)
        print("  exact   ", exact.to_text())
        print("  limit   ", show(limit), "(stable after %d steps)" % k)
        print("  agree below v^%d: %s" % (ORDER, exact.series(ORDER) == limit))
