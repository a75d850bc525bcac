"""The modified form U-dot.

Elements are sparse sums of monomials stored with the idempotent on the
right: in 'mp' orientation a key (x, y, zeta) means x^- y^+ 1_zeta, in 'pm'
orientation it means x^+ y^- 1_zeta.  x and y are basis dwords of f.
"""
from .coeffring import PiScalar, pipow, qfact, vpow
from .halfalg import plain
from .repmod import HWModule, OmegaTwist, TensorModule, vadd

ONE = PiScalar.one()


def _wadd(a, b, c=1):
    return tuple(x + c * y for x, y in zip(a, b))


class UDot:
    __slots__ = ("alg", "terms", "orient")

    def __init__(self, alg, terms=None, orient="mp"):
        self.alg = alg
        self.orient = orient
        self.terms = {k: c for k, c in (terms or {}).items() if not c.is_zero()}

    # bookkeeping
    def left_weight(self, key):
        x, y, z = key
        R = self.alg.datum.root
        wx, wy = R(self.alg.weight(x)), R(self.alg.weight(y))
        if self.orient == "mp":
            return _wadd(_wadd(z, wy), wx, -1)
        return _wadd(_wadd(z, wx), wy, -1)

    def is_zero(self):
        return not self.terms

    def __add__(self, o):
        o = o if o.orient == self.orient else convert(o, self.orient)
        t = dict(self.terms)
        vadd(t, o.terms)
        return UDot(self.alg, t, self.orient)

    def __sub__(self, o):
        return self + o.scale(-ONE)

    def scale(self, c):
        return UDot(self.alg, {k: v * c for k, v in self.terms.items()}, self.orient)

    def __mul__(self, o):
        if isinstance(o, UDot):
            return multiply(self, o)
        return self.scale(o)

    def __eq__(self, o):
        if not isinstance(o, UDot):
            return NotImplemented
        if o.orient != self.orient:
            o = convert(o, self.orient)
        return (self - o).is_zero()

    def __repr__(self):
        return to_text(self)


def idem(alg, zeta):
    return UDot(alg, {((), (), tuple(zeta)): ONE})


def monomial(alg, x, y, zeta, orient="mp", coef=ONE):
    return UDot(alg, {(tuple(x), tuple(y), tuple(zeta)): coef}, orient)


def to_text(a):
    alg = a.alg
    parts = []
    for (x, y, z), c in sorted(a.terms.items(), key=lambda kv: repr(kv[0])):
        s1, s2 = ("-", "+") if a.orient == "mp" else ("+", "-")
        m = ""
        if x:
            m += "(%s)%s" % (alg.dword_str(x), s1)
        if y:
            m += "(%s)%s" % (alg.dword_str(y), s2)
        m += "1_%s" % (list(z),)
        parts.append("[%s] %s" % (c.to_text(), m))
    return " + ".join(parts) if parts else "0"


# left multiplication by generators -------------------------------------------

def _delta(datum, i):
    d = datum.d[i]
    return pipow(d) * vpow(1, d) - vpow(-1, d)


def _lmul_E_mp(alg, i, key):
    """E_i x^- y^+ 1_z in mp orientation."""
    datum = alg.datum
    x, y, z = key
    out = {}
    th = alg.theta(i)
    nux = alg.weight(x)
    px = datum.par(nux)
    new_y = th * alg.basis_elem(y)
    s = pipow(px * datum.parity[i])
    for b, c in new_y.terms.items():
        vadd(out, {(x, b, z): c * s})
    if nux[i]:
        d = datum.d[i]
        dinv = _delta(datum, i).inverse()
        wy = _wadd(z, datum.root(alg.weight(y)))
        e1 = datum.lam_i(i, wy)
        c1 = pipow(d * (px - datum.parity[i])) * pipow(d * e1) * vpow(e1, d) * dinv
        xe = alg.basis_elem(x)
        for b, c in alg.diff_right(i, xe).terms.items():
            vadd(out, {(b, y, z): c * c1})
        low = _wadd(wy, datum.root(nux), -1)
        e2 = datum.lam_i(i, low) + datum.cartan.a(i, i)
        c2 = -vpow(-e2, d) * dinv
        for b, c in alg.diff_left(i, xe).terms.items():
            vadd(out, {(b, y, z): c * c2})
    return out


def _lmul_F_pm(alg, i, key):
    """F_i x^+ y^- 1_z in pm orientation."""
    datum = alg.datum
    x, y, z = key
    out = {}
    nux = alg.weight(x)
    px = datum.par(nux)
    new_y = alg.theta(i) * alg.basis_elem(y)
    s = pipow(px * datum.parity[i])
    for b, c in new_y.terms.items():
        vadd(out, {(x, b, z): c * s})
    if nux[i]:
        d = datum.d[i]
        pre = pipow(d) * _delta(datum, i).inverse()
        wy = _wadd(z, datum.root(alg.weight(y)), -1)
        e1 = datum.lam_i(i, wy)
        c1 = pre * pipow(d * (px - datum.parity[i])) * vpow(-e1, d)
        xe = alg.basis_elem(x)
        for b, c in alg.diff_right(i, xe).terms.items():
            vadd(out, {(b, y, z): c * c1})
        e2 = datum.lam_i(i, _wadd(wy, datum.root(nux))) - datum.cartan.a(i, i)
        c2 = -pre * pipow(d * e2) * vpow(e2, d)
        for b, c in alg.diff_left(i, xe).terms.items():
            vadd(out, {(b, y, z): c * c2})
    return out


def _lmul_simple(alg, i, key, orient):
    """F_i in mp or E_i in pm: plain multiplication of the left f-factor."""
    x, y, z = key
    return {(b, y, z): c for b, c in (alg.theta(i) * alg.basis_elem(x)).terms.items()}


def lmul_gen(g, i, a):
    """Left multiplication of a U-dot element by E_i or F_i."""
    alg = a.alg
    cache = alg.__dict__.setdefault("_udot_lmul", {})
    out = {}
    for key, c in a.terms.items():
        ck = (g, i, key, a.orient)
        r = cache.get(ck)
        if r is None:
            if a.orient == "mp":
                r = _lmul_E_mp(alg, i, key) if g == "E" else _lmul_simple(alg, i, key, "mp")
            else:
                r = _lmul_F_pm(alg, i, key) if g == "F" else _lmul_simple(alg, i, key, "pm")
            cache[ck] = r
        vadd(out, r, c)
    return UDot(alg, out, a.orient)


def lmul_cartan(kind, mu, a):
    """K_mu or J_mu on the left, resolved against the left weight."""
    datum = a.alg.datum
    out = {}
    for key, c in a.terms.items():
        e = datum.pair(mu, a.left_weight(key))
        out[key] = c * (pipow(e) if kind == "J" else vpow(e))
    return UDot(a.alg, out, a.orient)


def lmul_word(word, a):
    """Word of letters ('E'|'F', i, n) or ('K'|'J', mu), applied right to left."""
    for letter in reversed(word):
        if letter[0] in "EF":
            _, i, n = letter
            for _ in range(n):
                a = lmul_gen(letter[0], i, a)
            if n > 1:
                a = a.scale(qfact(n, a.alg.datum.d[i]).inverse())
        else:
            a = lmul_cartan(letter[0], letter[1], a)
    return a


def lmul_f(gen, x, a):
    """x^+ (gen 'E') or x^- (gen 'F') times a, for an FElem x."""
    alg = a.alg
    out = UDot(alg, {}, a.orient)
    for b, c in x.terms.items():
        t = a
        for i in reversed(plain(b)):
            t = lmul_gen(gen, i, t)
        out = out + t.scale(c * alg.dscale(b).inverse())
    return out


def convert(a, orient):
    if a.orient == orient:
        return a
    alg = a.alg
    out = UDot(alg, {}, orient)
    for (x, y, z), c in a.terms.items():
        # x^- y^+ 1_z -> y^+ 1_z in the other orientation, then multiply by x^- (and dually)
        start = UDot(alg, {(y, (), z): ONE}, orient)
        if orient == "pm":
            t = lmul_f("F", alg.basis_elem(x), start)
        else:
            t = lmul_f("E", alg.basis_elem(x), start)
        out = out + t.scale(c)
    return out


def from_word(alg, word, zeta, orient="mp"):
    """u 1_zeta for a U-word u."""
    return lmul_word(word, UDot(alg, {((), (), tuple(zeta)): ONE}, orient))


def multiply(a, b):
    """Product in U-dot: x y^+ 1_z * b = x y^+ (1_z b)."""
    alg = a.alg
    b = convert(b, "mp")
    out = UDot(alg, {}, "mp")
    am = convert(a, "mp")
    for (x, y, z), c in am.terms.items():
        part = UDot(alg, {k: v for k, v in b.terms.items() if b.left_weight(k) == z}, "mp")
        if part.is_zero():
            continue
        part = lmul_f("E", alg.basis_elem(y), part)
        part = lmul_f("F", alg.basis_elem(x), part)
        out = out + part.scale(c)
    return out


# automorphisms ----------------------------------------------------------------

def auto_udot(kind, a):
    alg = a.alg
    datum = alg.datum
    a = convert(a, "mp")
    if kind == "bar":
        out = UDot(alg, {}, "mp")
        for (x, y, z), c in a.terms.items():
            xb = alg.bar_f(alg.basis_elem(x))
            yb = alg.bar_f(alg.basis_elem(y))
            for bx, cx in xb.terms.items():
                for by, cy in yb.terms.items():
                    out = out + monomial(alg, bx, by, z, "mp", c.bar() * cx * cy)
        return out
    if kind == "dagger":
        out = UDot(alg, {}, "mp")
        for (x, y, z), c in a.terms.items():
            mu = alg.weight(y)
            s = pipow(datum.pi_exp(mu) + datum.pair_tilde(mu, z))
            xd = alg.dagger_f(alg.basis_elem(x))
            yd = alg.dagger_f(alg.basis_elem(y))
            for bx, cx in xd.terms.items():
                for by, cy in yd.terms.items():
                    out = out + monomial(alg, bx, by, z, "mp", c.dagger() * cx * cy * s)
        return out
    out = UDot(alg, {}, "pm")
    if kind == "omega":
        # omega(x^- y^+ 1_z) = pi_nu pi^{<nu~, z>} x^+ y^- 1_{-z}
        for (x, y, z), c in a.terms.items():
            nu = alg.weight(x)
            s = pipow(datum.pi_exp(nu) + datum.pair_tilde(nu, z))
            out = out + monomial(alg, x, y, tuple(-t for t in z), "pm", c * s)
        return convert(out, "mp")
    if kind == "omega_inv":
        # omega^-1(x^- y^+ 1_z) = pi_mu pi^{<mu~, z>} x^+ y^- 1_{-z}, mu = |y|
        for (x, y, z), c in a.terms.items():
            mu = alg.weight(y)
            s = pipow(datum.pi_exp(mu) + datum.pair_tilde(mu, z))
            out = out + monomial(alg, x, y, tuple(-t for t in z), "pm", c * s)
        return convert(out, "mp")
    if kind == "rho":
        # rho(x^- y^+ 1_z) = pi_mu pi^{<mu~, z>} sigma(y)^+ sigma(x)^- 1_{-z-|y|'+|x|'}
        R = datum.root
        for (x, y, z), c in a.terms.items():
            mu = alg.weight(y)
            s = pipow(datum.pi_exp(mu) + datum.pair_tilde(mu, z))
            zz = _wadd(_wadd(tuple(-t for t in z), R(mu), -1), R(alg.weight(x)))
            sy = alg.sigma(alg.basis_elem(y))
            sx = alg.sigma(alg.basis_elem(x))
            for by, cy in sy.terms.items():
                for bx, cx in sx.terms.items():
                    out = out + monomial(alg, by, bx, zz, "pm", c * s * cx * cy)
        return convert(out, "mp")
    raise ValueError("unknown automorphism %r" % kind)


# modules -----------------------------------------------------------------------

def act_on_tensor(a, N, vec, s=3):
    """a acting on a vector of a tensor module through Delta_s."""
    a = convert(a, "mp")
    out = {}
    for (x, y, z), c in a.terms.items():
        part = {k: e for k, e in vec.items() if N.wt(k) == tuple(z)}
        if not part:
            continue
        part = N.act_felem(s, "E", a.alg.basis_elem(y), part)
        if part:
            part = N.act_felem(s, "F", a.alg.basis_elem(x), part)
        vadd(out, part, c)
    return out


def act_on_module(a, M, vec):
    a = convert(a, "mp")
    out = {}
    for (x, y, z), c in a.terms.items():
        part = {k: e for k, e in vec.items() if M.wt(k[0]) == tuple(z)}
        if not part:
            continue
        part = M.act_felem("E", a.alg.basis_elem(y), part)
        if part:
            part = M.act_felem("F", a.alg.basis_elem(x), part)
        vadd(out, part, c)
    return out


def family_base(N):
    z = N.datum.zero()
    return {((z, 0), (z, 0)): ONE}


def act_on_family(a, N, s=3):
    """a (eta_lam (x) xi_{-lam'}) in N(lam, lam')."""
    return act_on_tensor(a, N, family_base(N), s)


def eth(a, lam, lamp):
    """u -> u(1 (x) 1) in M(lam) (x) omega M(lam')."""
    alg = a.alg
    N = TensorModule(HWModule(alg, lam, verma=True), OmegaTwist(HWModule(alg, lamp, verma=True)))
    return act_on_family(a, N)


# bilinear forms ----------------------------------------------------------------

def _tau1_word(alg, dword):
    """tau_1(x^+) for a basis dword x, as a left-multiplication word applied
    to the left operand (letters in application order, first applied first)."""
    return plain(dword)


def _lmul_tau1_E(a, i):
    """tau_1(E_i) a = v_i^{-1} K~_{-i} F_i a."""
    datum = a.alg.datum
    d = datum.d[i]
    b = lmul_gen("F", i, a)
    mu = tuple(-d * t for t in datum.embed_Y[i])
    return lmul_cartan("K", mu, b).scale(vpow(-1, d))


def _tau1_plus(x, a):
    """tau_1(x^+) a for a basis dword x (tau_1 is an anti-automorphism)."""
    for i in plain(x):
        a = _lmul_tau1_E(a, i)
    return a.scale(a.alg.dscale(x).inverse()) if x else a


def dot_form(a, b):
    """The symmetric form on U-dot with (u x, y) = (x, tau_1(u) y) and
    (x^- 1_l, x'^- 1_l) = (x, x')."""
    alg = a.alg
    ap = convert(a, "pm")
    bm = convert(b, "mp")
    total = PiScalar.zero()
    for (z1, w1, zeta), c in ap.terms.items():
        lw = ap.left_weight((z1, w1, zeta))
        lw_base = _wadd(zeta, alg.datum.root(alg.weight(w1)), -1)
        part = UDot(alg, {k: e for k, e in bm.terms.items() if k[2] == zeta}, "mp")
        if part.is_zero():
            continue
        part = UDot(alg, {k: e for k, e in part.terms.items() if part.left_weight(k) == lw}, "mp")
        cpart = convert(_tau1_plus(z1, part), "pm")
        for (z2, w2, zeta2), e in cpart.terms.items():
            if cpart.left_weight((z2, w2, zeta2)) != lw_base:
                continue
            # (w1^- 1_zeta, z2^+ w2^- 1_zeta) = (w2^- 1_zeta, tau_1(z2^+) w1^- 1_zeta)
            m = _tau1_plus(z2, UDot(alg, {(w1, (), zeta): ONE}, "mp"))
            for (x3, y3, _), e3 in m.terms.items():
                if y3:
                    raise ArithmeticError("tau_1 image left the minus part")
                total = total + c * e * e3 * alg.form_f(alg.basis_elem(w2), alg.basis_elem(x3))
    return total


def dot_form_prime(a, b):
    """(x, y)' = bar((bar(x)^dagger, bar(y)^dagger))^dagger."""
    ad = auto_udot("dagger", auto_udot("bar", a))
    bd = auto_udot("dagger", auto_udot("bar", b))
    return dot_form(ad, bd).bar().dagger()


def gram(alg, zeta, height, form="std"):
    """Gram matrix of the monomials x^- y^+ 1_zeta with ht x + ht y <= height."""
    keys = []
    for nu in alg.weights_upto(height):
        for mu in alg.weights_upto(height - sum(nu)):
            for x in alg.component(nu).basis:
                for y in alg.component(mu).basis:
                    keys.append((x, y, tuple(zeta)))
    elems = [UDot(alg, {k: ONE}) for k in keys]
    f = dot_form if form == "std" else dot_form_prime
    M = [[f(p, q) for q in elems] for p in elems]
    return keys, M


def right_weight(a):
    zetas = {k[2] for k in a.terms}
    if len(zetas) != 1:
        raise ValueError("element does not lie in a single U 1_zeta")
    return zetas.pop()


def default_start(alg, zeta, order):
    """(lam0, lam0') with lam0 - lam0' = zeta and <i, .> >= order // 2 on both.

    The J-polarization agrees with the limit roughly below v^{2<i, lam'>},
    so starting this high lets successive values agree to v^order at once."""
    datum = alg.datum
    m = order // 2 + 1
    lamp = tuple(m * x for x in datum.rho_hat())
    low = min(datum.lam_i(i, zeta) for i in range(datum.rank))
    if low < 0:
        lamp = _wadd(lamp, datum.rho_hat(), -low)
    return _wadd(lamp, zeta), lamp


def form_limit(a, b, lam0=None, lamp0=None, order=20, kmax=6, rho=None):
    """(a(eta (x) xi), b(eta (x) xi))_{lam, lam'} along lam = lam0 + k rho.

    Returns (value as a pair of truncated series below v^order, k) once the
    values at k and k + 1 agree to that order; raises if that does not
    happen by kmax."""
    from .repmod import jpolarization, N_module
    alg = a.alg
    datum = alg.datum
    if lam0 is None:
        lam0, lamp0 = default_start(alg, right_weight(a), order)
    rho = rho or datum.rho_hat()
    prev = None
    for k in range(kmax + 1):
        lam = _wadd(lam0, rho, k)
        lamp = _wadd(lamp0, rho, k)
        N = N_module(alg, lam, lamp)
        va = act_on_family(a, N)
        vb = act_on_family(b, N)
        val = jpolarization(N, va, vb).series(order)
        if prev is not None and val == prev:
            return val, k - 1
        prev = val
    raise ArithmeticError("form_limit did not stabilize by k = %d" % kmax)
