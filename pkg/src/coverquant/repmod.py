"""Weight modules: Verma M(lam), simple V(lam), the omega-twist, and tensor
products through the coproducts Delta_1..Delta_4.

Vectors are sparse dicts.  A basis vector of a single module is a key
(nu, k): depth nu in N[I] and index k in that weight space.  Tensor keys are
pairs of such keys.
"""
from .coeffring import PiScalar, RatFunc, pipow, qfact, vpow
from .halfalg import plain
from .linalg import rref_rows

ONE = PiScalar.one()
_RZ = RatFunc.const(0)


def vadd(acc, vec, c=None):
    for k, x in vec.items():
        if c is not None:
            x = x * c
        if k in acc:
            y = acc[k] + x
            if y.is_zero():
                del acc[k]
            else:
                acc[k] = y
        elif not x.is_zero():
            acc[k] = x
    return acc


def vscale(vec, c):
    return {k: x * c for k, x in vec.items() if not (x * c).is_zero()}


def vsub(a, b):
    return vadd(dict(a), b, -ONE)


def _add(a, b, c=1):
    return tuple(x + c * y for x, y in zip(a, b))


class WeightModule:
    """Common action helpers; subclasses provide wt, dim, gen."""

    def cartan(self, jm, km, i, nu):
        # J~_i^jm K~_i^km on weight space nu
        e = self.datum.d[i] * self.datum.lam_i(i, self.wt(nu))
        return pipow(jm * e) * vpow(km * e)

    def cartan_y(self, muJ, muK, nu):
        w = self.wt(nu)
        return pipow(self.datum.pair(muJ, w)) * vpow(self.datum.pair(muK, w))

    def act(self, gen, i, vec):
        out = {}
        for key, c in vec.items():
            vadd(out, self.gen(gen, i, key), c)
        return out

    def act_mono(self, gen, dword, key):
        """x^+ (gen='E') or x^- (gen='F') applied to a basis vector."""
        cache = self._mono
        ck = (gen, dword, key)
        r = cache.get(ck)
        if r is None:
            vec = {key: ONE}
            for i in reversed(plain(dword)):
                vec = self.act(gen, i, vec)
                if not vec:
                    break
            s = self.alg.dscale(dword)
            r = vscale(vec, s.inverse()) if vec else {}
            cache[ck] = r
        return r

    def act_felem(self, gen, x, vec):
        out = {}
        for key, c in vec.items():
            for b, e in x.terms.items():
                vadd(out, self.act_mono(gen, b, key), c * e)
        return out

    def act_uword(self, word, vec):
        """Apply a word of letters ('E'|'F', i, n), ('K'|'J', mu) right to left."""
        for letter in reversed(word):
            if letter[0] in "EF":
                _, i, n = letter
                vec = self._apply_dp(letter[0], i, n, vec)
            else:
                out = {}
                for key, c in vec.items():
                    nu = key[0]
                    s = self.cartan_y(letter[1], self.datum.zero_y(), nu) if letter[0] == "J" else \
                        self.cartan_y(self.datum.zero_y(), letter[1], nu)
                    vadd(out, {key: c * s})
                vec = out
            if not vec:
                break
        return vec

    def _apply_dp(self, gen, i, n, vec):
        out = {}
        for key, c in vec.items():
            vadd(out, self.act_mono(gen, ((i, n),), key) if n else {key: ONE}, c)
        return out

    def act_uelem(self, u, vec):
        out = {}
        for c, word in u:
            vadd(out, self.act_uword(word, vec), c)
        return out

    def basis_keys(self, nu):
        return [(nu, k) for k in range(self.dim(nu))]


class HWModule(WeightModule):
    """V(lam) = M(lam)/T, or the Verma module itself when verma=True."""

    def __init__(self, alg, lam, verma=False):
        self.alg = alg
        self.datum = alg.datum
        self.lam = tuple(lam)
        self.verma = verma
        if not verma and not self.datum.is_dominant(self.lam):
            raise ValueError("V(lambda) needs a dominant weight, got %s" % (self.lam,))
        self.n = [self.datum.lam_i(i, self.lam) + 1 for i in range(self.datum.rank)]
        self._spaces = {}
        self._gen = {}
        self._mono = {}
        self._gram = {}

    def wt(self, nu):
        return self.datum.minus_root(self.lam, nu)

    def par(self, nu):
        return self.datum.par(nu)

    def space(self, nu):
        nu = tuple(nu)
        sp = self._spaces.get(nu)
        if sp is not None:
            return sp
        if any(x < 0 for x in nu):
            sp = ([], {}, {})
        else:
            comp = self.alg.component(nu)
            piv = {}
            if not self.verma:
                rows = []
                for i in range(self.datum.rank):
                    if nu[i] >= self.n[i]:
                        lower = list(nu)
                        lower[i] -= self.n[i]
                        lower = tuple(lower)
                        top = self.alg.divided_power(i, self.n[i])
                        for b in self.alg.component(lower).basis:
                            rows.append((self.alg.basis_elem(b) * top).coords(nu))
                if rows:
                    D = comp.dim
                    red = []
                    for sign in (1, -1):
                        rr = rref_rows([{D - 1 - k: c.comp(sign) for k, c in enumerate(r)} for r in rows])
                        red.append(rr)
                    if set(red[0]) != set(red[1]):
                        raise ArithmeticError("quotient rank differs between pi = 1 and pi = -1")
                    for p in red[0]:
                        rp, rm = red[0][p], red[1][p]
                        row = {}
                        for c in set(rp) | set(rm):
                            if c != p:
                                row[D - 1 - c] = PiScalar(rp.get(c, _RZ), rm.get(c, _RZ))
                        piv[D - 1 - p] = row
            keep = [k for k in range(comp.dim) if k not in piv]
            pos = {k: a for a, k in enumerate(keep)}
            sp = (keep, pos, piv)
        self._spaces[nu] = sp
        return sp

    def dim(self, nu):
        return len(self.space(nu)[0])

    def basis_dwords(self, nu):
        comp = self.alg.component(nu)
        return [comp.basis[k] for k in self.space(nu)[0]]

    def reduce(self, x, nu=None):
        """Image of an f element (its weight-nu parts) in V; returns a sparse vector."""
        out = {}
        nus = [nu] if nu is not None else x.weights()
        for mu in nus:
            keep, pos, piv = self.space(mu)
            if not keep:
                continue
            comp = self.alg.component(mu)
            for b, c in x.terms.items():
                if self.alg.weight(b) != mu:
                    continue
                k = comp.index[b]
                if k in pos:
                    vadd(out, {(mu, pos[k]): c})
                else:
                    for kk, e in piv[k].items():
                        vadd(out, {(mu, pos[kk]): -(e * c)})
        return out

    def lift(self, key):
        nu, a = key
        keep = self.space(nu)[0]
        return self.alg.basis_elem(self.alg.component(nu).basis[keep[a]])

    def highest(self):
        return {(self.datum.zero(), 0): ONE}

    def gen(self, g, i, key):
        ck = (g, i, key)
        r = self._gen.get(ck)
        if r is None:
            x = self.lift(key)
            if g == "F":
                r = self.reduce(self.alg.theta(i) * x)
            else:
                r = self.reduce(verma_E(self.alg, i, x, self.lam))
            self._gen[ck] = r
        return r

    # polarization, (eta, eta) = 1 and (u x, y) = (x, tau_1(u) y)
    def gram(self, nu):
        nu = tuple(nu)
        g = self._gram.get(nu)
        if g is not None:
            return g
        n = self.dim(nu)
        if sum(nu) == 0:
            g = [[ONE]] if n else []
        else:
            comp = self.alg.component(nu)
            keep = self.space(nu)[0]
            g = [[None] * n for _ in range(n)]
            for a in range(n):
                k = keep[a]
                w = comp.words[k]
                i = w[0]
                lower = _add(nu, self.datum.unit(i), -1)
                xr = self.reduce(self.alg.expand_word(w[1:]), lower)
                G = self.gram(lower)
                pre = comp.dscale[k].inverse() * vpow(-1, self.datum.d[i]) * \
                    vpow(self.datum.lam_i(i, self.wt(lower)), self.datum.d[i])
                for b in range(n):
                    ey = self.gen("E", i, (nu, b))
                    s = PiScalar.zero()
                    for (mu1, p), c1 in xr.items():
                        for (mu2, q), c2 in ey.items():
                            s = s + c1 * G[p][q] * c2
                    g[a][b] = pre * s
        self._gram[nu] = g
        return g

    def polarization(self, x, y):
        s = PiScalar.zero()
        for (nu, a), c in x.items():
            G = self.gram(nu)
            for (mu, b), e in y.items():
                if mu == nu:
                    s = s + c * G[a][b] * e
        return s

    def __repr__(self):
        return "%s(%s)" % ("M" if self.verma else "V", self.lam)


class OmegaTwist(WeightModule):
    """The omega-twisted module: u acts as omega(u) on the base module."""

    def __init__(self, base):
        self.base = base
        self.alg = base.alg
        self.datum = base.datum
        self.lam = base.lam
        self._mono = {}

    def wt(self, nu):
        return tuple(-x for x in self.base.wt(nu))

    def par(self, nu):
        return self.base.par(nu)

    def dim(self, nu):
        return self.base.dim(nu)

    def space(self, nu):
        return self.base.space(nu)

    def lowest(self):
        return self.base.highest()

    def gen(self, g, i, key):
        if g == "E":
            return self.base.gen("F", i, key)
        r = self.base.gen("E", i, key)
        if not r:
            return r
        lower = _add(key[0], self.datum.unit(i), -1)
        d = self.datum.d[i]
        e = d + d * self.datum.lam_i(i, self.base.wt(lower))
        return vscale(r, pipow(e))

    def __repr__(self):
        return "omega%r" % (self.base,)


def verma_E(alg, i, x, lam):
    """E_i on the Verma module M(lam) = f."""
    datum = alg.datum
    d = datum.d[i]
    pi_i = datum.parity[i]
    li = datum.lam_i(i, lam)
    delta = pipow(d) * vpow(1, d) - vpow(-1, d)
    out = alg.zero()
    for nu in x.weights():
        if nu[i] == 0:
            continue
        xn = x.part(nu)
        pnu = datum.par(nu)
        a = alg.diff_right(i, xn) * (pipow(d * (pnu - pi_i)) * pipow(d * li) * vpow(li, d))
        lower = _add(nu, datum.unit(i), -1)
        e = datum.lam_i(i, datum.minus_root(lam, lower))
        b = alg.diff_left(i, xn) * vpow(-e, d)
        out = out + (a - b) * delta.inverse()
    return out


def verma_act(alg, word, x, lam):
    """A U-word acting on x in M(lam) = f."""
    M = HWModule(alg, lam, verma=True)
    vec = M.reduce(x)
    vec = M.act_uword(word, vec)
    out = alg.zero()
    for key, c in vec.items():
        out = out + M.lift(key) * c
    return out


def build_simple(alg, lam):
    return HWModule(alg, lam)


# coproducts: factor = (gen or None, jm, km), meaning J~_i^jm K~_i^km after gen
COPRODUCTS = {
    1: {"E": [(("E", 0, 0), (None, 0, 0)), ((None, 1, 1), ("E", 0, 0))],
        "F": [(("F", 0, 0), (None, 0, -1)), ((None, 0, 0), ("F", 0, 0))]},
    2: {"E": [(("E", 0, 0), (None, 0, 0)), ((None, 0, 1), ("E", 0, 0))],
        "F": [(("F", 0, 0), (None, 0, -1)), ((None, 1, 0), ("F", 0, 0))]},
    3: {"E": [(("E", 0, 0), (None, 0, -1)), ((None, 0, 0), ("E", 0, 0))],
        "F": [(("F", 0, 0), (None, 0, 0)), ((None, 1, 1), ("F", 0, 0))]},
    4: {"E": [(("E", 0, 0), (None, 0, -1)), ((None, 1, 0), ("E", 0, 0))],
        "F": [(("F", 0, 0), (None, 0, 0)), ((None, 0, 1), ("F", 0, 0))]},
}


def bar_factor(f):
    g, jm, km = f
    return (g, jm + km, -km)


def coproduct_table(s, g, barred=False, flipped=False):
    """List of (sign_exponent_flag, left, right); flipped applies tau."""
    out = []
    for L, R in COPRODUCTS[s][g]:
        if barred:
            L, R = bar_factor(L), bar_factor(R)
        flip_sign = False
        if flipped:
            flip_sign = L[0] is not None and R[0] is not None
            L, R = R, L
        out.append((flip_sign, L, R))
    return out


class TensorModule:
    """M1 (x) M2 with the Koszul sign (a (x) b)(x (x) y) = pi^{p(b)p(x)} ax (x) by."""

    def __init__(self, M1, M2):
        self.M1, self.M2 = M1, M2
        self.datum = M1.datum

    def wt(self, key):
        (n1, _), (n2, _) = key
        return _add(self.M1.wt(n1), self.M2.wt(n2))

    def _factor(self, M, f, i, key):
        g, jm, km = f
        vec = M.gen(g, i, key) if g else {key: ONE}
        if jm or km:
            vec = {k: c * M.cartan(jm, km, i, k[0]) for k, c in vec.items()}
        return vec

    def act_table(self, table, i, vec):
        out = {}
        pi_ = self.datum.parity[i]
        for key, c in vec.items():
            k1, k2 = key
            p1 = self.M1.par(k1[0])
            for flip_sign, L, R in table:
                a = self._factor(self.M1, L, i, k1)
                if not a:
                    continue
                b = self._factor(self.M2, R, i, k2)
                if not b:
                    continue
                e = (pi_ * p1 if R[0] else 0) + (pi_ if flip_sign else 0)
                cc = c * pipow(e)
                for ka, ca in a.items():
                    for kb, cb in b.items():
                        vadd(out, {(ka, kb): ca * cb * cc})
        return out

    def act_gen(self, s, g, i, vec, barred=False):
        return self.act_table(coproduct_table(s, g, barred), i, vec)

    def act_cartan_y(self, kind, mu, vec):
        out = {}
        for key, c in vec.items():
            (n1, _), (n2, _) = key
            w = _add(self.M1.wt(n1), self.M2.wt(n2))
            e = self.datum.pair(mu, w)
            vadd(out, {key: c * (pipow(e) if kind == "J" else vpow(e))})
        return out

    def act_uword(self, s, word, vec, barred=False):
        for letter in reversed(word):
            if letter[0] in "EF":
                _, i, n = letter
                for _ in range(n):
                    vec = self.act_gen(s, letter[0], i, vec, barred)
                    if not vec:
                        return {}
                if n > 1:
                    vec = vscale(vec, qfact(n, self.datum.d[i]).inverse())
            else:
                vec = self.act_cartan_y(letter[0], letter[1], vec)
        return vec

    def act_uelem(self, s, u, vec, barred=False):
        out = {}
        for c, word in u:
            vadd(out, self.act_uword(s, word, vec, barred), c.bar() if barred else c)
        return out

    def act_felem(self, s, gen, x, vec):
        """x^+ or x^- through Delta_s (letters of each basis word, right to left)."""
        out = {}
        for b, e in x.terms.items():
            vv = vec
            for i in reversed(plain(b)):
                vv = self.act_gen(s, gen, i, vv)
                if not vv:
                    break
            if vv:
                vadd(out, vv, e * x.alg.dscale(b).inverse())
        return out

    def basis_keys(self, nu1, nu2):
        return [((nu1, a), (nu2, b)) for a in range(self.M1.dim(nu1)) for b in range(self.M2.dim(nu2))]

    def bar_vec(self, vec):
        """bar (x) bar in the monomial bases (all basis vectors are bar-invariant)."""
        return {k: c.bar() for k, c in vec.items()}


def N_module(alg, lam, lamp):
    """N(lam, lam') = V(lam) (x) omega V(lam')."""
    return TensorModule(HWModule(alg, lam), OmegaTwist(HWModule(alg, lamp)))


def N_base(N):
    z = N.datum.zero()
    return {((z, 0), (z, 0)): ONE}


# U-words and automorphisms -------------------------------------------------

def _jt(datum, i, n=1):
    """Y-vector of J~_i^n (= J_{n d_i i})."""
    return tuple(n * datum.d[i] * y for y in datum.embed_Y[i])


def apply_auto(datum, kind, u):
    """u is a list of (coef, word); returns the image list."""
    out = []
    for c, word in u:
        letters = []
        coef = c
        for letter in word:
            L = letter[0]
            if L in "EF":
                _, i, n = letter
                d = datum.d[i]
                if kind == "omega":
                    if L == "E":
                        new = [("F", i, n)]
                    else:
                        new = [("J", _jt(datum, i, n)), ("E", i, n)]
                        coef = coef * pipow(d * n)
                elif kind == "omega_inv":
                    if L == "F":
                        new = [("E", i, n)]
                    else:
                        new = [("J", _jt(datum, i, n)), ("F", i, n)]
                        coef = coef * pipow(d * n)
                elif kind == "rho":
                    if L == "E":
                        new = [("J", _jt(datum, i, n)), ("E", i, n)]
                        coef = coef * pipow(d * n)
                    else:
                        new = [letter]
                elif kind == "bar":
                    new = [letter]
                elif kind == "dagger":
                    b2 = n * (n - 1) // 2
                    if L == "E":
                        new = [("J", _jt(datum, i, n)), ("E", i, n)]
                        coef = coef * pipow(d * (n + b2))
                    else:
                        new = [letter]
                        coef = coef * pipow(d * b2)
                else:
                    raise ValueError(kind)
            else:
                mu = letter[1]
                neg = tuple(-x for x in mu)
                if L == "J":
                    new = [letter]
                elif kind in ("omega", "omega_inv", "rho"):
                    new = [("K", neg)]
                elif kind == "bar":
                    new = [("J", mu), ("K", neg)]
                else:
                    new = [("J", mu), ("K", mu)]
            letters.append(new)
        if kind == "rho":
            letters.reverse()
        if kind == "bar":
            coef = coef.bar()
        elif kind == "dagger":
            coef = coef.dagger()
        out.append((coef, tuple(x for grp in letters for x in grp)))
    return out


def omega_square_factor(datum, lam, nu):
    """omega^2(x) = pi_nu pi^{<nu~, lam>} x on V(lam)_{lam - nu'}."""
    return pipow(datum.pi_exp(nu) + datum.pair_tilde(nu, lam))


def n34_factor(datum, lam, nu):
    """N_3 -> N_4, x (x) y -> pi^{<nu~, lam>} x (x) y; nu is the depth of y."""
    return pipow(datum.pair_tilde(nu, lam))


def jpolarization(N, w1, w2):
    """J-polarization (w1, w2) on N(lam, lam'), with w2 read in the
    Delta_4 model of N through x (x) y -> pi^{<nu~, lam>} x (x) y."""
    V1 = N.M1
    V2 = N.M2.base
    datum = N.datum
    lam_sum = tuple(a + b for a, b in zip(V1.lam, V2.lam))
    s = PiScalar.zero()
    for (k1, k2), c in w1.items():
        for (l1, l2), e in w2.items():
            if k1[0] != l1[0] or k2[0] != l2[0]:
                continue
            nu = k2[0]
            f = pipow(datum.pi_exp(nu) + datum.pair_tilde(nu, lam_sum))
            s = s + c * e * f * V1.gram(k1[0])[k1[1]][l1[1]] * V2.gram(k2[0])[k2[1]][l2[1]]
    return s
