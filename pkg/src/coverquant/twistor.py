"""Enhancers and twistor maps.

Twisted objects carry coefficients in GaussPi (re + t*im, t^2 = -1) and are
stored as sparse dicts key -> GaussPi.  The twistor is semilinear: on
scalars v -> t^-1 v and pi -> -pi, which swaps the two eps-components.
"""
from fractions import Fraction
from itertools import product

import flint

from .coeffring import GaussPi, PiScalar, subst_tinv
from . import udot as U

ONE = PiScalar.one()


class TwistError(ArithmeticError):
    pass


# scalars and twisted vectors --------------------------------------------------

def twist_scalar(c):
    """X(c) for c in Q(v)^pi."""
    p_re, p_im = subst_tinv(c.plus)
    m_re, m_im = subst_tinv(c.minus)
    return GaussPi(PiScalar(m_re, p_re), PiScalar(m_im, p_im))


def tpow(k):
    return GaussPi.tpow(k)


def gvec(vec):
    return {k: GaussPi(c) for k, c in vec.items()}


def gsplit(gv):
    re = {k: c.re for k, c in gv.items() if not c.re.is_zero()}
    im = {k: c.im for k, c in gv.items() if not c.im.is_zero()}
    return re, im


def gjoin(re, im):
    out = {}
    for k, c in re.items():
        out[k] = GaussPi(c)
    for k, c in im.items():
        out[k] = out.get(k, GaussPi(PiScalar.zero())) + GaussPi(PiScalar.zero(), c)
    return {k: c for k, c in out.items() if not c.is_zero()}


def gapply(f, gv):
    """Apply a Q(v)^pi-linear map on dict vectors to a twisted vector."""
    re, im = gsplit(gv)
    return gjoin(f(re), f(im))


def geq(a, b):
    keys = set(a) | set(b)
    z = GaussPi(PiScalar.zero())
    return all(a.get(k, z) == b.get(k, z) for k in keys)


def t_exponent(image, vec):
    """k in Z/4 with image == t^k vec, or None."""
    vec = {k: c for k, c in vec.items() if not c.is_zero()}
    if set(image) != set(vec):
        return None
    if not vec:
        return 0
    k0 = next(iter(vec))
    k = image[k0].t_exponent_over(GaussPi(vec[k0]))
    if k is None:
        return None
    tk = tpow(k)
    if all(image[key] == tk * GaussPi(c) for key, c in vec.items()):
        return k
    return None


def bullet(datum, nu):
    """sum_{s<t} i_s . i_t over any word of weight nu."""
    r = datum.rank
    full = datum.dot(nu, nu)
    diag = sum(nu[i] * datum.cartan.dot[i][i] for i in range(r))
    return (full - diag) // 2


# enhancers ----------------------------------------------------------------------

class Enhancer:
    """phi(i, j') = M[i][j] mod 4 on the root lattice, phi(i, rep) = rep_val on
    coset representatives of X / Z[I']; extended by the additivity laws."""

    def __init__(self, datum, M, rep_val=None):
        self.datum = datum
        self.M = [[int(x) % 4 for x in row] for row in M]
        self.rep_val = dict(rep_val or {})
        r = datum.rank
        B = flint.fmpz_mat([list(datum.embed_X[i]) for i in range(r)])
        self._hnf = [list(map(int, row)) for row in B.hnf().tolist()]
        self._hnf = [row for row in self._hnf if any(row)]

    def decompose(self, lam):
        """(rep, mu) with lam = rep + mu' and rep the canonical coset representative."""
        rep = list(lam)
        for row in self._hnf:
            c = next(k for k, x in enumerate(row) if x)
            q = rep[c] // row[c]
            rep = [a - q * b for a, b in zip(rep, row)]
        rep = tuple(rep)
        diff = [a - b for a, b in zip(lam, rep)]
        mu = _solve_int(self.datum, diff)
        return rep, mu

    def phi_i(self, i, lam):
        rep, mu = self.decompose(lam)
        s = self.rep_val.get((i, rep), 0)
        s += sum(mu[j] * self.M[i][j] for j in range(self.datum.rank))
        return s % 4

    def phi(self, nu, lam):
        return sum(n * self.phi_i(i, lam) for i, n in enumerate(nu) if n) % 4

    def phi_root(self, nu, mu):
        """phi(nu, mu')."""
        r = self.datum.rank
        return sum(nu[i] * mu[j] * self.M[i][j] for i in range(r) for j in range(r)) % 4

    def validate(self, weights=None):
        """Violations of the enhancer axioms (empty list when valid)."""
        datum = self.datum
        r = datum.rank
        bad = []
        for i in range(r):
            if (self.M[i][i] - datum.d[i]) % 4:
                bad.append("phi(%d,%d') != d_i mod 4" % (i, i))
            for j in range(r):
                if i == j:
                    continue
                if self.M[i][j] % 2:
                    bad.append("phi(%d,%d') odd" % (i, j))
                rhs = datum.cartan.dot[i][j] + 2 * datum.parity[i] * datum.parity[j]
                if (self.M[i][j] - self.M[j][i] - rhs) % 4:
                    bad.append("phi(%d,%d') - phi(%d,%d') wrong" % (i, j, j, i))
        if weights is None:
            weights = list(product(range(-3, 4), repeat=datum.X_rank))
        units = [datum.unit(j) for j in range(r)]
        for lam in weights:
            for nu in units:
                for mu in units:
                    lhs = self.phi(nu, datum.plus_root(lam, mu))
                    if (lhs - self.phi_root(nu, mu) - self.phi(nu, lam)) % 4:
                        bad.append("second-argument additivity at %s, %s, %s" % (nu, lam, mu))
                    s = tuple(a + b for a, b in zip(nu, mu))
                    if (self.phi(s, lam) - self.phi(nu, lam) - self.phi(mu, lam)) % 4:
                        bad.append("first-argument additivity at %s, %s, %s" % (nu, mu, lam))
        return bad

    def to_json(self):
        return {"phi_roots": self.M,
                "phi_reps": [{"i": i, "rep": list(rep), "value": v}
                             for (i, rep), v in sorted(self.rep_val.items())]}


def _solve_int(datum, diff):
    """mu in Z^I with sum mu_i i' = diff."""
    r = datum.rank
    rows = [[Fraction(datum.embed_X[i][b]) for i in range(r)] + [Fraction(diff[b])]
            for b in range(datum.X_rank)]
    piv = []
    row = 0
    for c in range(r):
        pr = next((k for k in range(row, len(rows)) if rows[k][c] != 0), None)
        if pr is None:
            raise TwistError("datum is not X-regular")
        rows[row], rows[pr] = rows[pr], rows[row]
        p = rows[row][c]
        rows[row] = [x / p for x in rows[row]]
        for k in range(len(rows)):
            if k != row and rows[k][c] != 0:
                f = rows[k][c]
                rows[k] = [x - f * y for x, y in zip(rows[k], rows[row])]
        piv.append(c)
        row += 1
    if any(rows[k][r] != 0 for k in range(row, len(rows))):
        raise TwistError("%s is not in the root lattice" % (diff,))
    mu = [rows[k][r] for k in range(r)]
    if any(x.denominator != 1 for x in mu):
        raise TwistError("%s is not in the root lattice" % (diff,))
    return tuple(int(x) for x in mu)


def build_enhancer(datum):
    """Lexicographically least enhancer (row-major phi(i, j') table, then
    value 0 on every non-root coset representative)."""
    r = datum.rank
    if not datum.x_regular():
        raise TwistError("no enhancer search for a datum that is not X-regular")
    free = [(i, j) for i in range(r) for j in range(r) if i < j]
    best = None
    for choice in product((0, 2), repeat=len(free)):
        M = [[0] * r for _ in range(r)]
        for i in range(r):
            M[i][i] = datum.d[i] % 4
        for (i, j), c in zip(free, choice):
            M[i][j] = c
            M[j][i] = (c - datum.cartan.dot[i][j] - 2 * datum.parity[i] * datum.parity[j]) % 4
        if any(M[j][i] % 2 for i, j in free):
            continue
        flat = [x for row in M for x in row]
        if best is None or flat < best[0]:
            best = (flat, M)
    if best is None:
        raise TwistError("no enhancer exists for this datum")
    enh = Enhancer(datum, best[1])
    bad = enh.validate()
    if bad:
        raise TwistError("enhancer search produced an invalid table: " + "; ".join(bad[:3]))
    return enh


def enhancer_for(alg):
    enh = alg.__dict__.get("_enhancer")
    if enh is None:
        enh = alg.__dict__["_enhancer"] = build_enhancer(alg.datum)
    return enh


# f[t] ---------------------------------------------------------------------------

def _word_exponent(enh, word):
    s = 0
    r = enh.datum.rank
    tail = [0] * r
    for i in reversed(word):
        s += sum(tail[j] * enh.M[i][j] for j in range(r))
        tail[i] += 1
    return s % 4


def basis_factor(alg, dword, enh=None):
    """g with X(b) = g b for the divided-power basis word b."""
    enh = enh or enhancer_for(alg)
    cache = alg.__dict__.setdefault("_twist_basis", {})
    g = cache.get(dword)
    if g is None:
        from .halfalg import plain
        s = alg.dscale(dword)
        g = tpow(_word_exponent(enh, plain(dword))) * GaussPi(s) / twist_scalar(s)
        cache[dword] = g
    return g


def twist_f(alg, x, enh=None):
    """X(x) for x in f (FElem or twisted dict); returns dword -> GaussPi."""
    terms = x.terms if hasattr(x, "terms") else x
    out = {}
    for b, c in terms.items():
        tc = twist_scalar(c) if isinstance(c, PiScalar) else _twist_g(c)
        out[b] = tc * basis_factor(alg, b, enh)
    return {k: c for k, c in out.items() if not c.is_zero()}


def _twist_g(g):
    # X is Q(t)-linear
    return twist_scalar(g.re) + GaussPi(PiScalar.zero(), PiScalar.one()) * twist_scalar(g.im)


def ell(alg, b, enh=None):
    """l(b) mod 4 with X(b) = t^l b for a canonical basis element b of f."""
    k = t_exponent(twist_f(alg, b, enh), b.terms)
    if k is None:
        raise TwistError("twist of %r is not a t-power multiple" % (b,))
    return k


# modules ------------------------------------------------------------------------

def module_factor(M, key, enh=None):
    """X_lam on a basis vector of V(lam): t^{-phi(nu, lam)} X(b)."""
    enh = enh or enhancer_for(M.alg)
    nu, a = key
    b = M.basis_dwords(nu)[a]
    return tpow(-enh.phi(nu, M.lam)) * basis_factor(M.alg, b, enh)


def twist_module(M, vec, enh=None):
    out = {}
    for key, c in vec.items():
        tc = twist_scalar(c) if isinstance(c, PiScalar) else _twist_g(c)
        out[key] = tc * module_factor(M, key, enh)
    return {k: c for k, c in out.items() if not c.is_zero()}


class Kappa:
    """kappa(lam - nu', mu' - lam') mod 4, indexed by depths (nu, mu).

    rule="additive" solves the three recurrences written as if phi were
    additive in its second argument; rule="module" replaces each phi(i, a) by
    the non-additive combination the E/F intertwining actually needs.  The two
    agree when lam' lies in the root lattice."""

    def __init__(self, enh, lam, lamp, rule="module"):
        if rule not in ("additive", "module"):
            raise ValueError("rule must be 'additive' or 'module'")
        self.enh = enh
        self.datum = enh.datum
        self.lam, self.lamp = tuple(lam), tuple(lamp)
        self.rule = rule
        self._memo = {}

    def zetas(self, nu, mu):
        D = self.datum
        return D.minus_root(self.lam, nu), D.weight_add(D.root(mu), self.lamp, -1)

    def nu_step(self, nu, mu, i):
        """kappa(nu + i, mu) - kappa(nu, mu)."""
        z, zp = self.zetas(nu, mu)
        u = self.datum.unit(i)
        if self.rule == "additive":
            return -self.enh.phi(u, zp)
        return self.enh.phi(u, z) - self.enh.phi(u, self.datum.weight_add(z, zp))

    def mu_step(self, nu, mu, i):
        """kappa(nu, mu + i) - kappa(nu, mu)."""
        D, enh = self.datum, self.enh
        z, zp = self.zetas(nu, mu)
        u = D.unit(i)
        tot = D.weight_add(z, zp)
        if self.rule == "additive":
            ph = enh.phi(u, z)
        else:
            ph = enh.phi(u, tot) + enh.phi(u, tuple(-x for x in zp))
        return ph + 2 * D.d[i] + D.d[i] * D.lam_i(i, tot) + 2 * D.par(nu) * D.parity[i]

    def by_depth(self, nu, mu, via=None):
        nu, mu = tuple(nu), tuple(mu)
        key = (nu, mu, via)
        got = self._memo.get(key)
        if got is not None:
            return got
        if any(mu):
            i = via if via is not None else next(k for k, x in enumerate(mu) if x)
            if not mu[i]:
                raise ValueError("cannot peel %d from %s" % (i, mu))
            low = tuple(x - (k == i) for k, x in enumerate(mu))
            val = self.by_depth(nu, low) + self.mu_step(nu, low, i)
        elif any(nu):
            i = via if via is not None else next(k for k, x in enumerate(nu) if x)
            if not nu[i]:
                raise ValueError("cannot peel %d from %s" % (i, nu))
            low = tuple(x - (k == i) for k, x in enumerate(nu))
            val = self.by_depth(low, mu) + self.nu_step(low, mu, i)
        else:
            val = 0
        val %= 4
        self._memo[key] = val
        return val

    def __call__(self, zeta, zetap):
        D = self.datum
        nu = _solve_int(D, D.weight_add(self.lam, zeta, -1))
        mu = _solve_int(D, D.weight_add(zetap, self.lamp))
        return self.by_depth(nu, mu)

    def check(self, nus, mus):
        """Violations of the base value, both recurrences and path independence."""
        D = self.datum
        bad = []
        if self.by_depth(D.zero(), D.zero()) != 0:
            bad.append("kappa(lam, -lam') != 0")
        for nu in nus:
            for mu in mus:
                k0 = self.by_depth(nu, mu)
                for i in range(D.rank):
                    if mu[i] and self.by_depth(nu, mu, via=i) != k0:
                        bad.append("path dependence at %s, %s" % (nu, mu))
                    if not any(mu) and nu[i] and self.by_depth(nu, mu, via=i) != k0:
                        bad.append("path dependence at %s, %s" % (nu, mu))
                    nu2 = tuple(x + (k == i) for k, x in enumerate(nu))
                    if (self.by_depth(nu2, mu) - k0 - self.nu_step(nu, mu, i)) % 4:
                        bad.append("nu-recurrence at %s, %s, i=%d" % (nu, mu, i))
                    mu2 = tuple(x + (k == i) for k, x in enumerate(mu))
                    if (self.by_depth(nu, mu2) - k0 - self.mu_step(nu, mu, i)) % 4:
                        bad.append("mu-recurrence at %s, %s, i=%d" % (nu, mu, i))
        return bad


def twist_N(N, vec, enh=None, kappa=None):
    """X_{lam, lam'} on N(lam, lam') = V(lam) (x) omega V(lam')."""
    V1, V2 = N.M1, N.M2.base
    enh = enh or enhancer_for(V1.alg)
    kappa = kappa or Kappa(enh, V1.lam, V2.lam, "module")
    out = {}
    for key, c in vec.items():
        (k1, k2) = key
        tc = twist_scalar(c) if isinstance(c, PiScalar) else _twist_g(c)
        f = tpow(kappa.by_depth(k1[0], k2[0])) * module_factor(V1, k1, enh) * module_factor(V2, k2, enh)
        out[key] = tc * f
    return {k: c for k, c in out.items() if not c.is_zero()}


def generator_factor(datum, enh, g, i, wt):
    """t-power by which X(E_i) or X(F_i) differs from E_i, F_i on weight wt."""
    if g == "F":
        return (-enh.phi(datum.unit(i), wt)) % 4
    d = datum.d[i]
    return (2 * d + d * datum.lam_i(i, wt) + enh.phi(datum.unit(i), wt)) % 4


# U-dot ----------------------------------------------------------------------------

def udot_factor(alg, key, enh=None):
    """X(x^- y^+ 1_z) = g x^- y^+ 1_z for basis words x, y."""
    enh = enh or enhancer_for(alg)
    D = alg.datum
    x, y, z = key
    nu, mu = alg.weight(x), alg.weight(y)
    e = bullet(D, mu) + 2 * D.pi_exp(mu) - enh.phi_root(nu, mu) + D.pair_tilde(mu, z) \
        + enh.phi(mu, z) - enh.phi(nu, z)
    return tpow(e) * basis_factor(alg, x, enh) * basis_factor(alg, y, enh)


def twist_udot(a, enh=None):
    a = U.convert(a, "mp")
    out = {}
    for key, c in a.terms.items():
        out[key] = twist_scalar(c) * udot_factor(a.alg, key, enh)
    return {k: c for k, c in out.items() if not c.is_zero()}


def udot_of(alg, terms):
    return U.UDot(alg, terms, "mp")


def gmul_udot(alg, A, B):
    """Product of twisted U-dot elements (dicts of mp keys)."""
    ar, ai = (udot_of(alg, p) for p in gsplit(A))
    br, bi = (udot_of(alg, p) for p in gsplit(B))
    re = ar * br - ai * bi
    im = ar * bi + ai * br
    return gjoin(re.terms, im.terms)


# eigen-checks on canonical bases ----------------------------------------------------

def cb_exponent(alg, element, enh=None):
    """f with X(element) = t^f element for a CBElement of N or of U-dot."""
    enh = enh or enhancer_for(alg)
    if element.zeta is not None:
        img, vec = twist_udot(element.vector, enh), U.convert(element.vector, "mp").terms
    else:
        from .repmod import N_module
        N = N_module(alg, element.lam, element.lamp)
        img, vec = twist_N(N, element.vector, enh), element.vector
    k = t_exponent(img, vec)
    if k is None:
        raise TwistError("twist of canonical element %s is not a t-power multiple" % (element.index,))
    return k


def cb_eigencheck(alg, elements, enh=None):
    return [cb_exponent(alg, e, enh) for e in elements]


def exponent_table(alg, zeta, height, provider=None, enh=None, shift_check=True):
    """Rows (b, b', zeta, f) for the U-dot canonical basis of a block; with
    shift_check the module exponents at (lam, lam'') and the rho-shifted pair
    must agree with f."""
    from .cbengine import UDotCanonical, stabilization_pair
    enh = enh or enhancer_for(alg)
    uc = UDotCanonical(alg, provider)
    D = alg.datum
    rows = []
    for h in uc.pairs(height):
        el = uc.element(h, zeta, verify=False)
        f = cb_exponent(alg, el, enh)
        if shift_check:
            lam, lamp = stabilization_pair(D, tuple(zeta), *h.heights())
            rho = D.rho_hat()
            for sh in (0, 1):
                l1 = tuple(a + sh * b for a, b in zip(lam, rho))
                l2 = tuple(a + sh * b for a, b in zip(lamp, rho))
                nel = uc.ncanonical(l1, l2).element(h, verify=False)
                fn = cb_exponent(alg, nel, enh)
                if fn != f:
                    raise TwistError("module exponent %d at %s != U-dot exponent %d for %s"
                                     % (fn, (l1, l2), f, h))
        rows.append({"b": el.labels[0], "b2": el.labels[1], "zeta": list(zeta), "f": f})
    return rows
