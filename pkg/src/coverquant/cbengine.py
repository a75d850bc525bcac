"""Canonical bases.

Psi = Theta o bar on N(lam, lam'), the semi-linear solver, canonical bases
of N(lam, lam'), the cancellation maps chi, chi_4, delta and t, and the
canonical basis of U-dot obtained by lifting module elements.
"""
import json
import re
from dataclasses import dataclass, field
from importlib import resources
from typing import NamedTuple

from .coeffring import PiScalar, RatFunc, pipow
from .halfalg import FElem
from .linalg import SingularSystem, rank_comp, solve
from .quasir import apply_theta, compute_theta
from .repmod import HWModule, N_module, OmegaTwist, TensorModule, vadd
from . import udot as U

ONE = PiScalar.one()
ZERO = PiScalar.zero()


class ProviderError(ValueError):
    pass


class HypothesisError(ArithmeticError):
    """The matrix handed to the semi-linear solver is not a valid bar-involution."""


# scalars in A = Z^pi[v, 1/v] as [[exp, a, b], ...] meaning sum (a + b pi) v^exp

def encode_scalar(c):
    a, b = c.split()
    out = []
    for e in sorted(set(a) | set(b)):
        x, y = a.get(e, 0), b.get(e, 0)
        if x.denominator != 1 or y.denominator != 1:
            raise ProviderError("coefficient %s is not in A" % c)
        out.append([e, int(x), int(y)])
    return out


def decode_scalar(terms):
    plus, minus = {}, {}
    for e, a, b in terms:
        plus[e] = plus.get(e, 0) + a + b
        minus[e] = minus.get(e, 0) + a - b
    return PiScalar(RatFunc.from_laurent(plus), RatFunc.from_laurent(minus))


def encode_elem(combo, nu):
    """combo: {divided-power monomial: coefficient in A}."""
    mons = sorted(combo)
    return {"weight": list(nu),
            "monomials": [[list(r) for r in m] for m in mons],
            "coefficients": [encode_scalar(combo[m]) for m in mons]}


def _pi_unit_mod_v(s):
    # s in pi^e + v Z^pi[[v]]
    if s.valuation() is None or s.valuation() < 0:
        return False
    p, m = s.series(1)
    return p.get(0, 0) == 1 and m.get(0, 0) in (1, -1)


def _in_vA_series(s):
    return s.valuation() is None or s.valuation() > 0


def is_almost_orthonormal(alg, elems):
    for a, x in enumerate(elems):
        for b in range(a, len(elems)):
            s = alg.form_f(x, elems[b])
            if not (_pi_unit_mod_v(s) if a == b else _in_vA_series(s)):
                return False
    return True


# providers ---------------------------------------------------------------------

class CBProvider:
    """Canonical basis of f per weight, plus its images in simple modules."""

    def __init__(self, alg, height):
        self.alg = alg
        self.height = height
        self._mod = {}

    def elements(self, nu):
        raise NotImplementedError

    def label(self, nu, k):
        x = self.elements(nu)[k]
        if len(x.terms) == 1:
            (b, c), = x.terms.items()
            if c == ONE:
                return self.alg.dword_str(b)
        return "b%s_%d" % ("".join(map(str, nu)), k)

    def _cover(self, nu):
        if sum(nu) > self.height:
            raise ProviderError("canonical basis data only covers heights <= %d" % self.height)

    def module_basis(self, M, nu):
        """[(k, vector)] for the b in B(lam)_nu, i.e. those with b eta != 0."""
        key = (M.lam, tuple(nu))
        got = self._mod.get(key)
        if got is None:
            got = [(k, v) for k, b in enumerate(self.elements(nu)) for v in [M.reduce(b, tuple(nu))] if v]
            dim = M.dim(tuple(nu))
            if len(got) != dim:
                raise ProviderError("%d canonical images in a %d-dimensional space at %s" % (len(got), dim, nu))
            if dim:
                keys = [(tuple(nu), a) for a in range(dim)]
                rows = [[v.get(kk, ZERO) for _, v in got] for kk in keys]
                if rank_comp(rows, 1) < dim or rank_comp(rows, -1) < dim:
                    raise ProviderError("canonical images are dependent at %s" % (nu,))
            self._mod[key] = got
        return got

    def validate(self, height=None):
        """Bar-invariance, count and almost-orthonormality per weight.

        Integrality is a property of how elements are written (A-combinations
        of divided-power monomials), so providers check it on their input."""
        alg = self.alg
        failures = []
        for nu in alg.weights_upto(self.height if height is None else height):
            els = self.elements(nu)
            if len(els) != alg.dim(nu):
                failures.append("%s: %d elements for dimension %d" % (nu, len(els), alg.dim(nu)))
                continue
            for k, b in enumerate(els):
                if not (alg.bar_f(b) == b):
                    failures.append("%s[%d] not bar-invariant" % (nu, k))
            if not is_almost_orthonormal(alg, els):
                failures.append("%s: not almost orthonormal" % (nu,))
        return {"pass": not failures, "failures": failures}


class RankOneProvider(CBProvider):
    """B = {theta^(a)} for a single odd simple root."""

    def __init__(self, alg):
        if alg.rank != 1:
            raise ProviderError("rank-one provider needs a rank-one datum")
        super().__init__(alg, alg.max_height)

    def elements(self, nu):
        self._cover(nu)
        return [self.alg.divided_power(0, nu[0])]


class FileProvider(CBProvider):
    """Monomial expansions read from JSON and validated before use."""

    def __init__(self, alg, data):
        super().__init__(alg, int(data["height"]))
        if data.get("datum") not in (None, alg.datum.name):
            raise ProviderError("data is for %s, not %s" % (data.get("datum"), alg.datum.name))
        if self.height > alg.max_height:
            raise ProviderError("half algebra height %d below data height %d" % (alg.max_height, self.height))
        self._els = {}
        for ent in data["elements"]:
            nu = tuple(ent["weight"])
            terms = {}
            for mon, coef in zip(ent["monomials"], ent["coefficients"]):
                dword = tuple((int(i), int(a)) for i, a in mon)
                if any(not isinstance(t, int) for term in coef for t in term):
                    raise ProviderError("coefficients must be integers in %s" % (nu,))
                x = alg.from_dword(dword) * decode_scalar(coef)
                for b, c in x.terms.items():
                    terms[b] = terms[b] + c if b in terms else c
            self._els.setdefault(nu, []).append(FElem(alg, terms))
        rep = self.validate()
        if not rep["pass"]:
            raise ProviderError("invalid canonical basis data: " + "; ".join(rep["failures"]))

    def elements(self, nu):
        self._cover(nu)
        return self._els.get(tuple(nu), [])

    @classmethod
    def load(cls, alg, path):
        with open(path) as fh:
            return cls(alg, json.load(fh))


def data_name(datum):
    return re.sub(r"\W+", "_", datum.name or "datum").strip("_") + ".json"


def provider_for(alg):
    cached = alg.__dict__.get("_cb_provider")
    if cached is not None:
        return cached
    if alg.rank == 1:
        prov = RankOneProvider(alg)
    else:
        ref = resources.files("coverquant").joinpath("data", data_name(alg.datum))
        if not ref.is_file():
            raise ProviderError("no canonical basis data for %s" % alg.datum.name)
        prov = FileProvider(alg, json.loads(ref.read_text()))
    alg.__dict__["_cb_provider"] = prov
    return prov


# pairs and the partial order ----------------------------------------------------

class PiPairIndex(NamedTuple):
    """Class of (pi^eps b, b') with b = (nu, k), b' = (nu', k') provider labels."""
    b: tuple
    bp: tuple
    eps: int = 0

    def times_pi(self):
        return PiPairIndex(self.b, self.bp, (self.eps + 1) % 2)

    def heights(self):
        return sum(self.b[0]), sum(self.bp[0])


def partial_order_leq(p, q):
    h1, h1p = p.heights()
    h2, h2p = q.heights()
    if h1 - h1p != h2 - h2p:
        return False
    if p == q:
        return True
    return h1 < h2 and h1p < h2p


# semi-linear solver -------------------------------------------------------------

def linear_extension(H, leq):
    rest = list(H)
    out = []
    while rest:
        for h in rest:
            if not any(g != h and leq(g, h) for g in rest):
                break
        else:
            raise ValueError("relation is not a partial order")
        out.append(h)
        rest.remove(h)
    return out


def semilinear_solve(H, leq, r, one=ONE):
    """p with p_hh = 1, p_hh' in vZ^pi[v] and p_hh' = sum p-bar_hh'' r_h''h'.

    r maps (h, h') with h <= h' to elements of A; missing entries are 0.
    Any scalar type with bar, in_A and truncate_positive works; pass its one."""
    zero = one - one
    H = linear_extension(H, leq)
    R = lambda a, b: r.get((a, b), zero)
    for (a, b), c in r.items():
        if not c.is_zero() and not leq(a, b):
            raise HypothesisError("r is not triangular at %s, %s" % (a, b))
        if not c.in_A():
            raise HypothesisError("r entry %s not in A" % c)
    for a in H:
        if R(a, a) != one:
            raise HypothesisError("diagonal entry at %s is %s" % (a, R(a, a)))
        for b in H:
            if not leq(a, b):
                continue
            s = zero
            for c in H:
                if leq(a, c) and leq(c, b):
                    s = s + R(a, c).bar() * R(c, b)
            if s != (one if a == b else zero):
                raise HypothesisError("r r-bar != 1 at %s, %s" % (a, b))
    p = {}
    for a in H:
        p[(a, a)] = one
        for b in H:
            if b == a or not leq(a, b):
                continue
            q = zero
            for c in H:
                if c != b and (a, c) in p and leq(c, b):
                    q = q + p[(a, c)].bar() * R(c, b)
            if not (q + q.bar()).is_zero():
                raise HypothesisError("q + q-bar != 0 at %s, %s" % (a, b))
            pos = q.truncate_positive()
            if pos - pos.bar() != q:
                raise HypothesisError("q does not split at %s, %s" % (a, b))
            if not pos.is_zero():
                p[(a, b)] = pos
    return p


# canonical basis of N(lam, lam') -------------------------------------------------

@dataclass
class CBElement:
    index: PiPairIndex
    coeffs: dict
    vector: object
    lam: tuple = None
    lamp: tuple = None
    zeta: tuple = None
    labels: tuple = field(default=())

    def to_json(self):
        d = {"b": self.labels[0] if self.labels else None,
             "b2": self.labels[1] if self.labels else None,
             "weights": [list(self.index.b[0]), list(self.index.bp[0])],
             "coefficients": [{"index": [list(h.b[0]), h.b[1], list(h.bp[0]), h.bp[1]],
                               "value": c.to_json()} for h, c in sorted(self.coeffs.items())]}
        if self.zeta is not None:
            d["zeta"] = list(self.zeta)
            d["text"] = U.to_text(self.vector)
        else:
            d["lambda"], d["lambda2"] = list(self.lam), list(self.lamp)
        return d


def module_weights(M, limit=None):
    """Weights nu with M_nu != 0, by height; the module must be finite."""
    datum = M.datum
    limit = M.alg.max_height if limit is None else limit
    seen = {datum.zero()}
    layer = [datum.zero()]
    h = 0
    while layer:
        h += 1
        nxt = set()
        for nu in layer:
            for i in range(datum.rank):
                mu = tuple(x + (1 if k == i else 0) for k, x in enumerate(nu))
                if mu not in seen and M.dim(mu):
                    nxt.add(mu)
        if nxt and h > limit:
            raise ProviderError("module extends past height %d" % limit)
        seen |= nxt
        layer = sorted(nxt)
    return sorted(seen, key=lambda n: (sum(n), n))


def theta_for(alg, H):
    cache = alg.__dict__.setdefault("_theta3", {})
    best = [h for h in cache if h >= H]
    if best:
        return cache[min(best)]
    th = compute_theta(alg, 3, H)
    cache[H] = th
    return th


class NCanonical:
    """Standard basis b^- eta (x) b'^+ xi of N(lam, lam'), Psi and the CB.

    Work is organised by down-sets {h' <= h}: they are Psi-stable, so a
    single canonical element never needs the whole weight block."""

    def __init__(self, alg, lam, lamp, provider=None, depth=None):
        self.alg = alg
        self.datum = alg.datum
        self.lam, self.lamp = tuple(lam), tuple(lamp)
        self.N = N_module(alg, lam, lamp)
        self.V1, self.V2 = self.N.M1, self.N.M2.base
        self.provider = provider or provider_for(alg)
        self.depth = depth
        self._coords = {}
        self._cb = {}

    def _pairs(self, n1, n2):
        return [PiPairIndex((n1, k1), (n2, k2))
                for k1, _ in self.provider.module_basis(self.V1, n1)
                for k2, _ in self.provider.module_basis(self.V2, n2)]

    def blocks(self):
        """All standard indices of the (depth-truncated) module, by block."""
        if self.depth is None:
            w1, w2 = module_weights(self.V1), module_weights(self.V2)
        else:
            w1, w2 = _weights_upto(self.V1, self.depth), _weights_upto(self.V2, self.depth)
        out = {}
        for n1 in w1:
            for n2 in w2:
                if self.depth is not None and sum(n1) + sum(n2) > self.depth:
                    continue
                out.setdefault(_diff(n1, n2), []).extend(self._pairs(n1, n2))
        return out

    def downset(self, h):
        (n1, _), (n2, _) = h.b, h.bp
        d = _diff(n1, n2)
        out = []
        for m1 in self.alg.weights_upto(sum(n1)):
            m2 = _diff(m1, d)
            if min(m2, default=0) < 0 or not self.V1.dim(m1) or not self.V2.dim(m2):
                continue
            out.extend(g for g in self._pairs(m1, m2) if partial_order_leq(g, h))
        return out

    def std_vector(self, h):
        v1 = dict(self.provider.module_basis(self.V1, h.b[0]))[h.b[1]]
        v2 = dict(self.provider.module_basis(self.V2, h.bp[0]))[h.bp[1]]
        c = pipow(h.eps)
        return {(a, b): ca * cb * c for a, ca in v1.items() for b, cb in v2.items()}

    def theta(self, height):
        return theta_for(self.alg, height + 1)

    def psi(self, vec):
        top = 0
        for (k1, k2) in vec:
            top = max(top, min(sum(k1[0]), sum(k2[0])))
        return apply_theta(self.theta(top), self.N, self.N.bar_vec(vec))

    def coords(self, vec, idx):
        """Coordinates of vec in the standard vectors idx (which must span it)."""
        cols = [self.std_vector(h) for h in idx]
        keys = sorted({k for c in cols for k in c})
        ks = set(keys)
        if any(k not in ks and not c.is_zero() for k, c in vec.items()):
            raise ValueError("vector leaves the span of the given standard vectors")
        A = [[c.get(k, ZERO) for c in cols] for k in keys]
        B = [[vec.get(k, ZERO)] for k in keys]
        X = solve(A, B)
        return {h: X[n][0] for n, h in enumerate(idx) if not X[n][0].is_zero()}

    def psi_row(self, h):
        """r_{h, .}: coordinates of Psi(std_h)."""
        got = self._coords.get(h)
        if got is None:
            got = self._coords[h] = self.coords(self.psi(self.std_vector(h)), self.downset(h))
        return got

    def r_matrix(self, idx):
        return {(h, h2): c for h in idx for h2, c in self.psi_row(h).items()}

    def element(self, h, verify=True):
        got = self._cb.get(h)
        if got is not None:
            return got
        idx = self.downset(h)
        r = self.r_matrix(idx)
        p = semilinear_solve(idx, lambda a, b: partial_order_leq(b, a), r)
        coeffs = {h3: c for (h1, h3), c in p.items() if h1 == h}
        vec = {}
        for h3, c in coeffs.items():
            vadd(vec, self.std_vector(h3), c)
        if verify and not _vec_eq(self.psi(vec), vec):
            raise ArithmeticError("canonical element not Psi-fixed at %s" % (h,))
        e = CBElement(h, coeffs, vec, lam=self.lam, lamp=self.lamp,
                      labels=(self.provider.label(*h.b), self.provider.label(*h.bp)))
        self._cb[h] = e
        return e

    def canonical(self, verify=True):
        return [self.element(h, verify) for d, idx in sorted(self.blocks().items()) for h in idx]


def _diff(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _weights_upto(M, depth):
    return [nu for nu in M.alg.weights_upto(depth) if M.dim(nu)]


def _vec_eq(a, b):
    keys = set(a) | set(b)
    return all((a.get(k, ZERO) - b.get(k, ZERO)).is_zero() for k in keys)


def psi(alg, lam, lamp, vec):
    return NCanonical(alg, lam, lamp).psi(vec)


def cb_of_N(alg, lam, lamp, provider=None, depth=None):
    return NCanonical(alg, lam, lamp, provider, depth).canonical()


# cancellation maps ---------------------------------------------------------------

class KeyMap:
    """Linear map given by its values on basis keys."""

    def __init__(self, source, target, on_key):
        self.source, self.target = source, target
        self._f = on_key
        self._cache = {}

    def on_key(self, key):
        r = self._cache.get(key)
        if r is None:
            r = self._cache[key] = self._f(key)
        return r

    def __call__(self, vec):
        out = {}
        for k, c in vec.items():
            vadd(out, self.on_key(k), c)
        return {k: c for k, c in out.items() if not c.is_zero()}


def _origin(datum):
    return (datum.zero(), 0)


def chi_split(alg, lam, lamp):
    """V(lam + lam') -> V(lam) (x) V(lam'), eta'' -> eta (x) eta'."""
    src = HWModule(alg, tuple(a + b for a, b in zip(lam, lamp)))
    tgt = TensorModule(HWModule(alg, lam), HWModule(alg, lamp))
    o = _origin(alg.datum)
    base = {(o, o): ONE}
    return KeyMap(src, tgt, lambda key: tgt.act_felem(3, "F", src.lift(key), base))


def chi4_split(alg, lam, lamp):
    """omega V(lam + lam') -> omega V(lam') (x) omega V(lam), xi'' -> xi' (x) xi."""
    src = OmegaTwist(HWModule(alg, tuple(a + b for a, b in zip(lam, lamp))))
    tgt = TensorModule(OmegaTwist(HWModule(alg, lamp)), OmegaTwist(HWModule(alg, lam)))
    o = _origin(alg.datum)
    base = {(o, o): ONE}
    return KeyMap(src, tgt, lambda key: tgt.act_felem(3, "E", src.base.lift(key), base))


def bold_p(datum, nu):
    """sum_{s<t} p(i_s) p(i_t) for any ordering of nu."""
    P = sum(n * p for n, p in zip(nu, datum.parity))
    return P * (P - 1) // 2


def pairing_factor(datum, nu):
    """[x, y] / (x, y) on V(lam)_{lam - nu}."""
    sign = -1 if sum(nu) % 2 else 1
    return pipow(bold_p(datum, nu) + datum.pi_exp(nu)) * datum.vnu(nu) * sign


class Contraction:
    """delta_lam : N(lam, lam) -> Q(v)^pi, the U-map with eta (x) xi -> 1."""

    def __init__(self, alg, lam):
        self.alg = alg
        self.V = HWModule(alg, lam)
        self.N = TensorModule(self.V, OmegaTwist(self.V))

    def on_key(self, key):
        (n1, a), (n2, b) = key
        if n1 != n2:
            return ZERO
        G = self.V.gram(n1)
        return pairing_factor(self.alg.datum, n1) * G[a][b]

    def __call__(self, vec):
        s = ZERO
        for k, c in vec.items():
            v = self.on_key(k)
            if not v.is_zero():
                s = s + c * v
        return s


def delta_contract(alg, lam):
    return Contraction(alg, lam)


class TMap:
    """t = (1 (x) delta_lam' (x) 1) o (chi (x) chi_4) : N(lam+lam', lam'+lam'') -> N(lam, lam'')."""

    def __init__(self, alg, lam, lamp, lampp):
        self.alg = alg
        add = lambda a, b: tuple(x + y for x, y in zip(a, b))
        self.source = N_module(alg, add(lam, lamp), add(lamp, lampp))
        self.target = N_module(alg, lam, lampp)
        self.chi = chi_split(alg, lam, lamp)
        self.chi4 = chi4_split(alg, lampp, lamp)
        self.delta = Contraction(alg, lamp)
        self._cache = {}

    def on_key(self, key):
        r = self._cache.get(key)
        if r is not None:
            return r
        k1, k2 = key
        left = self.chi.on_key(k1)
        right = self.chi4.on_key(k2)
        out = {}
        for (a, b), ca in left.items():
            for (c, d), cc in right.items():
                dv = self.delta.on_key((b, c))
                if not dv.is_zero():
                    vadd(out, {(a, d): ca * cc * dv})
        r = self._cache[key] = {k: c for k, c in out.items() if not c.is_zero()}
        return r

    def __call__(self, vec):
        out = {}
        for k, c in vec.items():
            vadd(out, self.on_key(k), c)
        return {k: c for k, c in out.items() if not c.is_zero()}


def t_map(alg, lam, lamp, lampp):
    return TMap(alg, lam, lamp, lampp)


# canonical basis of U-dot --------------------------------------------------------

def _udot_mono(alg, b1, b2, zeta):
    t = {}
    for x, c1 in b1.terms.items():
        for y, c2 in b2.terms.items():
            t[(x, y, tuple(zeta))] = c1 * c2
    return U.UDot(alg, t, "mp")


def stabilization_pair(datum, zeta, hb, hb2, shift=0):
    """(lam, lam'') with lam - lam'' = zeta, <i,lam> > hb and <i,lam''> > hb2."""
    coords = [max(hb, hb2 + datum.lam_i(i, zeta)) + 1 + shift for i in range(datum.rank)]
    lam = datum.weight_from_coords(coords)
    return lam, tuple(a - b for a, b in zip(lam, zeta))


class UDotCanonical:
    def __init__(self, alg, provider=None):
        self.alg = alg
        self.datum = alg.datum
        self.provider = provider or provider_for(alg)
        self._n = {}

    def ncanonical(self, lam, lamp):
        key = (tuple(lam), tuple(lamp))
        nc = self._n.get(key)
        if nc is None:
            nc = self._n[key] = NCanonical(self.alg, lam, lamp, self.provider)
        return nc

    def lift(self, h, zeta, lam, lamp):
        """The u in P(ht b, ht b'') with u (eta (x) xi) = (b <> b'')_{lam, lam''}."""
        nc = self.ncanonical(lam, lamp)
        target = nc.element(h)
        (n1, _), (n2, _) = h.b, h.bp
        diff = tuple(a - b for a, b in zip(n1, n2))
        cols, labels = [], []
        for m1 in self.alg.weights_upto(sum(n1)):
            m2 = tuple(a - d for a, d in zip(m1, diff))
            if min(m2) < 0 or sum(m2) > sum(n2):
                continue
            for k1, b1 in enumerate(self.provider.elements(m1)):
                for k2, b2 in enumerate(self.provider.elements(m2)):
                    u = _udot_mono(self.alg, b1, b2, zeta)
                    cols.append((u, U.act_on_family(u, nc.N)))
                    labels.append(PiPairIndex((m1, k1), (m2, k2)))
        keys = sorted({k for _, v in cols for k in v} | set(target.vector))
        A = [[v.get(k, ZERO) for _, v in cols] for k in keys]
        B = [[target.vector.get(k, ZERO)] for k in keys]
        try:
            X = solve(A, B)
        except SingularSystem as exc:
            raise ArithmeticError("lift of %s not unique: %s" % (h, exc))
        u = U.UDot(self.alg, {}, "mp")
        coeffs = {}
        for n, (mono, _) in enumerate(cols):
            c = X[n][0]
            if not c.is_zero():
                u = u + mono.scale(c)
                coeffs[labels[n]] = c
        return u, coeffs

    def element(self, h, zeta, verify=True):
        zeta = tuple(zeta)
        hb, hb2 = h.heights()
        lam, lamp = stabilization_pair(self.datum, zeta, hb, hb2)
        u, coeffs = self.lift(h, zeta, lam, lamp)
        if verify:
            rho = self.datum.rho_hat()
            lam2 = tuple(a + b for a, b in zip(lam, rho))
            lamp2 = tuple(a + b for a, b in zip(lamp, rho))
            u2, _ = self.lift(h, zeta, lam2, lamp2)
            if not (u2 == u):
                raise ArithmeticError("U-dot canonical element of %s depends on (lam, lam'')" % (h,))
            if not (U.auto_udot("bar", u) == u):
                raise ArithmeticError("U-dot canonical element of %s is not bar-invariant" % (h,))
            if coeffs.get(h) != ONE:
                raise ArithmeticError("leading coefficient of %s is not 1" % (h,))
        return CBElement(h, coeffs, u, zeta=zeta,
                         labels=(self.provider.label(*h.b), self.provider.label(*h.bp)))

    def pairs(self, height):
        for n1 in self.alg.weights_upto(height):
            for n2 in self.alg.weights_upto(height - sum(n1)):
                for k1 in range(len(self.provider.elements(n1))):
                    for k2 in range(len(self.provider.elements(n2))):
                        yield PiPairIndex((n1, k1), (n2, k2))

    def block(self, zeta, height, verify=True):
        return [self.element(h, zeta, verify) for h in self.pairs(height)]


def cb_of_udot(alg, zeta, height, provider=None, verify=True):
    return UDotCanonical(alg, provider).block(zeta, height, verify)
