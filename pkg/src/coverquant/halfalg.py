"""The half algebra f: words in theta_i modulo the super Serre relations.

Per weight nu we keep a basis of divided-power monomials (runs of equal
letters collapsed to theta_i^(a)); the underlying plain words are the
lexicographically smallest words that survive row reduction of the Serre
ideal.  Plain words are tuples of node indices, divided-power words are
tuples of (node, exponent) pairs.
"""
import hashlib
import json
import os
from functools import lru_cache

from .coeffring import PiScalar, RatFunc, pipow, qbinom, qfact, vpow
from .linalg import rref_rows


class HeightError(ValueError):
    pass


def run_length(word):
    out = []
    for i in word:
        if out and out[-1][0] == i:
            out[-1][1] += 1
        else:
            out.append([i, 1])
    return tuple((i, a) for i, a in out)


def plain(dword):
    return tuple(i for i, a in dword for _ in range(a))


def multiset_words(nu):
    """All words of weight nu, in increasing lexicographic order."""
    nu = list(nu)
    total = sum(nu)
    out = []
    cur = []

    def rec():
        if len(cur) == total:
            out.append(tuple(cur))
            return
        for i, n in enumerate(nu):
            if n:
                nu[i] -= 1
                cur.append(i)
                rec()
                cur.pop()
                nu[i] += 1

    rec()
    return out


def _leq(a, b):
    return all(x <= y for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def sub_weights(nu):
    """All mu with 0 <= mu <= nu."""
    out = [()]
    for n in nu:
        out = [m + (k,) for m in out for k in range(n + 1)]
    return out


class Component:
    def __init__(self, nu, basis, words, dscale, expansion):
        self.nu = nu
        self.basis = basis            # divided-power words
        self.words = words            # the matching plain words
        self.dscale = dscale          # plain word = dscale * divided-power word
        self.index = {b: k for k, b in enumerate(basis)}
        self.expansion = expansion    # plain word -> {k: coefficient}

    @property
    def dim(self):
        return len(self.basis)

    def __repr__(self):
        return "Component(%s, dim=%d)" % (self.nu, self.dim)


class FElem:
    """Element of f as a sparse map divided-power basis word -> PiScalar."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg, terms=None):
        self.alg = alg
        self.terms = {b: c for b, c in (terms or {}).items() if not c.is_zero()}

    def is_zero(self):
        return not self.terms

    def __add__(self, o):
        t = dict(self.terms)
        for b, c in o.terms.items():
            t[b] = t[b] + c if b in t else c
        return FElem(self.alg, t)

    def __neg__(self):
        return FElem(self.alg, {b: -c for b, c in self.terms.items()})

    def __sub__(self, o):
        return self + (-o)

    def __mul__(self, o):
        if isinstance(o, FElem):
            return self.alg.multiply(self, o)
        return FElem(self.alg, {b: c * o for b, c in self.terms.items()})

    def __rmul__(self, o):
        return FElem(self.alg, {b: o * c for b, c in self.terms.items()})

    def __eq__(self, o):
        if not isinstance(o, FElem):
            return NotImplemented
        return (self - o).is_zero()

    __hash__ = None

    def weights(self):
        return sorted({self.alg.weight(b) for b in self.terms})

    def part(self, nu):
        return FElem(self.alg, {b: c for b, c in self.terms.items() if self.alg.weight(b) == nu})

    def coords(self, nu):
        comp = self.alg.component(nu)
        out = [PiScalar.zero()] * comp.dim
        for b, c in self.terms.items():
            if self.alg.weight(b) == nu:
                out[comp.index[b]] = c
        return out

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join("%r*%s" % (c, self.alg.dword_str(b)) for b, c in sorted(self.terms.items()))


class HalfAlgebra:
    def __init__(self, datum, max_height=8, cache_dir=None):
        self.datum = datum
        self.cache_dir = cache_dir if cache_dir is not None else os.environ.get("COVERQUANT_CACHE_DIR")
        self.rank = datum.rank
        self.max_height = max_height
        self._comps = {}
        self._prod = {}
        self._dcache = {}
        self._gram = {}
        c = datum.cartan
        self.dot = c.dot
        self.d = c.d
        self.par = c.parity

    # bookkeeping
    def weight(self, dword):
        w = [0] * self.rank
        for i, a in dword:
            w[i] += a
        return tuple(w)

    def word_weight(self, word):
        w = [0] * self.rank
        for i in word:
            w[i] += 1
        return tuple(w)

    def dword_str(self, dword):
        if not dword:
            return "1"
        return "".join("t%d" % (i + 1) + ("^(%d)" % a if a > 1 else "") for i, a in dword)

    def dscale(self, dword):
        out = PiScalar.one()
        for i, a in dword:
            if a > 1:
                out = out * qfact(a, self.d[i])
        return out

    # Serre relations
    def serre_element(self, i, j):
        """Free-algebra element {plain word: coefficient}."""
        if i == j:
            raise ValueError("serre_element needs i != j")
        a = self.datum.cartan.a(i, j)
        b = 1 - a
        pi_, pj = self.par[i], self.par[j]
        out = {}
        for k in range(b + 1):
            e = (k * (k - 1) // 2) * pi_ + k * pi_ * pj
            c = pipow(e) * qbinom(b, k, self.d[i])
            if k % 2:
                c = -c
            out[(i,) * (b - k) + (j,) + (i,) * k] = c
        return out

    def _serre_list(self):
        if not hasattr(self, "_serres"):
            self._serres = []
            for i in range(self.rank):
                for j in range(self.rank):
                    if i != j:
                        el = self.serre_element(i, j)
                        self._serres.append((self.word_weight(next(iter(el))), el))
        return self._serres

    # graded components
    def component(self, nu):
        nu = tuple(nu)
        comp = self._comps.get(nu)
        if comp is None:
            if sum(nu) > self.max_height:
                raise HeightError("weight %s exceeds height bound %d" % (nu, self.max_height))
            if any(n < 0 for n in nu):
                comp = Component(nu, [], [], [], {})
            else:
                comp = self._load(nu)
                if comp is None:
                    comp = self._build(nu)
                    self._store(comp)
            self._comps[nu] = comp
        return comp

    # persisted components, keyed by the Cartan datum
    def _cache_path(self, nu):
        if not self.cache_dir:
            return None
        c = self.datum.cartan
        key = hashlib.sha256(json.dumps([c.dot, c.parity]).encode()).hexdigest()[:16]
        return os.path.join(self.cache_dir, "f-" + key, "_".join(map(str, nu)) + ".json")

    def _load(self, nu):
        path = self._cache_path(nu)
        if not path or not os.path.exists(path):
            return None
        try:
            with open(path) as fh:
                d = json.load(fh)
            basis = [tuple(tuple(r) for r in b) for b in d["basis"]]
            words = [tuple(w) for w in d["words"]]
            expansion = {tuple(e["word"]): {k: PiScalar.from_json(c) for k, c in e["coords"]}
                         for e in d["expansion"]}
        except (OSError, ValueError, KeyError, TypeError):
            return None
        return Component(nu, basis, words, [self.dscale(b) for b in basis], expansion)

    def _store(self, comp):
        path = self._cache_path(comp.nu)
        if not path:
            return
        d = {"nu": list(comp.nu),
             "basis": [[list(r) for r in b] for b in comp.basis],
             "words": [list(w) for w in comp.words],
             "expansion": [{"word": list(w), "coords": [[k, c.to_json()] for k, c in sorted(e.items())]}
                           for w, e in sorted(comp.expansion.items())]}
        os.makedirs(os.path.dirname(path), exist_ok=True)
        tmp = path + ".%d.tmp" % os.getpid()
        with open(tmp, "w") as fh:
            json.dump(d, fh)
        os.replace(tmp, path)

    component_basis = component

    def _build(self, nu):
        words = multiset_words(nu)
        rows = []
        for snu, el in self._serre_list():
            if not _leq(snu, nu):
                continue
            rest = _sub(nu, snu)
            for mu in sub_weights(rest):
                xs = multiset_words(mu)
                ys = multiset_words(_sub(rest, mu))
                for x in xs:
                    for y in ys:
                        rows.append({x + w + y: c for w, c in el.items()})
        if not rows:
            basis_words = words
            exp_plain = {w: {w: (RatFunc.const(1), RatFunc.const(1))} for w in words}
        else:
            col = {w: k for k, w in enumerate(reversed(words))}
            byc = {k: w for w, k in col.items()}
            reduced = []
            for sign in (1, -1):
                rr = rref_rows([{col[w]: c.comp(sign) for w, c in row.items()} for row in rows])
                reduced.append(rr)
            if set(reduced[0]) != set(reduced[1]):
                raise ArithmeticError("pivot structure differs between pi = 1 and pi = -1 at %s" % (nu,))
            pivots = set(reduced[0])
            basis_words = [w for w in words if col[w] not in pivots]
            exp_plain = {}
            for w in words:
                c = col[w]
                if c not in pivots:
                    exp_plain[w] = {w: (RatFunc.const(1), RatFunc.const(1))}
                else:
                    rp, rm = reduced[0][c], reduced[1][c]
                    ent = {}
                    for cc in set(rp) | set(rm):
                        if cc == c:
                            continue
                        z = RatFunc.const(0)
                        ent[byc[cc]] = (-rp.get(cc, z), -rm.get(cc, z))
                    exp_plain[w] = ent
        basis = [run_length(w) for w in basis_words]
        scales = [self.dscale(b) for b in basis]
        kidx = {w: k for k, w in enumerate(basis_words)}
        expansion = {}
        for w, ent in exp_plain.items():
            out = {}
            for bw, (p, m) in ent.items():
                k = kidx[bw]
                c = PiScalar(p, m) * scales[k]
                if not c.is_zero():
                    out[k] = c
            expansion[w] = out
        return Component(nu, basis, basis_words, scales, expansion)

    def dim(self, nu):
        return self.component(nu).dim

    # elements
    def zero(self):
        return FElem(self, {})

    def one(self):
        return FElem(self, {(): PiScalar.one()})

    def basis_elem(self, dword):
        return FElem(self, {dword: PiScalar.one()})

    def expand_word(self, word, coeff=None):
        """Plain word (optionally times a scalar) as an element of f."""
        comp = self.component(self.word_weight(word))
        terms = {}
        for k, c in comp.expansion[tuple(word)].items():
            terms[comp.basis[k]] = c if coeff is None else c * coeff
        return FElem(self, terms)

    def theta(self, i):
        return self.basis_elem(((i, 1),))

    def divided_power(self, i, n):
        if n == 0:
            return self.one()
        return self.basis_elem(((i, n),))

    def from_dword(self, dword):
        """Element for an arbitrary divided-power word (not necessarily a basis word)."""
        dword = tuple((i, a) for i, a in dword if a)
        comp = self.component(self.weight(dword))
        if dword in comp.index:
            return self.basis_elem(dword)
        return self.expand_word(plain(dword), self.dscale(dword).inverse())

    def from_coords(self, nu, coords):
        comp = self.component(nu)
        return FElem(self, {comp.basis[k]: c for k, c in enumerate(coords) if not c.is_zero()})

    def _mul_basis(self, b1, b2):
        key = (b1, b2)
        r = self._prod.get(key)
        if r is None:
            if not b1:
                r = {b2: PiScalar.one()}
            elif not b2:
                r = {b1: PiScalar.one()}
            else:
                s = (self.dscale(b1) * self.dscale(b2)).inverse()
                r = self.expand_word(plain(b1) + plain(b2), s).terms
            self._prod[key] = r
        return r

    def multiply(self, x, y):
        out = {}
        for b1, c1 in x.terms.items():
            for b2, c2 in y.terms.items():
                c = c1 * c2
                for b, e in self._mul_basis(b1, b2).items():
                    t = e * c
                    out[b] = out[b] + t if b in out else t
        return FElem(self, out)

    # involutions
    def bar_f(self, x):
        return FElem(self, {b: c.bar() for b, c in x.terms.items()})

    def dagger_f(self, x):
        out = {}
        for b, c in x.terms.items():
            e = sum(self.d[i] * (a * (a - 1) // 2) for i, a in b)
            out[b] = pipow(e) * c.dagger()
        return FElem(self, out)

    def sigma(self, x):
        """Anti-automorphism reversing words (theta_i fixed)."""
        out = self.zero()
        for b, c in x.terms.items():
            rb = tuple(reversed(b))
            out = out + self.from_dword(rb) * c
        return out

    # differentials
    def _diff_word(self, i, word, side):
        """_ir (side='left') or r_i (side='right') on a plain word: {word: coeff}."""
        n = len(word)
        out = {}
        dot_i = self.dot[i]
        pi_ = self.par[i]
        if side == "left":
            par, wt = 0, 0
            for k in range(n):
                if word[k] == i:
                    c = pipow(par * pi_) * vpow(-wt)
                    w = word[:k] + word[k + 1:]
                    out[w] = out[w] + c if w in out else c
                par += self.par[word[k]]
                wt += dot_i[word[k]]
        else:
            par, wt = 0, 0
            for k in range(n - 1, -1, -1):
                if word[k] == i:
                    c = pipow(par * pi_) * vpow(-wt)
                    w = word[:k] + word[k + 1:]
                    out[w] = out[w] + c if w in out else c
                par += self.par[word[k]]
                wt += dot_i[word[k]]
        return out

    def _diff_basis(self, i, b, side):
        key = (i, b, side)
        r = self._dcache.get(key)
        if r is None:
            s = self.dscale(b).inverse()
            acc = self.zero()
            for w, c in self._diff_word(i, plain(b), side).items():
                acc = acc + self.expand_word(w, c * s)
            r = acc.terms
            self._dcache[key] = r
        return r

    def _diff(self, i, x, side):
        out = {}
        for b, c in x.terms.items():
            for bb, e in self._diff_basis(i, b, side).items():
                t = e * c
                out[bb] = out[bb] + t if bb in out else t
        return FElem(self, out)

    def diff_left(self, i, x):
        return self._diff(i, x, "left")

    def diff_right(self, i, x):
        return self._diff(i, x, "right")

    # bilinear form
    def c_i(self, i):
        d = self.d[i]
        return (PiScalar.one() - pipow(d) * vpow(2, d)).inverse()

    def gram(self, nu):
        nu = tuple(nu)
        g = self._gram.get(nu)
        if g is not None:
            return g
        comp = self.component(nu)
        n = comp.dim
        if sum(nu) == 0:
            g = [[PiScalar.one()]]
        else:
            g = [[None] * n for _ in range(n)]
            for k, w in enumerate(comp.words):
                i = w[0]
                rest = self.expand_word(w[1:])
                lower = _sub(nu, self.datum.unit(i))
                G = self.gram(lower)
                lcomp = self.component(lower)
                xr = rest.coords(lower)
                pre = self.c_i(i) * comp.dscale[k].inverse()
                for l, bl in enumerate(comp.basis):
                    y = FElem(self, self._diff_basis(i, bl, "left")).coords(lower)
                    s = PiScalar.zero()
                    for a in range(lcomp.dim):
                        if xr[a].is_zero():
                            continue
                        for bb in range(lcomp.dim):
                            if not y[bb].is_zero():
                                s = s + xr[a] * G[a][bb] * y[bb]
                    g[k][l] = pre * s
        self._gram[nu] = g
        return g

    def form_f(self, x, y):
        s = PiScalar.zero()
        ws = set(x.weights()) & set(y.weights())
        for nu in ws:
            G = self.gram(nu)
            xc, yc = x.coords(nu), y.coords(nu)
            for a, xa in enumerate(xc):
                if xa.is_zero():
                    continue
                for b, yb in enumerate(yc):
                    if not yb.is_zero():
                        s = s + xa * G[a][b] * yb
        return s

    def is_integral(self, x):
        return all(c.in_A() for c in x.terms.values())

    def weights_upto(self, height):
        """All nu in N[I] with ht nu <= height, by height then lexicographically."""
        out = []
        for h in range(height + 1):
            out.extend(sorted((nu for nu in _compositions(h, self.rank)), reverse=True))
        return out


@lru_cache(maxsize=None)
def _compositions(h, r):
    if r == 1:
        return ((h,),)
    out = []
    for k in range(h, -1, -1):
        for rest in _compositions(h - k, r - 1):
            out.append((k,) + rest)
    return tuple(out)
