"""Anisotropic super Cartan data and their root data.

Weights live in X and coweights in Y, both stored as integer tuples; the
pairing <y, x> is given by an integer matrix.  Elements of Z[I] ("nu") are
tuples indexed by I.
"""
import json
from itertools import product

from .coeffring import pipow, vpow


class DatumError(ValueError):
    pass


class CartanDatum:
    def __init__(self, dot, parity, names=None):
        self.dot = [list(map(int, row)) for row in dot]
        self.parity = [int(p) % 2 for p in parity]
        self.rank = len(self.dot)
        self.names = list(names) if names is not None else list(range(1, self.rank + 1))

    @property
    def d(self):
        return [self.dot[i][i] // 2 for i in range(self.rank)]

    def a(self, i, j):
        return 2 * self.dot[i][j] // self.dot[i][i]

    def cartan_matrix(self):
        return [[self.a(i, j) for j in range(self.rank)] for i in range(self.rank)]

    def validate(self):
        problems = []
        r = self.rank
        if any(len(row) != r for row in self.dot) or len(self.parity) != r:
            return ["shape: dot must be square and parity of matching length"]
        for i in range(r):
            for j in range(r):
                if self.dot[i][j] != self.dot[j][i]:
                    problems.append("dot not symmetric at (%d,%d)" % (i, j))
        for i in range(r):
            ii = self.dot[i][i]
            if ii <= 0 or ii % 2:
                problems.append("(a) i.i/2 not a positive integer for i=%s" % self.names[i])
                continue
            for j in range(r):
                if i == j:
                    continue
                num = 2 * self.dot[i][j]
                if num % ii or num > 0:
                    problems.append("(b) 2 i.j/i.i not in Z_{<=0} for (%s,%s)" % (self.names[i], self.names[j]))
                elif self.parity[i] == 1 and (num // ii) % 2:
                    problems.append("(c) odd %s has odd a_ij with j=%s" % (self.names[i], self.names[j]))
            if (ii // 2 - self.parity[i]) % 2:
                problems.append("(d) d_i not congruent to p(i) mod 2 for i=%s" % self.names[i])
        if not any(self.parity):
            problems.append("no odd simple root")
        return problems


class RootDatum:
    """Cartan datum together with Y, X and the pairing."""

    def __init__(self, cartan, X_rank, Y_rank, pairing, embed_X, embed_Y, name=None):
        self.cartan = cartan
        self.X_rank = X_rank
        self.Y_rank = Y_rank
        self.pairing = [list(map(int, row)) for row in pairing]
        self.embed_X = [tuple(map(int, row)) for row in embed_X]
        self.embed_Y = [tuple(map(int, row)) for row in embed_Y]
        self.name = name
        self.rank = cartan.rank
        self.d = cartan.d
        self.parity = cartan.parity

    # pairing
    def pair(self, mu, lam):
        if len(mu) != self.Y_rank or len(lam) != self.X_rank:
            raise DatumError("dimension mismatch in pairing")
        return sum(mu[a] * self.pairing[a][b] * lam[b]
                   for a in range(self.Y_rank) for b in range(self.X_rank))

    def lam_i(self, i, lam):
        """<i, lambda>."""
        return self.pair(self.embed_Y[i], lam)

    def coroot(self, nu):
        return tuple(sum(nu[i] * self.embed_Y[i][a] for i in range(self.rank)) for a in range(self.Y_rank))

    def root(self, nu):
        """nu' in X."""
        return tuple(sum(nu[i] * self.embed_X[i][b] for i in range(self.rank)) for b in range(self.X_rank))

    def tilde(self, nu):
        return self.coroot([self.d[i] * nu[i] for i in range(self.rank)])

    def pair_tilde(self, nu, lam):
        """<nu~, lambda>."""
        return sum(self.d[i] * nu[i] * self.lam_i(i, lam) for i in range(self.rank) if nu[i])

    def dot(self, nu, mu):
        c = self.cartan.dot
        return sum(nu[i] * mu[j] * c[i][j] for i in range(self.rank) for j in range(self.rank))

    def ht(self, nu):
        return sum(nu)

    def par(self, nu):
        return sum(n * p for n, p in zip(nu, self.parity)) % 2

    def pi_exp(self, nu):
        """exponent e with pi_nu = pi^e."""
        return sum(self.d[i] * nu[i] for i in range(self.rank))

    def vnu(self, nu):
        return vpow(sum(self.d[i] * nu[i] for i in range(self.rank)))

    def pinu(self, nu):
        return pipow(self.pi_exp(nu))

    def unit(self, i):
        return tuple(1 if k == i else 0 for k in range(self.rank))

    def zero(self):
        return (0,) * self.rank

    def zero_y(self):
        return (0,) * self.Y_rank

    def is_dominant(self, lam):
        return all(self.lam_i(i, lam) >= 0 for i in range(self.rank))

    def weight_add(self, lam, mu, c=1):
        return tuple(a + c * b for a, b in zip(lam, mu))

    def minus_root(self, lam, nu):
        """lam - nu'."""
        return self.weight_add(lam, self.root(nu), -1)

    def plus_root(self, lam, nu):
        return self.weight_add(lam, self.root(nu), 1)

    def rho_hat(self):
        """A weight with <i, rho_hat> = 1 for every i (simply-connected data)."""
        for lam in product(range(-2, 3), repeat=self.X_rank):
            if all(self.lam_i(i, lam) == 1 for i in range(self.rank)):
                return tuple(lam)
        raise DatumError("no weight with all <i,.> = 1 in search box")

    def weight_from_coords(self, coords):
        """Weight with prescribed values <i, lam> (simply-connected data only)."""
        coords = tuple(coords)
        if not self.simply_connected():
            raise DatumError("weight_from_coords needs a simply-connected datum")
        return coords

    def simply_connected(self):
        r = self.rank
        if self.X_rank != r or self.Y_rank != r:
            return False
        return all(self.lam_i(i, tuple(1 if b == j else 0 for b in range(r))) == (1 if i == j else 0)
                   for i in range(r) for j in range(r))

    def validate(self):
        problems = list(self.cartan.validate())
        r = self.rank
        if len(self.pairing) != self.Y_rank or any(len(row) != self.X_rank for row in self.pairing):
            problems.append("pairing matrix has wrong shape")
            return problems
        if len(self.embed_X) != r or len(self.embed_Y) != r:
            problems.append("embeddings have wrong length")
            return problems
        for i in range(r):
            for j in range(r):
                if self.pair(self.embed_Y[i], self.embed_X[j]) != self.cartan.a(i, j):
                    problems.append("<%s, %s'> != a_ij" % (self.cartan.names[i], self.cartan.names[j]))
        if _rank(self.embed_Y) < r:
            problems.append("not Y-regular")
        if self.X_rank == self.Y_rank and abs(_det(self.pairing)) != 1:
            problems.append("pairing is not perfect")
        return problems

    def x_regular(self):
        return _rank(self.embed_X) == self.rank

    def to_json(self):
        return {
            "name": self.name,
            "I": list(self.cartan.names),
            "dot": self.cartan.dot,
            "parity": self.cartan.parity,
            "X_rank": self.X_rank,
            "Y_rank": self.Y_rank,
            "pairing": self.pairing,
            "embed_X": [list(x) for x in self.embed_X],
            "embed_Y": [list(y) for y in self.embed_Y],
        }

    @classmethod
    def from_json(cls, d):
        try:
            cart = CartanDatum(d["dot"], d["parity"], d.get("I"))
            return cls(cart, int(d["X_rank"]), int(d["Y_rank"]), d["pairing"],
                       d["embed_X"], d["embed_Y"], name=d.get("name"))
        except (KeyError, TypeError) as exc:
            raise DatumError("malformed datum: %s" % exc)

    def __repr__(self):
        return "RootDatum(%s)" % (self.name or self.cartan.dot)


def _rank(rows):
    from fractions import Fraction
    m = [[Fraction(x) for x in row] for row in rows]
    rk = 0
    ncol = len(m[0]) if m else 0
    for c in range(ncol):
        piv = next((r for r in range(rk, len(m)) if m[r][c] != 0), None)
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        for r in range(len(m)):
            if r != rk and m[r][c] != 0:
                f = m[r][c] / m[rk][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[rk])]
        rk += 1
    return rk


def _det(m):
    from fractions import Fraction
    a = [[Fraction(x) for x in row] for row in m]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return det


def simply_connected(cartan, name=None):
    """X = weight lattice, Y = coroot lattice; i' is the i-th column of the Cartan matrix."""
    r = cartan.rank
    A = cartan.cartan_matrix()
    eye = [[1 if a == b else 0 for b in range(r)] for a in range(r)]
    embed_X = [[A[k][i] for k in range(r)] for i in range(r)]
    return RootDatum(cartan, r, r, eye, embed_X, eye, name=name)


def osp_1_2n(n):
    """B_n datum with the short simple root odd (node 0 short, chain)."""
    dot = [[0] * n for _ in range(n)]
    for i in range(n):
        dot[i][i] = 2 if i == 0 else 4
        if i + 1 < n:
            dot[i][i + 1] = dot[i + 1][i] = -2
    parity = [1] + [0] * (n - 1)
    return simply_connected(CartanDatum(dot, parity), name="osp(1|%d)" % (2 * n))


BUILTINS = {"osp(1|2)": lambda: osp_1_2n(1), "osp(1|4)": lambda: osp_1_2n(2)}


def builtin(name):
    try:
        return BUILTINS[name]()
    except KeyError:
        raise DatumError("unknown builtin datum %r (known: %s)" % (name, ", ".join(BUILTINS)))


def load(spec):
    """Builtin name or path to a JSON datum file."""
    if spec in BUILTINS:
        return builtin(spec)
    try:
        with open(spec) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise DatumError("cannot read datum %r: %s" % (spec, exc))
    rd = RootDatum.from_json(data)
    problems = rd.validate()
    if problems:
        raise DatumError("invalid datum: " + "; ".join(problems))
    return rd


def validate(datum):
    return datum.validate()
