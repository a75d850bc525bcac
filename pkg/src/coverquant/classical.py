"""Classical sl2 at pi = 1, built from scratch on Laurent polynomials.

Used as an independent cross-check of the covering-group engine: the module
V(a) (x) omegaV(b), the quasi-R-matrix for the coproduct
E -> E(x)K^-1 + 1(x)E, F -> F(x)1 + K(x)F solved by brute force, and the
canonical basis from the shared semi-linear solver.
"""
from .cbengine import semilinear_solve


class Laurent:
    """Element of Z[v, v^-1] as {exponent: coefficient}."""

    __slots__ = ("c",)

    def __init__(self, c=None):
        self.c = {e: x for e, x in (c or {}).items() if x}

    @classmethod
    def mono(cls, e, x=1):
        return cls({e: x})

    def is_zero(self):
        return not self.c

    def __add__(self, o):
        out = dict(self.c)
        for e, x in o.c.items():
            out[e] = out.get(e, 0) + x
        return Laurent(out)

    def __neg__(self):
        return Laurent({e: -x for e, x in self.c.items()})

    def __sub__(self, o):
        return self + (-o)

    def __mul__(self, o):
        if isinstance(o, int):
            return Laurent({e: x * o for e, x in self.c.items()})
        out = {}
        for e, x in self.c.items():
            for f, y in o.c.items():
                out[e + f] = out.get(e + f, 0) + x * y
        return Laurent(out)

    __rmul__ = __mul__

    def __eq__(self, o):
        return isinstance(o, Laurent) and self.c == o.c

    def __hash__(self):
        return hash(tuple(sorted(self.c.items())))

    def bar(self):
        return Laurent({-e: x for e, x in self.c.items()})

    def in_A(self):
        return True

    def truncate_positive(self):
        return Laurent({e: x for e, x in self.c.items() if e > 0})

    def divide(self, o):
        """Exact quotient; raises ArithmeticError if o does not divide self."""
        if o.is_zero():
            raise ZeroDivisionError("division by zero Laurent polynomial")
        num, q = Laurent(self.c), {}
        top = max(o.c)
        lead = o.c[top]
        floor = min(self.c, default=0) - min(o.c)
        while not num.is_zero():
            e = max(num.c)
            x, rem = divmod(num.c[e], lead)
            if rem or e - top < floor:
                raise ArithmeticError("inexact Laurent division")
            q[e - top] = q.get(e - top, 0) + x
            num = num - Laurent.mono(e - top, x) * o
        return Laurent(q)

    def __repr__(self):
        if not self.c:
            return "0"
        return " + ".join("%d*v^%d" % (x, e) for e, x in sorted(self.c.items()))


ONE = Laurent.mono(0)
ZERO = Laurent()


def qint(n):
    return Laurent({n - 1 - 2 * k: 1 for k in range(n)}) if n > 0 else -qint(-n) if n < 0 else ZERO


def qfact(n):
    out = ONE
    for k in range(1, n + 1):
        out = out * qint(k)
    return out


def _vadd(acc, vec, c=ONE):
    for k, x in vec.items():
        y = acc.get(k, ZERO) + x * c
        if y.is_zero():
            acc.pop(k, None)
        else:
            acc[k] = y
    return acc


class SL2Tensor:
    """V(a) (x) omegaV(b) with basis (k, l) = F^(k) eta (x) E^(l) xi."""

    def __init__(self, a, b):
        self.a, self.b = a, b

    def keys(self):
        return [(k, l) for k in range(self.a + 1) for l in range(self.b + 1)]

    def wt1(self, k):
        return self.a - 2 * k

    def wt2(self, l):
        return 2 * l - self.b

    # one factor at a time; each returns (new index, coefficient) or None
    def _E1(self, k):
        return (k - 1, qint(self.a - k + 1)) if k > 0 else None

    def _F1(self, k):
        return (k + 1, qint(k + 1)) if k < self.a else None

    def _E2(self, l):
        return (l + 1, qint(l + 1)) if l < self.b else None

    def _F2(self, l):
        return (l - 1, qint(self.b - l + 1)) if l > 0 else None

    def act(self, g, vec, barred=False):
        """Delta(g) or, with barred, the bar-conjugate coproduct."""
        s = -1 if barred else 1
        out = {}
        for (k, l), c in vec.items():
            if g == "E":
                # E (x) K^-s + 1 (x) E
                r = self._E1(k)
                if r:
                    _vadd(out, {(r[0], l): r[1] * Laurent.mono(-s * self.wt2(l))}, c)
                r = self._E2(l)
                if r:
                    _vadd(out, {(k, r[0]): r[1]}, c)
            else:
                # F (x) 1 + K^s (x) F
                r = self._F1(k)
                if r:
                    _vadd(out, {(r[0], l): r[1]}, c)
                r = self._F2(l)
                if r:
                    _vadd(out, {(k, r[0]): r[1] * Laurent.mono(s * self.wt1(k))}, c)
        return out

    def theta_term(self, n, vec):
        """E^(n) (x) F^(n) applied to vec."""
        out = {}
        for (k, l), c in vec.items():
            if k < n or l < n:
                continue
            x = c
            for j in range(n):
                x = x * qint(self.a - k + j + 1)
                x = x * qint(self.b - l + j + 1)
            x = x.divide(qfact(n)).divide(qfact(n))
            _vadd(out, {(k - n, l - n): x})
        return out


def solve_theta(M):
    """Coefficients c_n of Theta = sum c_n E^(n) (x) F^(n), found from
    Theta Delta-bar(u) = Delta(u) Theta on the basis of M, one n at a time."""
    top = min(M.a, M.b)
    eqs = []
    for key in M.keys():
        for g in "EF":
            lhs = [M.theta_term(n, M.act(g, {key: ONE}, barred=True)) for n in range(top + 1)]
            rhs = [M.act(g, M.theta_term(n, {key: ONE})) for n in range(top + 1)]
            terms = [_vadd(dict(x), y, -ONE) for x, y in zip(lhs, rhs)]
            for k in set().union(*terms):
                eqs.append([t.get(k, ZERO) for t in terms])
    c = [ONE]
    for n in range(1, top + 1):
        for row in eqs:
            if not row[n].is_zero() and all(x.is_zero() for x in row[n + 1:]):
                acc = ZERO
                for j in range(n):
                    acc = acc + row[j] * c[j]
                c.append((-acc).divide(row[n]))
                break
        else:
            raise ArithmeticError("no equation determines c_%d" % n)
    for row in eqs:
        acc = ZERO
        for x, y in zip(row, c):
            acc = acc + x * y
        if not acc.is_zero():
            raise ArithmeticError("Theta equations are inconsistent")
    return c


def psi(M, c, vec):
    barred = {k: x.bar() for k, x in vec.items()}
    out = {}
    for n, cn in enumerate(c):
        _vadd(out, M.theta_term(n, barred), cn)
    return out


def leq(p, q):
    if p[0] - p[1] != q[0] - q[1]:
        return False
    return p == q or (p[0] < q[0] and p[1] < q[1])


def canonical_basis(a, b):
    """{(k, l): {(k', l'): coefficient}} for V(a) (x) omegaV(b) at pi = 1."""
    M = SL2Tensor(a, b)
    c = solve_theta(M)
    keys = M.keys()
    r = {}
    for h in keys:
        for h2, x in psi(M, c, {h: ONE}).items():
            r[(h, h2)] = x
    p = semilinear_solve(keys, lambda x, y: leq(y, x), r, one=ONE)
    out = {}
    for (h, h2), x in p.items():
        out.setdefault(h, {})[h2] = x
    return out
