"""Scalars for the covering group: Q(v)^pi stored through the idempotents
eps+ = (1+pi)/2 and eps- = (1-pi)/2.

Every scalar is a pair (plus, minus) of rational functions in v.  On the
plus side pi acts as 1, on the minus side as -1, so all pi-bookkeeping is a
sign flip per component.
"""
from fractions import Fraction
from functools import lru_cache

import flint

_fq = flint.fmpq_poly
_ONEP = _fq([1])


def _val(p):
    for k, c in enumerate(p.coeffs()):
        if c != 0:
            return k
    return 0


def _key(p):
    return tuple(str(c) for c in p.coeffs())


class RatFunc:
    """v^shift * num(v) / den(v) with num(0), den(0) nonzero, den monic, coprime."""

    __slots__ = ("num", "den", "shift", "_h")

    def __init__(self, num, den=None, shift=0, _canon=False):
        if _canon:
            self.num, self.den, self.shift = num, den, shift
            self._h = None
            return
        if den is None:
            den = _ONEP
        if num.is_zero():
            self.num, self.den, self.shift = _fq([]), _ONEP, 0
            self._h = None
            return
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        a = _val(num)
        if a:
            num = num.right_shift(a)
        b = _val(den)
        if b:
            den = den.right_shift(b)
        shift += a - b
        if den.degree() > 0:
            g = num.gcd(den)
            if g.degree() > 0:
                num = num // g
                den = den // g
        lc = den.leading_coefficient()
        if lc != 1:
            num = num / lc
            den = den / lc
        self.num, self.den, self.shift = num, den, shift
        self._h = None

    # constructors
    @classmethod
    def const(cls, c):
        return cls(_fq([c]))

    @classmethod
    def mono(cls, n, c=1):
        if c == 0:
            return cls(_fq([]))
        return cls(_fq([c]), _ONEP, n, _canon=True)

    @classmethod
    def from_laurent(cls, d):
        d = {k: c for k, c in d.items() if c != 0}
        if not d:
            return cls(_fq([]))
        lo = min(d)
        coeffs = [0] * (max(d) - lo + 1)
        for k, c in d.items():
            c = Fraction(c)
            coeffs[k - lo] = flint.fmpq(c.numerator, c.denominator)
        return cls(_fq(coeffs), _ONEP, lo, _canon=True)

    # predicates
    def is_zero(self):
        return self.num.is_zero()

    def is_laurent(self):
        return self.den.degree() == 0

    def is_integral(self):
        """Laurent polynomial with integer coefficients."""
        return self.is_laurent() and all(c.q == 1 for c in self.num.coeffs())

    def valuation(self):
        if self.is_zero():
            return None
        return self.shift

    def laurent(self):
        if not self.is_laurent():
            raise ValueError("not a Laurent polynomial: %s" % self)
        out = {}
        for k, c in enumerate(self.num.coeffs()):
            if c != 0:
                out[k + self.shift] = Fraction(int(c.p), int(c.q))
        return out

    # arithmetic
    def __add__(self, other):
        if not isinstance(other, RatFunc):
            other = RatFunc.const(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        m = min(self.shift, other.shift)
        n1 = self.num.left_shift(self.shift - m)
        n2 = other.num.left_shift(other.shift - m)
        if self.den == other.den:
            return RatFunc(n1 + n2, self.den, m)
        return RatFunc(n1 * other.den + n2 * self.den, self.den * other.den, m)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, self.shift, _canon=True)

    def __sub__(self, other):
        if not isinstance(other, RatFunc):
            other = RatFunc.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return RatFunc.const(other) - self

    def __mul__(self, other):
        if not isinstance(other, RatFunc):
            if other == 0:
                return RatFunc(_fq([]))
            return RatFunc(self.num * other, self.den, self.shift, _canon=True)
        if self.is_zero() or other.is_zero():
            return RatFunc(_fq([]))
        if self.den.degree() == 0 and other.den.degree() == 0:
            return RatFunc(self.num * other.num, _ONEP, self.shift + other.shift, _canon=True)
        return RatFunc(self.num * other.num, self.den * other.den, self.shift + other.shift)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RatFunc(self.den, self.num, -self.shift)

    def __truediv__(self, other):
        if not isinstance(other, RatFunc):
            return RatFunc(self.num / other, self.den, self.shift)
        return self * other.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = RatFunc.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            other = RatFunc.const(other)
        return self.shift == other.shift and self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._h is None:
            self._h = hash((self.shift, _key(self.num), _key(self.den)))
        return self._h

    # substitutions
    def neg_v(self):
        """f(v) -> f(-v)."""
        n = _fq([c if k % 2 == 0 else -c for k, c in enumerate(self.num.coeffs())])
        d = _fq([c if k % 2 == 0 else -c for k, c in enumerate(self.den.coeffs())])
        if self.shift % 2:
            n = -n
        return RatFunc(n, d, self.shift)

    def inv_v(self):
        """f(v) -> f(1/v)."""
        if self.is_zero():
            return self
        n = _fq(list(reversed(self.num.coeffs())))
        d = _fq(list(reversed(self.den.coeffs())))
        return RatFunc(n, d, -self.shift - self.num.degree() + self.den.degree())

    def series(self, order):
        """Coefficients of v^k for k < order in the v-adic expansion."""
        out = {}
        if self.is_zero() or self.shift >= order:
            return out
        need = order - self.shift
        num = [Fraction(int(c.p), int(c.q)) for c in self.num.coeffs()]
        den = [Fraction(int(c.p), int(c.q)) for c in self.den.coeffs()]
        d0 = den[0]
        q = []
        for k in range(need):
            s = num[k] if k < len(num) else Fraction(0)
            for j in range(1, min(k, len(den) - 1) + 1):
                s -= den[j] * q[k - j]
            q.append(s / d0)
        for k, c in enumerate(q):
            if c != 0:
                out[k + self.shift] = c
        return out

    def __repr__(self):
        if self.is_laurent():
            return laurent_str(self.laurent())
        return "(%s)/(%s)" % (laurent_str(RatFunc(self.num).laurent(), shift=self.shift),
                              laurent_str(RatFunc(self.den).laurent()))


def laurent_str(d, shift=0):
    if not d:
        return "0"
    parts = []
    for k in sorted(d, reverse=True):
        c = d[k]
        e = k + shift
        if e == 0:
            m = str(c)
        else:
            vv = "v" if e == 1 else "v^%d" % e
            if c == 1:
                m = vv
            elif c == -1:
                m = "-" + vv
            else:
                m = "%s*%s" % (c, vv)
        parts.append(m)
    s = " + ".join(parts)
    return s.replace("+ -", "- ")


class PiScalar:
    """plus*eps+ + minus*eps-."""

    __slots__ = ("plus", "minus")

    def __init__(self, plus, minus=None):
        if not isinstance(plus, RatFunc):
            plus = RatFunc.const(plus)
        if minus is None:
            minus = plus
        elif not isinstance(minus, RatFunc):
            minus = RatFunc.const(minus)
        self.plus = plus
        self.minus = minus

    @classmethod
    def one(cls):
        return _ONE

    @classmethod
    def zero(cls):
        return _ZERO

    @classmethod
    def pi(cls):
        return _PI

    @classmethod
    def from_pair(cls, a, b):
        """a + pi*b for Laurent dicts a, b."""
        ra, rb = RatFunc.from_laurent(a), RatFunc.from_laurent(b)
        return cls(ra + rb, ra - rb)

    def comp(self, sign):
        return self.plus if sign > 0 else self.minus

    def is_zero(self):
        return self.plus.is_zero() and self.minus.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, o):
        if not isinstance(o, PiScalar):
            o = PiScalar(o)
        return PiScalar(self.plus + o.plus, self.minus + o.minus)

    __radd__ = __add__

    def __neg__(self):
        return PiScalar(-self.plus, -self.minus)

    def __sub__(self, o):
        if not isinstance(o, PiScalar):
            o = PiScalar(o)
        return PiScalar(self.plus - o.plus, self.minus - o.minus)

    def __rsub__(self, o):
        return PiScalar(o) - self

    def __mul__(self, o):
        if not isinstance(o, (PiScalar, RatFunc, int, Fraction)):
            return NotImplemented
        if not isinstance(o, PiScalar):
            if o == 1:
                return self
            return PiScalar(self.plus * o, self.minus * o)
        return PiScalar(self.plus * o.plus, self.minus * o.minus)

    __rmul__ = __mul__

    def __truediv__(self, o):
        if not isinstance(o, PiScalar):
            o = PiScalar(o)
        return PiScalar(self.plus / o.plus, self.minus / o.minus)

    def __rtruediv__(self, o):
        return PiScalar(o) / self

    def inverse(self):
        return PiScalar(self.plus.inverse(), self.minus.inverse())

    def __pow__(self, n):
        return PiScalar(self.plus ** n, self.minus ** n)

    def __eq__(self, o):
        if not isinstance(o, PiScalar):
            o = PiScalar(o)
        return self.plus == o.plus and self.minus == o.minus

    def __hash__(self):
        return hash((self.plus, self.minus))

    def bar(self):
        return PiScalar(self.plus.inv_v(), self.minus.inv_v().neg_v())

    def dagger(self):
        return PiScalar(self.plus, self.minus.neg_v())

    def is_laurent(self):
        return self.plus.is_laurent() and self.minus.is_laurent()

    def split(self):
        """(a, b) Laurent dicts with self = a + pi*b."""
        p, m = self.plus.laurent(), self.minus.laurent()
        a, b = {}, {}
        for k in set(p) | set(m):
            x, y = p.get(k, 0), m.get(k, 0)
            if x + y:
                a[k] = Fraction(x + y) / 2
            if x - y:
                b[k] = Fraction(x - y) / 2
        return a, b

    def in_A(self):
        """Membership in Z^pi[v, 1/v] (note: not just integral components)."""
        if not self.is_laurent():
            return False
        a, b = self.split()
        return all(Fraction(c).denominator == 1 for c in list(a.values()) + list(b.values()))

    def valuation(self):
        vals = [x.valuation() for x in (self.plus, self.minus) if not x.is_zero()]
        return min(vals) if vals else None

    def truncate_positive(self):
        """Part of a Laurent scalar in strictly positive v-degrees."""
        p = {k: c for k, c in self.plus.laurent().items() if k > 0}
        m = {k: c for k, c in self.minus.laurent().items() if k > 0}
        return PiScalar(RatFunc.from_laurent(p), RatFunc.from_laurent(m))

    def series(self, order):
        return self.plus.series(order), self.minus.series(order)

    def __repr__(self):
        if self.plus == self.minus:
            return "(%s)" % (self.plus,)
        return "(eps+: %s; eps-: %s)" % (self.plus, self.minus)

    def to_text(self):
        return "eps+: %s; eps-: %s" % (self.plus, self.minus)

    def to_json(self):
        return {"eps+": _rf_json(self.plus), "eps-": _rf_json(self.minus)}

    @classmethod
    def from_json(cls, d):
        return cls(_rf_from_json(d["eps+"]), _rf_from_json(d["eps-"]))


def _frac_json(c):
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else "%d/%d" % (c.numerator, c.denominator)


def _rf_json(f):
    if f.is_laurent():
        return {str(k): _frac_json(c) for k, c in sorted(f.laurent().items())}
    return {"num": _rf_json(RatFunc(f.num, None, f.shift)), "den": _rf_json(RatFunc(f.den))}


def _rf_from_json(d):
    if "num" in d:
        return _rf_from_json(d["num"]) / _rf_from_json(d["den"])
    return RatFunc.from_laurent({int(k): Fraction(c) for k, c in d.items()})


_ONE = PiScalar(RatFunc.const(1))
_ZERO = PiScalar(RatFunc.const(0))
_PI = PiScalar(RatFunc.const(1), RatFunc.const(-1))


def vpow(n, d=1):
    """v^(n*d)."""
    r = RatFunc.mono(n * d)
    return PiScalar(r, r)


def pipow(n):
    return _PI if n % 2 else _ONE


def pv(n, d=1):
    """(pi_d v_d)^n."""
    return pipow(n * d) * vpow(n, d)


def const(c):
    return PiScalar(RatFunc.const(c))


def bar(x):
    return x.bar()


def dagger(x):
    return x.dagger()


def specialize(x, sign):
    return x.comp(sign)


def _qfactor(l, d):
    # (pi_d v_d)^l - v_d^(-l)
    return pv(l, d) - vpow(-l, d)


@lru_cache(maxsize=None)
def qint(n, d=1):
    if n == 0:
        return _ZERO
    out = _qfactor(n, d) / _qfactor(1, d)
    assert out.is_laurent()
    return out


@lru_cache(maxsize=None)
def qfact(n, d=1):
    out = _ONE
    for l in range(1, n + 1):
        out = out * qint(l, d)
    return out


@lru_cache(maxsize=None)
def qbinom(n, k, d=1):
    if k < 0:
        raise ValueError("qbinom needs k >= 0")
    num, den = _ONE, _ONE
    for l in range(n - k + 1, n + 1):
        num = num * _qfactor(l, d)
    for m in range(1, k + 1):
        den = den * _qfactor(m, d)
    out = num / den
    assert out.is_laurent()
    return out


class GaussPi:
    """re + t*im with t^2 = -1, re and im in Q(v)^pi."""

    __slots__ = ("re", "im")

    def __init__(self, re, im=None):
        if not isinstance(re, PiScalar):
            re = const(re)
        self.re = re
        self.im = _ZERO if im is None else im

    @classmethod
    def tpow(cls, k):
        k %= 4
        return [GaussPi(_ONE), GaussPi(_ZERO, _ONE), GaussPi(-_ONE), GaussPi(_ZERO, -_ONE)][k]

    def is_zero(self):
        return self.re.is_zero() and self.im.is_zero()

    def __add__(self, o):
        o = _g(o)
        return GaussPi(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussPi(-self.re, -self.im)

    def __sub__(self, o):
        return self + (-_g(o))

    def __mul__(self, o):
        o = _g(o)
        return GaussPi(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conj(self):
        return GaussPi(self.re, -self.im)

    def __truediv__(self, o):
        o = _g(o)
        n = self * o.conj()
        d = o.re * o.re + o.im * o.im
        return GaussPi(n.re / d, n.im / d)

    def __eq__(self, o):
        o = _g(o)
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def t_exponent_over(self, other):
        """k with self == t^k * other, or None."""
        for k in range(4):
            if self == GaussPi.tpow(k) * other:
                return k
        return None

    def __repr__(self):
        return "GaussPi(%r + t*%r)" % (self.re, self.im)


def _g(x):
    if isinstance(x, GaussPi):
        return x
    if isinstance(x, PiScalar):
        return GaussPi(x)
    return GaussPi(const(x))


def _gauss_subst_poly(p):
    # p(-t v) = a(v) + t b(v)
    a, b = [], []
    for k, c in enumerate(p.coeffs()):
        r = k % 4
        a.append(c if r == 0 else (-c if r == 2 else 0))
        b.append(-c if r == 1 else (c if r == 3 else 0))
    return _fq(a), _fq(b)


def subst_tinv(f):
    """f(v) -> f(v/t) = f(-t v), returned as (re, im) rational functions."""
    if f.is_zero():
        return f, f
    nr, ni = _gauss_subst_poly(f.num)
    dr, di = _gauss_subst_poly(f.den)
    den = dr * dr + di * di
    re = RatFunc(nr * dr + ni * di, den, 0)
    im = RatFunc(ni * dr - nr * di, den, 0)
    # (-t)^shift
    s = f.shift
    mono = RatFunc.mono(s)
    re, im = re * mono, im * mono
    r = s % 4
    if r == 0:
        return re, im
    if r == 1:
        return im, -re
    if r == 2:
        return -re, -im
    return -im, re
