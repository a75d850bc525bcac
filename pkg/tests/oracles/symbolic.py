"""sympy reference for (v, pi)-scalars, evaluated separately at pi = 1 and pi = -1."""
import sympy as sp

v = sp.Symbol("v")


def to_sympy(r):
    """A RatFunc as a sympy expression in v."""
    num = sum(sp.Rational(int(c.p), int(c.q)) * v ** k for k, c in enumerate(r.num.coeffs()))
    den = sum(sp.Rational(int(c.p), int(c.q)) * v ** k for k, c in enumerate(r.den.coeffs()))
    return num * v ** r.shift / den


def same(r, expr):
    return sp.simplify(to_sympy(r) - expr) == 0


def components(x):
    return {1: x.plus, -1: x.minus}


def qint(n, d, pi):
    pd = pi ** d
    return ((pd * v ** d) ** n - v ** (-d * n)) / (pd * v ** d - v ** (-d))


def qfact(n, d, pi):
    out = sp.Integer(1)
    for k in range(1, n + 1):
        out *= qint(k, d, pi)
    return out


def qbinom(n, k, d, pi):
    return sp.cancel(qfact(n, d, pi) / (qfact(k, d, pi) * qfact(n - k, d, pi)))


def bar(expr, pi):
    return expr.subs(v, pi / v)


def dagger(expr, pi):
    return expr.subs(v, pi * v)
