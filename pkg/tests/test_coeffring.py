from fractions import Fraction

import pytest
from hypothesis import given

from coverquant.coeffring import (GaussPi, PiScalar, RatFunc, bar, const, dagger, pipow, pv,
                                  qbinom, qint, specialize, subst_tinv, vpow)

from .strategies import a_elements, piscalars, ratfuncs

ONE, ZERO, PI = PiScalar.one(), PiScalar.zero(), PiScalar.pi()
v = vpow(1)


def lp(d):
    return RatFunc.from_laurent({k: Fraction(c) for k, c in d.items()})


# examples ------------------------------------------------------------------------

def test_bar_examples():
    assert bar(v) == PI * vpow(-1)
    assert bar(PI) == PI
    x = v - PI * vpow(-1)
    assert bar(x) == -x


def test_dagger_examples():
    assert dagger(v) == PI * v
    assert dagger(ONE) == ONE
    assert dagger(qint(3, 1)) == qint(3, 1)


def test_qint_and_qbinom_examples():
    assert qint(1, 1) == ONE
    assert qint(2, 1) == PI * v + vpow(-1)
    assert qbinom(2, 1, 1) == qint(2, 1)
    assert all(qbinom(n, 0, d) == ONE for n in range(6) for d in (1, 2))
    assert dagger(qbinom(4, 2, 1)) == qbinom(4, 2, 1)


def test_specialize_examples():
    assert specialize(PI, -1) == RatFunc.const(-1)
    assert specialize(qint(2, 1), 1) == lp({1: 1, -1: 1})
    assert specialize(qint(2, 1), -1) == lp({1: -1, -1: 1})


def test_qint_d2_uses_v_squared():
    assert qint(2, 2) == pv(1, 2) + vpow(-1, 2)
    assert qint(2, 2) == vpow(2) + vpow(-2)


def test_qbinom_rejects_negative_k():
    with pytest.raises(ValueError):
        qbinom(3, -1)


def test_text_and_json_roundtrip():
    x = PiScalar.from_pair({1: 2, -3: 1}, {0: 1})
    assert PiScalar.from_json(x.to_json()) == x
    y = (ONE - PI * vpow(2)).inverse()
    assert PiScalar.from_json(y.to_json()) == y
    assert x.to_text().startswith("eps+: ")


def test_in_A_needs_integral_split():
    # (1 + pi)/2 is the idempotent eps+: integral components, not in A
    e = PiScalar(RatFunc.const(1), RatFunc.const(0))
    assert e.plus.is_integral() and not e.in_A()
    assert PiScalar.from_pair({0: 1}, {1: 2}).in_A()


def test_series_of_geometric():
    g = (ONE - PI * vpow(2)).inverse()
    p, m = g.series(7)
    assert p == {0: 1, 2: 1, 4: 1, 6: 1}
    assert m == {0: 1, 2: -1, 4: 1, 6: -1}


def test_truncate_positive():
    x = PiScalar.from_pair({2: 1, 0: 3, -1: 1}, {1: 1})
    assert x.truncate_positive() == PiScalar.from_pair({2: 1}, {1: 1})


# properties ----------------------------------------------------------------------

@given(piscalars(), piscalars(), piscalars())
def test_ring_axioms(x, y, z):
    assert (x + y) * z == x * z + y * z
    assert (x * y) * z == x * (y * z)
    assert x * y == y * x
    assert x - x == ZERO


@given(piscalars(), piscalars())
def test_bar_is_a_ring_involution(x, y):
    assert bar(bar(x)) == x
    assert bar(x * y) == bar(x) * bar(y)
    assert bar(x + y) == bar(x) + bar(y)


@given(piscalars(), piscalars())
def test_dagger_is_a_ring_involution(x, y):
    assert dagger(dagger(x)) == x
    assert dagger(x * y) == dagger(x) * dagger(y)


@given(piscalars())
def test_bar_and_dagger_commute(x):
    assert bar(dagger(x)) == dagger(bar(x))


@given(piscalars())
def test_inverse(x):
    if x.plus.is_zero() or x.minus.is_zero():
        return
    assert x * x.inverse() == ONE


@given(a_elements())
def test_split_recovers_pair(x):
    a, b = x.split()
    assert PiScalar.from_pair(a, b) == x
    assert x.in_A()


@given(a_elements())
def test_semilinear_splitting(q):
    # q - bar(q) always splits as q' - bar(q') with q' positive
    q = q - bar(q)
    pos = q.truncate_positive()
    assert pos - bar(pos) == q


@given(ratfuncs(), ratfuncs())
def test_subst_tinv_is_multiplicative(f, g):
    fr, fi = subst_tinv(f)
    gr, gi = subst_tinv(g)
    hr, hi = subst_tinv(f * g)
    assert hr == fr * gr - fi * gi
    assert hi == fr * gi + fi * gr


def test_subst_tinv_of_v():
    # v -> -t v
    re, im = subst_tinv(RatFunc.mono(1))
    assert re.is_zero() and im == -RatFunc.mono(1)
    re, im = subst_tinv(RatFunc.mono(2))
    assert re == -RatFunc.mono(2) and im.is_zero()


@given(piscalars(), piscalars())
def test_gauss_field(x, y):
    a = GaussPi(x, y)
    norm = x * x + y * y
    if norm.plus.is_zero() or norm.minus.is_zero():
        return
    assert (a / a) == GaussPi(ONE)
    assert GaussPi.tpow(1) * GaussPi.tpow(1) == GaussPi(-ONE)
    assert (GaussPi.tpow(3) * a).t_exponent_over(a) == 3


def test_const_and_pipow():
    assert const(3) * pipow(2) == const(3)
    assert pipow(1) * pipow(1) == ONE
