import pytest
from hypothesis import given, strategies as st

from coverquant.classical import Laurent, SL2Tensor, canonical_basis, leq, qfact, qint, solve_theta

laurents = st.dictionaries(st.integers(-5, 5), st.integers(-4, 4), max_size=4).map(Laurent)


@given(laurents, laurents, laurents)
def test_ring_laws(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a - a).is_zero()


@given(laurents, laurents)
def test_bar_and_division(a, b):
    assert a.bar().bar() == a
    assert (a * b).bar() == a.bar() * b.bar()
    if not b.is_zero():
        assert (a * b).divide(b) == a


def test_inexact_division():
    with pytest.raises(ArithmeticError):
        Laurent({0: 1}).divide(Laurent({1: 1, -1: 1}))
    with pytest.raises(ZeroDivisionError):
        Laurent({0: 1}).divide(Laurent())


def test_quantum_integers():
    assert qint(3) == Laurent({2: 1, 0: 1, -2: 1})
    assert qint(-2) == -qint(2)
    assert qfact(3) == qint(2) * qint(3)
    assert repr(Laurent()) == "0"


def test_theta_coefficients():
    c = solve_theta(SL2Tensor(3, 3))
    assert c[0] == Laurent({0: 1})
    assert c[1] == Laurent({1: 1, -1: -1})
    # v^binom(n,2) (v - v^-1)^n [n]! at n = 2
    assert c[2] == Laurent({4: 1, 2: -1, 0: -1, -2: 1})


def test_partial_order():
    assert leq((0, 0), (1, 1)) and leq((1, 1), (1, 1))
    assert not leq((1, 1), (0, 0)) and not leq((0, 1), (1, 1))


def test_canonical_basis_small():
    cb = canonical_basis(1, 1)
    assert cb[(1, 1)] == {(1, 1): Laurent({0: 1}), (0, 0): Laurent({1: 1})}
    assert cb[(0, 1)] == {(0, 1): Laurent({0: 1})}
    cb = canonical_basis(2, 1)
    assert cb[(1, 1)] == {(1, 1): Laurent({0: 1}), (0, 0): Laurent({2: 1})}
    assert cb[(2, 1)] == {(2, 1): Laurent({0: 1}), (1, 0): Laurent({1: 1})}


def test_canonical_basis_shape():
    for a, b in [(2, 2), (3, 1)]:
        cb = canonical_basis(a, b)
        assert len(cb) == (a + 1) * (b + 1)
        for h, row in cb.items():
            assert row[h] == Laurent({0: 1})
            assert all(min(x.c) > 0 for k, x in row.items() if k != h)
