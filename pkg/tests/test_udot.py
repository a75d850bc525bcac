from itertools import product

import pytest
from hypothesis import given, strategies as st

from coverquant.coeffring import PiScalar, pipow, qbinom, vpow
from coverquant.repmod import N_module, vsub
from coverquant import udot as U

ONE = PiScalar.one()


def _ef_side(alg, lam, N, M):
    # E^(N) 1_lam F^(M), stored as E^(N) F^(M) 1_{lam + 2M}
    return U.from_word(alg, [("E", 0, N), ("F", 0, M)], (lam + 2 * M,))


def test_first_commutation_identity(f12):
    for lam, N, M in product(range(-4, 5), range(4), range(4)):
        rhs = U.UDot(f12, {}, "mp")
        for t in range(min(N, M) + 1):
            c = pipow(M * N - t * (t + 1) // 2) * qbinom(M + N + lam, t, 1)
            z = lam + 2 * M
            rhs = rhs + U.from_word(f12, [("F", 0, M - t), ("E", 0, N - t)], (z,)).scale(c)
        assert _ef_side(f12, lam, N, M) == rhs, (lam, N, M)


def _fe_rhs(alg, lam, N, M, coef):
    rhs = U.UDot(alg, {}, "pm")
    for t in range(min(N, M) + 1):
        z = lam - 2 * M
        word = [("E", 0, M - t), ("F", 0, N - t)]
        rhs = rhs + U.from_word(alg, word, (z,), "pm").scale(coef(t) * qbinom(M + N - lam, t, 1))
    return rhs


def test_second_commutation_identity(f12):
    # F^(N) 1_lam E^(M) = sum_t pi^{MN - binom(t+1,2) - t + t lam} [M+N-lam, t] E^(M-t) F^(N-t) 1_{lam - 2M + 2t}
    for lam, N, M in product(range(-4, 5), range(4), range(4)):
        lhs = U.from_word(f12, [("F", 0, N), ("E", 0, M)], (lam - 2 * M,))
        coef = lambda t: pipow(M * N - t * (t + 1) // 2 - t + t * lam)
        assert lhs == _fe_rhs(f12, lam, N, M, coef), (lam, N, M)


def test_sign_variant_is_not_an_identity(f12):
    # coefficient (-1)^t pi^{(M-t)(N-t) - t^2}
    def coef(t):
        c = pipow((M - t) * (N - t) - t * t)
        return -c if t % 2 else c
    lam, N, M = 0, 1, 1
    lhs = U.from_word(f12, [("F", 0, N), ("E", 0, M)], (lam - 2 * M,))
    assert lhs != _fe_rhs(f12, lam, N, M, coef)


def test_rank_two_commutation(f14):
    # E_i F_j 1_z = pi^{p(i)p(j)} F_j E_i 1_z for i != j
    for z in [(0, 0), (1, -1), (2, 3)]:
        for i, j in [(0, 1), (1, 0)]:
            a = U.from_word(f14, [("E", i, 1), ("F", j, 1)], z)
            b = U.from_word(f14, [("F", j, 1), ("E", i, 1)], z)
            assert a == b.scale(pipow(f14.datum.parity[i] * f14.datum.parity[j]))


def test_divided_power_products(f12):
    z = (1,)
    e1 = U.from_word(f12, [("E", 0, 1)], z)
    e1e1 = U.multiply(U.from_word(f12, [("E", 0, 1)], (3,)), e1)
    e2 = U.from_word(f12, [("E", 0, 2)], z)
    assert e1e1 == e2.scale(PiScalar.pi() * vpow(1) + vpow(-1))


def test_idempotents_orthogonal(f12):
    assert U.multiply(U.idem(f12, (2,)), U.idem(f12, (2,))) == U.idem(f12, (2,))
    assert U.multiply(U.idem(f12, (2,)), U.idem(f12, (0,))).is_zero()


words12 = st.lists(st.tuples(st.sampled_from("EF"), st.just(0), st.integers(1, 2)), max_size=2)


@given(words12, words12, words12, st.integers(-3, 3))
def test_associativity(f12, w1, w2, w3, z):
    c = U.from_word(f12, w3, (z,))
    zb = U.UDot(f12, {}).left_weight(next(iter(c.terms))) if not c.is_zero() else (z,)
    b = U.from_word(f12, w2, zb)
    if b.is_zero():
        return
    za = b.left_weight(next(iter(b.terms)))
    a = U.from_word(f12, w1, za)
    assert U.multiply(U.multiply(a, b), c) == U.multiply(a, U.multiply(b, c))


@pytest.mark.parametrize("word", [[("E", 0, 1)], [("F", 0, 2)], [("E", 0, 1), ("F", 0, 1)],
                                  [("F", 0, 1), ("E", 0, 2), ("F", 0, 1)]])
def test_action_matches_module(f12, word):
    for lam, lamp in [((2,), (1,)), ((3,), (3,)), ((1,), (4,))]:
        z = (lam[0] - lamp[0],)
        N = N_module(f12, lam, lamp)
        for orient in ("mp", "pm"):
            u = U.from_word(f12, word, z, orient)
            assert vsub(U.act_on_family(u, N), N.act_uword(3, word, U.family_base(N))) == {}


def test_top_divided_power_kills_family_vector(f12):
    for lam in range(4):
        N = N_module(f12, (lam,), (2,))
        z = (lam - 2,)
        assert U.act_on_family(U.from_word(f12, [("F", 0, lam + 1)], z), N) == {}
        assert U.act_on_family(U.from_word(f12, [("F", 0, lam)], z), N) != {}


def test_bar_fixes_divided_powers(f12, f14):
    for word, z in [([("E", 0, 2)], (1,)), ([("F", 0, 3)], (-2,)), ([("E", 0, 1), ("F", 0, 1)], (0,))]:
        a = U.from_word(f12, word, z)
        assert U.auto_udot("bar", a) == a
    a = U.from_word(f14, [("F", 1, 2), ("E", 0, 1)], (1, 0))
    assert U.auto_udot("bar", a) == a


def test_omega_inverse(f12):
    a = U.from_word(f12, [("F", 0, 1), ("E", 0, 2)], (1,))
    assert U.auto_udot("omega_inv", U.auto_udot("omega", a)) == a


def test_dot_form_golden(f12):
    q = PiScalar.pi() * vpow(2)
    for lam in range(-2, 3):
        ef = U.from_word(f12, [("E", 0, 1), ("F", 0, 1)], (lam,))
        assert U.dot_form(ef, U.idem(f12, (lam,))) == vpow(1 - lam) * (ONE - q).inverse()


def test_dot_form_symmetric(f12):
    keys, M = U.gram(f12, (1,), 2)
    assert all(M[a][b] == M[b][a] for a in range(len(M)) for b in range(len(M)))


def test_form_limit_matches_dot_form(f12):
    a = U.from_word(f12, [("F", 0, 2)], (1,))
    val, k = U.form_limit(a, a, order=10)
    assert val == U.dot_form(a, a).series(10)
    assert k <= 2


def test_right_weight_requires_single_block(f12):
    a = U.idem(f12, (1,)) + U.idem(f12, (3,))
    with pytest.raises(ValueError):
        U.right_weight(a)
