import random

import pytest

from coverquant import halfalg as H, twistor as T, udot as U
from coverquant.cbengine import provider_for
from coverquant.repmod import HWModule, N_module


@pytest.fixture(scope="module")
def enh12(osp12):
    return T.build_enhancer(osp12)


@pytest.fixture(scope="module")
def enh14(osp14):
    return T.build_enhancer(osp14)


def test_enhancers(enh12, enh14):
    assert enh12.M == [[1]] and enh12.validate() == []
    assert enh14.M == [[1, 0], [2, 2]] and enh14.validate() == []


def test_phi_values(enh12, enh14):
    assert [enh12.phi_i(0, (r,)) for r in range(-3, 4)] == [2, 3, 3, 0, 0, 1, 1]
    assert [enh14.phi_i(0, (r, 0)) for r in range(-3, 4)] == [0, 2, 2, 0, 0, 2, 2]


def test_decompose(enh12):
    rep, mu = enh12.decompose((5,))
    assert rep == (1,) and mu == (2,)


def test_ell_values(f14, enh14):
    prov = provider_for(f14)
    got = {prov.label(nu, k): T.ell(f14, b, enh14)
           for nu in f14.weights_upto(4) for k, b in enumerate(prov.elements(nu))}
    assert got["t2t1"] == 2 and got["t1t2t1"] == 3 and got["b22_0"] == 1
    assert got["t1t2"] == 0 and got["t1^(2)"] == 0


def test_ell_rank_one_vanishes(f12, enh12):
    assert all(T.ell(f12, f12.divided_power(0, n), enh12) == 0 for n in range(7))


@pytest.mark.parametrize("name", ["f12", "f14"])
def test_twist_respects_serre(request, name):
    alg = request.getfixturevalue(name)
    enh = T.enhancer_for(alg)
    for nu in alg.weights_upto(5):
        comp = alg.component(nu)
        for w in comp.expansion:
            x = alg.expand_word(w)
            assert T.t_exponent(T.twist_f(alg, x, enh), x.terms) == T._word_exponent(enh, w)


def test_twist_and_differentials(f14, enh14, osp14):
    for nu in f14.weights_upto(4):
        for b in f14.component(nu).basis:
            x = f14.basis_elem(b)
            for i in range(2):
                if not nu[i]:
                    continue
                low = tuple(a - (k == i) for k, a in enumerate(nu))
                lhs = T.twist_f(f14, f14.diff_left(i, x), enh14)
                rhs = T.gapply(lambda v: f14.diff_left(i, H.FElem(f14, v)).terms, T.twist_f(f14, x, enh14))
                e = -enh14.phi_root(osp14.unit(i), low)
                assert T.geq(lhs, {k: T.tpow(e) * c for k, c in rhs.items()})


@pytest.mark.parametrize("name,lam", [("f12", (3,)), ("f14", (1, 1))])
def test_twist_intertwines_simple_module(request, name, lam):
    alg = request.getfixturevalue(name)
    D = alg.datum
    enh = T.enhancer_for(alg)
    V = HWModule(alg, lam)
    for nu in alg.weights_upto(3):
        for key in V.basis_keys(nu):
            for g in "EF":
                for i in range(D.rank):
                    lhs = T.twist_module(V, V.gen(g, i, key), enh)
                    rhs = T.gapply(lambda v: V.act(g, i, v), T.twist_module(V, {key: T.ONE}, enh))
                    e = T.generator_factor(D, enh, g, i, V.wt(nu))
                    assert T.geq(lhs, {k: T.tpow(e) * c for k, c in rhs.items()})


def _n_failures(alg, enh, lam, lamp, rule, depth=3):
    D = alg.datum
    N = N_module(alg, lam, lamp)
    kap = T.Kappa(enh, lam, lamp, rule)
    bad = 0
    for n1 in alg.weights_upto(depth):
        for n2 in alg.weights_upto(depth):
            for key in N.basis_keys(n1, n2):
                for g in "EF":
                    for i in range(D.rank):
                        lhs = T.twist_N(N, N.act_gen(3, g, i, {key: T.ONE}), enh, kap)
                        rhs = T.gapply(lambda v: N.act_gen(3, g, i, v), T.twist_N(N, {key: T.ONE}, enh, kap))
                        e = T.generator_factor(D, enh, g, i, N.wt(key))
                        if not T.geq(lhs, {k: T.tpow(e) * c for k, c in rhs.items()}):
                            bad += 1
    return bad


@pytest.mark.parametrize("lam,lamp", [((2,), (1,)), ((1,), (3,)), ((3,), (2,))])
def test_twist_intertwines_N_rank_one(f12, enh12, lam, lamp):
    assert _n_failures(f12, enh12, lam, lamp, "module") == 0


def test_twist_intertwines_N_osp14(f14, enh14):
    assert _n_failures(f14, enh14, (1, 1), (1, 0), "module", depth=2) == 0


def test_additive_rule_fails_off_root_lattice(f12, enh12):
    # (1,) is not in the root lattice 2Z of osp(1|2)
    assert _n_failures(f12, enh12, (2,), (1,), "additive") > 0


def test_kappa_rules(f12, enh12):
    nus = [(n,) for n in range(4)]
    for lam, lamp in [((2,), (1,)), ((3,), (2,))]:
        assert T.Kappa(enh12, lam, lamp, "module").check(nus, nus) == []
        assert T.Kappa(enh12, lam, lamp, "additive").check(nus, nus) == []
    a, b = T.Kappa(enh12, (3,), (2,), "module"), T.Kappa(enh12, (3,), (2,), "additive")
    assert all(a.by_depth(n, m) == b.by_depth(n, m) for n in nus for m in nus)


def test_kappa_rejects_unknown_rule(enh12):
    with pytest.raises(ValueError):
        T.Kappa(enh12, (1,), (1,), "other")


def test_F_idempotent_exponent(f12, enh12):
    for lam in range(-3, 4):
        a = U.monomial(f12, ((0, 1),), (), (lam,))
        assert T.t_exponent(T.twist_udot(a, enh12), a.terms) == (-enh12.phi((1,), (lam,))) % 4


def test_twist_is_multiplicative(f12, enh12):
    rng = random.Random(1)
    for _ in range(40):
        z = (rng.randint(-3, 3),)
        w1 = [(rng.choice("EF"), 0, 1) for _ in range(rng.randint(1, 3))]
        w2 = [(rng.choice("EF"), 0, 1) for _ in range(rng.randint(0, 2))]
        b = U.from_word(f12, w2, z)
        zl = b.left_weight(next(iter(b.terms))) if b.terms else z
        a = U.from_word(f12, w1, zl)
        lhs = T.twist_udot(a * b, enh12)
        rhs = T.gmul_udot(f12, T.twist_udot(a, enh12), T.twist_udot(b, enh12))
        assert T.geq(lhs, rhs)


def test_cb_eigenvalues_rank_one(f12):
    for z in range(-2, 3):
        rows = T.exponent_table(f12, (z,), 2)
        assert rows and all(r["f"] is not None for r in rows)
