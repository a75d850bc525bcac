import pytest

from coverquant.classical import Laurent
from coverquant.coeffring import PiScalar, vpow
from coverquant.cbengine import (Contraction, FileProvider, HypothesisError, NCanonical, PiPairIndex,
                                 ProviderError, RankOneProvider, cb_of_udot, linear_extension,
                                 partial_order_leq, provider_for, semilinear_solve, t_map)
from coverquant.repmod import N_base, vsub
from coverquant import udot as U

ONE = PiScalar.one()
PI = PiScalar.pi()


# semi-linear solver ---------------------------------------------------------------

def _chain(r_ab, one=ONE):
    leq = lambda x, y: x == y or (x, y) == ("a", "b")
    return semilinear_solve(["b", "a"], leq, {("a", "a"): one, ("b", "b"): one, ("a", "b"): r_ab}, one=one)


def test_chain_example():
    p = _chain(vpow(1) - PI * vpow(-1))
    assert p[("a", "b")] == vpow(1)
    assert p[("a", "a")] == ONE


def test_chain_example_laurent():
    one = Laurent.mono(0)
    p = _chain(Laurent({1: 1, -1: -1}), one)
    assert p[("a", "b")] == Laurent.mono(1)


def test_chain_zero_correction():
    p = _chain(PiScalar.zero())
    assert ("a", "b") not in p


@pytest.mark.parametrize("bad", [vpow(1) - vpow(-1) + ONE, (ONE - vpow(2)).inverse()])
def test_solver_rejects_bad_r(bad):
    with pytest.raises(HypothesisError):
        _chain(bad)


def test_solver_rejects_non_triangular():
    leq = lambda x, y: x == y
    with pytest.raises(HypothesisError):
        semilinear_solve(["a", "b"], leq, {("a", "a"): ONE, ("b", "b"): ONE, ("a", "b"): vpow(1)})


def test_linear_extension_detects_cycles():
    assert linear_extension([3, 1, 2], lambda x, y: x <= y) == [1, 2, 3]
    with pytest.raises(ValueError):
        linear_extension([1, 2], lambda x, y: True)


def test_partial_order():
    h = lambda a, b, e=0: PiPairIndex(((a,), 0), ((b,), 0), e)
    assert partial_order_leq(h(0, 1), h(1, 2))
    assert not partial_order_leq(h(1, 2), h(0, 1))
    assert not partial_order_leq(h(0, 1), h(1, 1))
    assert not partial_order_leq(h(1, 2), h(1, 3))
    assert partial_order_leq(h(1, 1), h(1, 1))
    assert not partial_order_leq(h(1, 1), h(1, 1, 1))
    assert h(1, 1).times_pi().times_pi() == h(1, 1)


# providers -------------------------------------------------------------------------

def test_rank_one_provider(f12):
    prov = RankOneProvider(f12)
    assert prov.validate(6)["pass"]
    assert prov.elements((3,)) == [f12.divided_power(0, 3)]
    assert prov.label((3,), 0) == "t1^(3)"


def test_rank_one_provider_rejects_rank_two(f14):
    with pytest.raises(ProviderError):
        RankOneProvider(f14)


def test_file_provider(f14):
    prov = provider_for(f14)
    assert prov.validate()["pass"]
    assert [len(prov.elements(nu)) for nu in [(1, 1), (2, 1), (1, 2)]] == [2, 3, 2]
    with pytest.raises(ProviderError):
        prov.elements((3, 2))


def test_file_provider_rejects_bad_data(f14):
    data = {"height": 1, "datum": "osp(1|4)", "elements": [
        {"weight": [1, 0], "monomials": [[[0, 1]]], "coefficients": [[[0, 1, 0]]]},
        {"weight": [0, 1], "monomials": [[[1, 1]]], "coefficients": [[[0, 1, 1]]]},
    ]}
    with pytest.raises(ProviderError):
        FileProvider(f14, data)


def test_file_provider_rejects_other_datum(f12):
    with pytest.raises(ProviderError):
        FileProvider(f12, {"height": 1, "datum": "osp(1|4)", "elements": []})


# module maps -----------------------------------------------------------------------

def _keys(N, depth):
    alg = N.M1.alg
    return [k for n1 in alg.weights_upto(depth) for n2 in alg.weights_upto(depth) for k in N.basis_keys(n1, n2)]


@pytest.mark.parametrize("name,lam", [("f12", (3,)), ("f14", (1, 1))])
def test_contraction_is_a_module_map(request, name, lam):
    alg = request.getfixturevalue(name)
    delta = Contraction(alg, lam)
    N = delta.N
    assert delta(N_base(N)) == ONE
    for key in _keys(N, 3):
        for g in "EF":
            for i in range(alg.rank):
                assert delta(N.act_gen(3, g, i, {key: ONE})).is_zero()


def test_t_map_intertwines(f12):
    t = t_map(f12, (1,), (2,), (2,))
    assert t(N_base(t.source)) == N_base(t.target)
    for key in _keys(t.source, 3):
        for g in "EF":
            lhs = t(t.source.act_gen(3, g, 0, {key: ONE}))
            rhs = t.target.act_gen(3, g, 0, t({key: ONE}))
            assert vsub(lhs, rhs) == {}


# canonical bases -------------------------------------------------------------------

def test_n_canonical_rank_one(f12):
    nc = NCanonical(f12, (2,), (2,))
    cb = nc.canonical()
    assert len(cb) == 9
    for e in cb:
        assert e.coeffs[e.index] == ONE
        for h, c in e.coeffs.items():
            if h != e.index:
                assert c.in_A() and c.truncate_positive() == c


def test_n_canonical_first_off_diagonal(f12):
    nc = NCanonical(f12, (1,), (1,))
    h = PiPairIndex(((1,), 0), ((1,), 0))
    e = nc.element(h)
    low = PiPairIndex(((0,), 0), ((0,), 0))
    assert set(e.coeffs) == {h, low}
    assert e.coeffs[low].truncate_positive() == e.coeffs[low]


def test_n_canonical_osp14(f14):
    nc = NCanonical(f14, (1, 0), (1, 0), depth=3)
    assert len(nc.canonical()) == sum(len(v) for v in nc.blocks().values())


def test_udot_block(f12):
    els = cb_of_udot(f12, (0,), 2)
    assert len(els) == 6
    for e in els:
        assert U.auto_udot("bar", e.vector) == e.vector
    assert els[0].vector == U.idem(f12, (0,))


def test_cb_json(f12):
    e = cb_of_udot(f12, (1,), 1)[1]
    d = e.to_json()
    assert d["zeta"] == [1] and d["b"] in ("1", "t1")
