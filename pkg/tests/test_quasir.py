import json

import pytest

from coverquant.coeffring import PiScalar, vpow
from coverquant.quasir import (apply_theta, check_unitarity, compute_theta, dual_basis_theta3,
                               intertwining_residual, theta3_from_theta1)
from coverquant.repmod import HWModule, N_base, N_module, OmegaTwist, TensorModule

ONE = PiScalar.one()
PI = PiScalar.pi()


@pytest.fixture(scope="module")
def thetas12(f12):
    return {s: compute_theta(f12, s, 6) for s in (1, 2, 3, 4)}


def test_rank_one_first_coefficient(thetas12):
    t3 = thetas12[3]
    assert t3.blocks[(0,)] == [[ONE]]
    assert t3.blocks[(1,)][0][0] == vpow(1) - PI * vpow(-1)


def test_rank_one_classical_limit(thetas12):
    # at pi = 1 the coefficient of E^(n) (x) F^(n) is v^binom(n,2) (v - v^-1)^n [n]!
    import sympy
    from .oracles.symbolic import qfact, same
    v = sympy.Symbol("v")
    for n in range(7):
        c = thetas12[3].blocks[(n,)][0][0]
        assert same(c.plus, v ** (n * (n - 1) // 2) * (v - 1 / v) ** n * qfact(n, 1, 1))


def test_solved_matches_dual_basis(f12, f14, thetas12):
    assert thetas12[3].blocks == dual_basis_theta3(f12, 6).blocks
    assert compute_theta(f14, 3, 4).blocks == dual_basis_theta3(f14, 4).blocks


def test_transport_from_theta1(f12, f14, thetas12):
    assert theta3_from_theta1(thetas12[1]).blocks == thetas12[3].blocks
    assert theta3_from_theta1(compute_theta(f14, 1, 4)).blocks == compute_theta(f14, 3, 4).blocks


@pytest.mark.parametrize("s", [1, 2, 3, 4])
def test_unitarity_rank_one(thetas12, s):
    assert check_unitarity(thetas12[s])["pass"]


def test_corrupted_theta_fails_unitarity(thetas12):
    failures = check_unitarity(thetas12[3].corrupted((2,)))["failures"]
    assert failures[0] == (2,) and (1,) not in failures


def test_bad_coproduct_index(f12):
    with pytest.raises(ValueError):
        compute_theta(f12, 5, 2)


def _residuals(theta, N, depth):
    alg = theta.alg
    bad = 0
    for nu1 in alg.weights_upto(depth):
        for nu2 in alg.weights_upto(depth):
            for key in N.basis_keys(nu1, nu2):
                for g in "EF":
                    for i in range(alg.rank):
                        if intertwining_residual(theta, N, {key: ONE}, g, i):
                            bad += 1
    return bad


@pytest.mark.parametrize("s", [1, 2, 3, 4])
def test_intertwining_rank_one(f12, thetas12, s):
    for lam, lamp in [((2,), (3,)), ((1,), (1,))]:
        V1, V2 = HWModule(f12, lam), HWModule(f12, lamp)
        assert _residuals(thetas12[s], TensorModule(V1, V2), 3) == 0
        assert _residuals(thetas12[s], TensorModule(V1, OmegaTwist(V2)), 3) == 0


@pytest.mark.parametrize("s", [1, 3])
def test_intertwining_osp14(f14, s):
    theta = compute_theta(f14, s, 6)
    V1, V2 = HWModule(f14, (1, 0)), HWModule(f14, (0, 1))
    assert _residuals(theta, TensorModule(V1, OmegaTwist(V2)), 2) == 0


def test_corrupted_theta_breaks_intertwining(f12, thetas12):
    bad = thetas12[3].corrupted((1,), vpow(1))
    N = N_module(f12, (2,), (2,))
    assert _residuals(bad, N, 2) > 0


def test_fixes_extremal_vector(f12, f14, thetas12):
    N = N_module(f12, (3,), (2,))
    base = N_base(N)
    assert apply_theta(thetas12[3], N, base) == base
    N = N_module(f14, (1, 1), (0, 1))
    assert apply_theta(compute_theta(f14, 3, 4), N, N_base(N)) == N_base(N)


def test_height_bound_error(f12):
    theta = compute_theta(f12, 3, 2)
    N = N_module(f12, (4,), (4,))
    key = (((3,), 0), ((3,), 0))
    with pytest.raises(ValueError):
        apply_theta(theta, N, {key: ONE})


def test_json_is_deterministic(f12):
    a = compute_theta(f12, 3, 4).dumps()
    b = compute_theta(f12, 3, 4).dumps()
    assert a == b
    d = json.loads(a)
    assert d["s"] == 3 and [blk["nu"] for blk in d["blocks"]] == [[n] for n in range(5)]
