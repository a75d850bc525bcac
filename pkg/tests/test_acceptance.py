"""The ten acceptance criteria, one test each."""

import sympy as sp

from coverquant import cbengine as C
from coverquant import quasir
from coverquant import twistor as T
from coverquant import udot as U
from coverquant import verify as V
from coverquant.coeffring import qbinom, qfact, qint
from coverquant.halfalg import HalfAlgebra
from coverquant.rootdatum import builtin

from .oracles import symbolic as S


def _ok(result):
    assert result.passed, result.line()


def test_criterion_01_combinatorics():
    _ok(V.check_combinatorics(8))
    # independent sympy evaluation of the same objects, both pi components
    for d in (1, 2):
        for n in range(9):
            for pi in (1, -1):
                if n:
                    assert S.same(qint(n, d).comp(pi), S.qint(n, d, pi))
                assert S.same(qfact(n, d).comp(pi), S.qfact(n, d, pi))
            for k in range(n + 1):
                for pi in (1, -1):
                    ref = S.qbinom(n, k, d, pi)
                    assert S.same(qbinom(n, k, d).comp(pi), ref)
                    assert sp.simplify(S.bar(ref, pi) - ref) == 0
                    assert sp.simplify(S.dagger(ref, pi) - pi ** (d * k * (n - k)) * ref) == 0


def test_criterion_02_theta_unitarity():
    _ok(V.check_theta("osp(1|2)", 6))
    _ok(V.check_theta("osp(1|4)", 5))
    # independent dual-basis construction agrees with the recursion
    for name in ("osp(1|2)", "osp(1|4)"):
        alg = HalfAlgebra(builtin(name), 7)
        th = quasir.compute_theta(alg, 3, 4)
        oracle = quasir.dual_basis_theta3(alg, 4)
        assert all(oracle.blocks[nu] == th.blocks[nu] for nu in th.blocks)
        bad = quasir.check_unitarity(th.corrupted(alg.datum.unit(0)))
        assert not bad["pass"] and bad["failures"][0] == alg.datum.unit(0)


def test_criterion_03_psi_involution():
    r12 = V.check_psi("osp(1|2)")
    r14 = V.check_psi("osp(1|4)")
    _ok(r12)
    _ok(r14)
    # sum over a, b <= 3 of (a+1)(b+1); N(w1,w1) and N(w2,w2) cut at depth 5
    assert r12.detail == "100 standard vectors"
    assert r14.detail == "34 standard vectors"


def test_criterion_04_rank_one_udot_cb():
    _ok(V.check_udot_rank_one(zmax=8, height=4))
    # counts: one element per pair (a, b) with a + b <= 4
    alg = HalfAlgebra(builtin("osp(1|2)"), 10)
    uc = C.UDotCanonical(alg)
    for z in (-3, 0, 5):
        assert len(uc.block((z,), 4)) == 15


def test_criterion_05_stabilization():
    _ok(V.check_stabilization(wmax=4, zmax=4, height=3))


def _closed_forms(lam, pi):
    """The rank-one golden formulas at a fixed pi, written out in sympy."""
    v = S.v
    q = pi * v ** 2
    geo = lambda k: sp.prod([1 / (1 - q ** s) for s in range(1, k + 1)])
    out = {}
    for k in range(1, 5):
        out["F%d" % k] = pi ** (k * (k - 1) // 2) * geo(k)
        out["E%d" % k] = pi ** (k * (k + 1) // 2 + k * lam) * geo(k)
    out["EF,1"] = v ** (1 - lam) / (1 - q)
    out["EF,EF"] = pi ** (lam - 1) * (1 + q ** (1 - lam)) / (1 - q) ** 2
    out["EF,FE"] = pi ** lam * (1 + q) / (1 - q) ** 2
    return out


def test_criterion_06_golden_values():
    _ok(V.check_golden(order=20, kmax_limit=3))
    alg = HalfAlgebra(builtin("osp(1|2)"), 10)
    for lam in range(-3, 4):
        refs = {pi: _closed_forms(lam, pi) for pi in (1, -1)}
        for label, x, y, _ in V.golden_cases(alg, lam):
            val = U.dot_form(x, y)
            for pi in (1, -1):
                assert S.same(val.comp(pi), refs[pi][label]), (label, lam, pi)


def test_criterion_07_form_invariances():
    for name in ("osp(1|2)", "osp(1|4)"):
        r = V.check_invariances(name, pairs=200, seed=7)
        _ok(r)
        assert r.detail.startswith("200 pairs")


def test_criterion_08_almost_orthonormality():
    _ok(V.check_almost_orthonormal(zmax=4, height=3, order=12))


def test_criterion_09_twistor():
    _ok(V.check_twistor("osp(1|2)", zmax=4, height=3))
    _ok(V.check_twistor("osp(1|4)"))
    assert T.build_enhancer(builtin("osp(1|2)")).M == [[1]]
    assert T.build_enhancer(builtin("osp(1|4)")).M == [[1, 0], [2, 2]]


def test_criterion_10_classical_cross_check():
    _ok(V.check_classical(3))
    # the oracle itself: c_1 = v - 1/v for the quasi-R-matrix
    from coverquant import classical as K
    assert K.solve_theta(K.SL2Tensor(1, 1))[1] == K.Laurent({1: 1, -1: -1})
