from coverquant.coeffring import PiScalar, vpow
from coverquant import verify as V


def test_result_line():
    r = V.Result(3, "Psi involution", True, "ok", 1.25)
    assert r.line() == "[PASS]  3 Psi involution (1.2s): ok"
    assert V.Result(4, "x", True, skipped=True).line().startswith("[SKIP]")
    assert r.to_json()["pass"] is True


def test_failures_summary():
    f = V.Failures()
    for k in range(5):
        f.add(k)
    r = f.result(1, "n", 0.0)
    assert not r.passed and r.detail == "0; 1; 2 (+2 more)"


def test_almost_orthonormal_negative_control():
    one, zero = PiScalar.one(), PiScalar.zero()
    good = [[one, vpow(1)], [vpow(1), PiScalar.pi() + vpow(2)]]
    assert V.almost_orthonormal_failures(good, 6) == []
    bad = [[one, one], [one, vpow(-1)]]
    got = {x[2] for x in V.almost_orthonormal_failures(bad, 6)}
    assert got == {"off-diagonal constant term", "negative powers"}
    assert V.almost_orthonormal_failures([[zero]], 4) == [(0, 0, "diagonal not pi^e mod v")]


def test_expected_block_size(f12):
    # heights a + b <= 2, with both forms when z = a - b
    assert len(V.expected_rank_one_block(f12, 0, 2)) == 8
    assert len(V.expected_rank_one_block(f12, 5, 2)) == 6


def test_classical_cross_check():
    alg = V._alg("osp(1|2)", 6)
    assert V.classical_mismatches(alg, 2, 1) == []


def test_plan_skips_rank_one_checks():
    r = V.run_one("osp(1|4)", 4, 5)
    assert r.skipped and r.passed


def test_crash_is_failure(monkeypatch):
    def boom():
        raise RuntimeError("boom")
    monkeypatch.setattr(V, "plan", lambda name, height: [(1, boom)])
    r = V.run_one("osp(1|2)", 2, 1)
    assert not r.passed and "RuntimeError" in r.detail


def test_run_all_subset():
    res = V.run_all("osp(1|2)", 4, only={1})
    assert [r.number for r in res] == [1] and res[0].passed
