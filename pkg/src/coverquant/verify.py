"""Acceptance checks as library calls.

Each check returns a Result; `run_all` runs the ones that apply to a datum.
The pytest acceptance suite and `coverquant verify all` both go through
here, the former adding independent oracles on top.
"""
import random
import time
from dataclasses import dataclass, field
from itertools import product

from . import cbengine as C
from . import classical
from . import quasir
from . import twistor as T
from . import udot as U
from .coeffring import PiScalar, pipow, qbinom, qfact, qint, vpow
from .halfalg import HalfAlgebra
from .rootdatum import builtin

ONE = PiScalar.one()


@dataclass
class Result:
    number: int
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0
    skipped: bool = False

    def line(self):
        tag = "SKIP" if self.skipped else ("PASS" if self.passed else "FAIL")
        return "[%s] %2d %s (%.1fs)%s" % (tag, self.number, self.name, self.seconds,
                                          ": " + self.detail if self.detail else "")

    def to_json(self):
        return {"criterion": self.number, "name": self.name, "pass": self.passed,
                "skipped": self.skipped, "detail": self.detail}


@dataclass
class Failures:
    items: list = field(default_factory=list)

    def add(self, msg):
        self.items.append(msg)

    def result(self, number, name, t0, ok_detail=""):
        detail = "; ".join(map(str, self.items[:3])) if self.items else ok_detail
        if len(self.items) > 3:
            detail += " (+%d more)" % (len(self.items) - 3)
        return Result(number, name, not self.items, detail, time.time() - t0)


def _alg(name, height):
    return HalfAlgebra(builtin(name), height)


# 1 ------------------------------------------------------------------------------

def check_combinatorics(nmax=8):
    """Bar-invariance and dagger identities of the (v, pi)-integers; for d = 2
    the pi-powers are pi_i = pi^2 = 1."""
    t0 = time.time()
    bad = Failures()
    for d in (1, 2):
        for n in range(nmax + 1):
            for k in range(n + 1):
                b = qbinom(n, k, d)
                if b.bar() != b:
                    bad.add("bar qbinom(%d,%d,d=%d)" % (n, k, d))
                if b.dagger() != pipow(d * k * (n - k)) * b:
                    bad.add("dagger qbinom(%d,%d,d=%d)" % (n, k, d))
            if n and qint(n, d).dagger() != pipow(d * (n - 1)) * qint(n, d):
                bad.add("dagger [%d]_d=%d" % (n, d))
            if qfact(n, d).dagger() != pipow(d * n * (n - 1) // 2) * qfact(n, d):
                bad.add("dagger [%d]!_d=%d" % (n, d))
    return bad.result(1, "(v,pi)-combinatorics", t0)


# 2 ------------------------------------------------------------------------------

def check_theta(name, height, transport_height=4):
    t0 = time.time()
    alg = _alg(name, height + 2)
    bad = Failures()
    for s in (3, 4):
        rep = quasir.check_unitarity(quasir.compute_theta(alg, s, height))
        if not rep["pass"]:
            bad.add("s=%d fails at %s" % (s, rep["failures"][:2]))
    t1 = quasir.compute_theta(alg, 1, transport_height)
    t3 = quasir.compute_theta(alg, 3, transport_height)
    moved = quasir.theta3_from_theta1(t1)
    for nu in t3.blocks:
        if moved.blocks[nu] != t3.blocks[nu]:
            bad.add("Theta1 -> Theta3 transport differs at %s" % (nu,))
    return bad.result(2, "quasi-R unitarity %s to height %d" % (name, height), t0)


# 3 ------------------------------------------------------------------------------

def _psi_checks(nc, bad):
    n = 0
    for _, idx in sorted(nc.blocks().items()):
        for h in idx:
            v = nc.std_vector(h)
            if not C._vec_eq(nc.psi(nc.psi(v)), v):
                bad.add("Psi^2 != 1 at %s" % (h,))
            row = nc.psi_row(h)
            if row.get(h) != ONE:
                bad.add("diagonal of r at %s" % (h,))
            for h2, c in row.items():
                if h2 != h and not C.partial_order_leq(h2, h):
                    bad.add("r not triangular at %s, %s" % (h, h2))
                if not (c.plus.is_integral() and c.minus.is_integral()):
                    bad.add("r entry not in Z[v,1/v] at %s, %s" % (h, h2))
            n += 1
    return n


def check_psi(name):
    t0 = time.time()
    bad = Failures()
    if name == "osp(1|2)":
        alg = _alg(name, 8)
        cases = [((a,), (b,), None) for a in range(4) for b in range(4)]
    else:
        alg = _alg(name, 6)
        cases = [((1, 0), (1, 0), 5), ((0, 1), (0, 1), 5)]
    n = 0
    for lam, lamp, depth in cases:
        n += _psi_checks(C.NCanonical(alg, lam, lamp, depth=depth), bad)
    return bad.result(3, "Psi involution and unitriangular r on %s" % name, t0,
                      "%d standard vectors" % n)


# 4 ------------------------------------------------------------------------------

def _fe(alg, a, b, z):
    return U.from_word(alg, [("F", 0, a), ("E", 0, b)], (z,))


def _ef(alg, a, b, z):
    return U.from_word(alg, [("E", 0, b), ("F", 0, a)], (z,)).scale(pipow(a * b))


def _in_upto_pi(S, x):
    xp = x.scale(pipow(1))
    return any(s == x or s == xp for s in S)


def expected_rank_one_block(alg, z, height):
    """F^(a)E^(b)1_z for z >= a - b and pi^ab E^(b)F^(a)1_z for z <= a - b."""
    out = []
    for a in range(height + 1):
        for b in range(height + 1 - a):
            if z >= a - b:
                out.append(_fe(alg, a, b, z))
            if z <= a - b:
                out.append(_ef(alg, a, b, z))
    return out


def check_udot_rank_one(zmax=8, height=4):
    t0 = time.time()
    alg = _alg("osp(1|2)", 2 * height + 2)
    uc = C.UDotCanonical(alg)
    bad = Failures()
    for z in range(-zmax, zmax + 1):
        got = [e.vector for e in uc.block((z,), height)]
        exp = expected_rank_one_block(alg, z, height)
        if not all(_in_upto_pi(exp, g) for g in got) or not all(_in_upto_pi(got, x) for x in exp):
            bad.add("block %d" % z)
    return bad.result(4, "rank-one U-dot canonical basis", t0)


# 5 ------------------------------------------------------------------------------

def check_stabilization(wmax=4, zmax=4, height=3):
    t0 = time.time()
    alg = _alg("osp(1|2)", 2 * wmax + 4)
    bad = Failures()
    n = 0
    for lam, lamp, lampp in product(range(wmax + 1), repeat=3):
        tm = C.t_map(alg, (lam,), (lamp,), (lampp,))
        src = C.NCanonical(alg, tm.source.M1.lam, tm.source.M2.base.lam)
        tgt = C.NCanonical(alg, (lam,), (lampp,))
        for e in src.canonical():
            img = tm(e.vector)
            n += 1
            if e.index.b[0][0] <= lam and e.index.bp[0][0] <= lampp:
                if not C._vec_eq(img, tgt.element(e.index).vector):
                    bad.add("t(b<>b') != b<>b' at %s, %s" % ((lam, lamp, lampp), e.index))
            elif img:
                bad.add("t(b<>b') != 0 at %s, %s" % ((lam, lamp, lampp), e.index))
    uc = C.UDotCanonical(alg)
    for z in range(-zmax, zmax + 1):
        try:
            uc.block((z,), height, verify=True)
        except ArithmeticError as exc:
            bad.add(str(exc))
    return bad.result(5, "stabilization of t and rho-shift invariance", t0,
                      "%d module elements" % n)


# 6 ------------------------------------------------------------------------------

def _geom(k):
    q = pipow(1) * vpow(2)
    out = ONE
    for s in range(1, k + 1):
        out = out * (ONE - q ** s).inverse()
    return out


def golden_cases(alg, lam):
    """(label, x, y, expected form) for the rank-one closed formulas."""
    z = (lam,)
    q = pipow(1) * vpow(2)
    out = []
    for k in range(1, 5):
        f = U.from_word(alg, [("F", 0, k)], z)
        e = U.from_word(alg, [("E", 0, k)], z)
        out.append(("F%d" % k, f, f, pipow(k * (k - 1) // 2) * _geom(k)))
        out.append(("E%d" % k, e, e, pipow(k * (k + 1) // 2 + k * lam) * _geom(k)))
    ef = U.from_word(alg, [("E", 0, 1), ("F", 0, 1)], z)
    fe = U.from_word(alg, [("F", 0, 1), ("E", 0, 1)], z)
    one = U.idem(alg, z)
    out.append(("EF,1", ef, one, vpow(1 - lam) * (ONE - q).inverse()))
    out.append(("EF,EF", ef, ef, pipow(lam - 1) * (ONE + q ** (1 - lam)) * ((ONE - q) ** 2).inverse()))
    out.append(("EF,FE", ef, fe, pipow(lam) * (ONE + q) * ((ONE - q) ** 2).inverse()))
    return out


def check_golden(order=20, kmax_limit=3):
    t0 = time.time()
    alg = _alg("osp(1|2)", 10)
    bad = Failures()
    for lam in range(-3, 4):
        for label, x, y, gold in golden_cases(alg, lam):
            if U.dot_form(x, y) != gold:
                bad.add("algebraic %s at lambda=%d" % (label, lam))
            try:
                val, kk = U.form_limit(x, y, order=order, kmax=kmax_limit + 1)
            except ArithmeticError as exc:
                bad.add("limit %s at lambda=%d: %s" % (label, lam, exc))
                continue
            if kk > kmax_limit or val != gold.series(order):
                bad.add("limit %s at lambda=%d (k=%d)" % (label, lam, kk))
    return bad.result(6, "bilinear form golden values", t0)


# 7 ------------------------------------------------------------------------------

def _rand_word(rng, rank, h):
    return [(rng.choice("EF"), rng.randrange(rank), rng.randint(1, 2)) for _ in range(rng.randint(0, h))]


def _partner(rng, rank, w):
    w = list(w)
    rng.shuffle(w)
    if rng.random() < 0.5:
        i = rng.randrange(rank)
        k = rng.randint(0, len(w))
        w[k:k] = [("E", i, 1), ("F", i, 1)] if rng.random() < 0.5 else [("F", i, 1), ("E", i, 1)]
    return w


def random_pairs(alg, n, seed=0, h=3):
    rng = random.Random(seed)
    D = alg.datum
    out = []
    while len(out) < n:
        z = tuple(rng.randint(-2, 2) for _ in range(D.rank))
        w = _rand_word(rng, D.rank, h)
        x = U.from_word(alg, w, z)
        y = U.from_word(alg, _partner(rng, D.rank, w), z)
        if rng.random() < 0.5:
            y = y.scale(pipow(1) * vpow(rng.randint(-2, 2)))
        out.append((x, y))
    return out


def check_invariances(name, pairs=200, seed=0):
    t0 = time.time()
    alg = _alg(name, 12)
    D = alg.datum
    bad = Failures()
    nonzero = 0
    for x, y in random_pairs(alg, pairs, seed):
        f = U.dot_form(x, y)
        nonzero += not f.is_zero()
        if U.dot_form(U.auto_udot("rho", x), U.auto_udot("rho", y)) != f:
            bad.add("rho")
        if U.dot_form(U.auto_udot("omega", x), U.auto_udot("omega_inv", y)) != f:
            bad.add("omega")
    rng = random.Random(seed + 1)
    weights = [nu for nu in alg.weights_upto(3) if alg.dim(nu)]
    for _ in range(pairs):
        nu = rng.choice(weights)
        B = alg.component(nu).basis
        a, b = rng.choice(B), rng.choice(B)
        lam = tuple(rng.randint(-3, 3) for _ in range(D.rank))
        lhs = U.dot_form(U.monomial(alg, (), a, lam), U.monomial(alg, (), b, lam))
        rhs = pipow(D.pi_exp(nu) + D.pair_tilde(nu, lam)) * alg.form_f(alg.basis_elem(a), alg.basis_elem(b))
        if lhs != rhs:
            bad.add("x+ 1_lambda at %s, %s" % (nu, lam))
    return bad.result(7, "form invariances on %s" % name, t0,
                      "%d pairs, %d nonzero" % (pairs, nonzero))


# 8 ------------------------------------------------------------------------------

def almost_orthonormal_failures(gram, order):
    out = []
    n = len(gram)
    for a in range(n):
        for b in range(n):
            p, m = gram[a][b].series(order)
            if any(e < 0 for e in p) or any(e < 0 for e in m):
                out.append((a, b, "negative powers"))
            elif a == b:
                if p.get(0, 0) != 1 or m.get(0, 0) not in (1, -1):
                    out.append((a, b, "diagonal not pi^e mod v"))
            elif p.get(0, 0) or m.get(0, 0):
                out.append((a, b, "off-diagonal constant term"))
    return out


def check_almost_orthonormal(zmax=4, height=3, order=12):
    t0 = time.time()
    alg = _alg("osp(1|2)", 2 * height + 2)
    uc = C.UDotCanonical(alg)
    bad = Failures()
    for z in range(-zmax, zmax + 1):
        els = [e.vector for e in uc.block((z,), height, verify=False)]
        G = [[U.dot_form(x, y) for y in els] for x in els]
        for f in almost_orthonormal_failures(G, order):
            bad.add("block %d: %s" % (z, f))
    return bad.result(8, "pi-almost-orthonormality", t0)


# 9 ------------------------------------------------------------------------------

def check_twistor(name, zmax=4, height=3):
    t0 = time.time()
    D = builtin(name)
    alg = HalfAlgebra(D, 2 * height + 2)
    bad = Failures()
    enh = T.build_enhancer(D)
    for p in enh.validate():
        bad.add("enhancer: %s" % p)
    grid = list(product(range(6), repeat=D.rank))
    lams = [((2,), (1,)), ((1,), (3,)), ((0,), (0,)), ((4,), (5,))] if D.rank == 1 else \
        [((1, 0), (0, 1)), ((1, 1), (1, 0)), ((0, 0), (2, 1))]
    for lam, lamp in lams:
        for rule in ("additive", "module"):
            for p in T.Kappa(enh, lam, lamp, rule).check(grid, grid)[:1]:
                bad.add("kappa %s %s/%s: %s" % (rule, lam, lamp, p))
    if D.rank == 1:
        for z in range(-zmax, zmax + 1):
            try:
                T.exponent_table(alg, (z,), height, enh=enh, shift_check=True)
            except (T.TwistError, ArithmeticError) as exc:
                bad.add("block %d: %s" % (z, exc))
    return bad.result(9, "twistor on %s" % name, t0)


# 10 -----------------------------------------------------------------------------

def classical_mismatches(alg, a, b):
    cl = classical.canonical_basis(a, b)
    got = {}
    for e in C.cb_of_N(alg, (a,), (b,)):
        h = e.index
        key = (h.b[0][0], h.bp[0][0])
        got[key] = {(x.b[0][0], x.bp[0][0]): {k: int(c) for k, c in v.plus.laurent().items()}
                    for x, v in e.coeffs.items()}
    exp = {h: {h2: dict(x.c) for h2, x in row.items()} for h, row in cl.items()}
    return [h for h in set(got) | set(exp) if got.get(h) != exp.get(h)]


def check_classical(nmax=3):
    t0 = time.time()
    alg = _alg("osp(1|2)", 2 * nmax + 2)
    bad = Failures()
    for a in range(nmax + 1):
        for b in range(nmax + 1):
            for h in classical_mismatches(alg, a, b):
                bad.add("N(%d,%d) at %s" % (a, b, h))
    return bad.result(10, "classical sl2 cross-check at pi = 1", t0)


# driver -------------------------------------------------------------------------

NAMES = {1: "(v,pi)-combinatorics", 2: "quasi-R unitarity", 3: "Psi involution",
         4: "rank-one U-dot canonical basis", 5: "stabilization", 6: "golden values",
         7: "form invariances", 8: "almost-orthonormality", 9: "twistor",
         10: "classical cross-check"}


def plan(name, height):
    rank_one = name == "osp(1|2)"
    theta_h = min(height, 6 if rank_one else 5)
    jobs = [
        (1, lambda: check_combinatorics()),
        (2, lambda: check_theta(name, theta_h)),
        (3, lambda: check_psi(name)),
        (4, check_udot_rank_one if rank_one else None),
        (5, check_stabilization if rank_one else None),
        (6, check_golden if rank_one else None),
        (7, lambda: check_invariances(name)),
        (8, check_almost_orthonormal if rank_one else None),
        (9, lambda: check_twistor(name)),
        (10, check_classical if rank_one else None),
    ]
    return jobs


def run_one(name, height, number):
    fn = dict(plan(name, height))[number]
    if fn is None:
        return Result(number, NAMES[number], True, "rank-one criterion, not run on %s" % name,
                      skipped=True)
    try:
        return fn()
    except Exception as exc:  # a crash is a failed criterion, not a crashed run
        return Result(number, NAMES[number], False, "%s: %s" % (type(exc).__name__, exc))


def run_all(name, height, only=None, jobs=1):
    numbers = [n for n, _ in plan(name, height) if only is None or n in only]
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(jobs) as ex:
            return list(ex.map(run_one, [name] * len(numbers), [height] * len(numbers), numbers))
    return [run_one(name, height, n) for n in numbers]
