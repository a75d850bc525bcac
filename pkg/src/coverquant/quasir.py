"""Truncated quasi-R-matrices Theta_s for the coproducts Delta_1..Delta_4.

Theta_1 and Theta_3 are solved weight by weight from the E_i-intertwining
equations, rewritten through the differentials of f.  Theta_2 and Theta_4
are transported from them by omega-conjugation and the flip.
"""
import json

from .coeffring import PiScalar, pipow, vpow
from .linalg import solve, transpose
from .repmod import vadd

ONE = PiScalar.one()


class ThetaTruncation:
    """Theta_{s,nu} for ht(nu) <= H as matrices M[a][b]:
    Theta_{s,nu} = sum M[a][b] (left basis a) (x) (right basis b).

    left/right are 'E' (x^+) or 'F' (x^-); for s in {2, 4} the left factor
    also carries J~_nu.
    """

    KINDS = {1: ("F", "E", False), 2: ("F", "E", True), 3: ("E", "F", False), 4: ("E", "F", True)}

    def __init__(self, alg, s, H, blocks):
        self.alg = alg
        self.datum = alg.datum
        self.s = s
        self.H = H
        self.blocks = blocks
        self.left, self.right, self.jtilde = self.KINDS[s]

    def weights(self):
        return list(self.blocks)

    def element(self, nu):
        """List of (coef, left dword, right dword)."""
        comp = self.alg.component(nu)
        M = self.blocks[nu]
        return [(M[a][b], comp.basis[a], comp.basis[b])
                for a in range(comp.dim) for b in range(comp.dim) if not M[a][b].is_zero()]

    def corrupted(self, nu, delta=ONE):
        blocks = {k: [row[:] for row in v] for k, v in self.blocks.items()}
        blocks[nu][0][0] = blocks[nu][0][0] + delta
        return ThetaTruncation(self.alg, self.s, self.H, blocks)

    def to_json(self):
        out = {"s": self.s, "H": self.H, "blocks": []}
        for nu, M in sorted(self.blocks.items()):
            comp = self.alg.component(nu)
            out["blocks"].append({
                "nu": list(nu),
                "basis": [self.alg.dword_str(b) for b in comp.basis],
                "matrix": [[c.to_json() for c in row] for row in M],
            })
        return out

    def dumps(self):
        return json.dumps(self.to_json(), indent=1)


def _delta(datum, i):
    d = datum.d[i]
    return pipow(d) * vpow(1, d) - vpow(-1, d)


def _sub(nu, i):
    return tuple(x - (k == i) for k, x in enumerate(nu))


def _diff_matrix(alg, i, nu):
    """D[b][c]: coordinate of basis c of f_{nu-i} in _ir(basis b of f_nu)."""
    comp = alg.component(nu)
    lower = _sub(nu, i)
    return [alg.diff_left(i, alg.basis_elem(b)).coords(lower) for b in comp.basis]


def _mult_matrix(alg, i, nu, side):
    """L[a'][a]: coordinate of x_a (in f_nu) in theta_i x_a' (side 'left')
    or x_a' theta_i (side 'right'), x_a' running over f_{nu-i}."""
    lower = _sub(nu, i)
    th = alg.theta(i)
    out = []
    for b in alg.component(lower).basis:
        x = alg.basis_elem(b)
        out.append((th * x if side == "left" else x * th).coords(nu))
    return out


def _scale(M, c):
    return [[x * c for x in row] for row in M]


def _matmul(A, B):
    from .linalg import matmul
    return matmul(A, B)


def _solve_theta(alg, H, s):
    datum = alg.datum
    blocks = {datum.zero(): [[ONE]]}
    for nu in alg.weights_upto(H):
        if sum(nu) == 0:
            continue
        A, B = [], []
        for i in range(datum.rank):
            if nu[i] == 0:
                continue
            lower = _sub(nu, i)
            Cp = blocks[lower]
            D = _diff_matrix(alg, i, nu)
            Dt = transpose(D)
            if s == 3:
                # C D_i = delta pi^{p(nu)p(i)} L_i^T C'  (solved for C^T)
                L = _mult_matrix(alg, i, nu, "left")
                c = _delta(datum, i) * pipow(datum.par(nu) * datum.parity[i])
                rhs = _scale(_matmul(transpose(Cp), L), c)
            else:
                # D_i^T C = -delta v^{-i.(nu-i)} C' R_i
                R = _mult_matrix(alg, i, nu, "right")
                c = -_delta(datum, i) * vpow(-datum.dot(datum.unit(i), lower))
                rhs = _scale(_matmul(Cp, R), c)
            A.extend(Dt)
            B.extend(rhs)
        X = solve(A, B)
        blocks[nu] = transpose(X) if s == 3 else X
    return blocks


def compute_theta(alg, s, H):
    """Theta_s truncated at height H."""
    if s not in (1, 2, 3, 4):
        raise ValueError("coproduct index must be 1..4")
    if s in (1, 3):
        return ThetaTruncation(alg, s, H, _solve_theta(alg, H, s))
    # Theta_2 = tau(omega^-1 (x) omega^-1) Theta_1, Theta_4 = tau(omega (x) omega) Theta_3;
    # both come out as a transpose with J~_nu on the left factor
    base = compute_theta(alg, s - 1, H)
    return ThetaTruncation(alg, s, H, {nu: transpose(M) for nu, M in base.blocks.items()})


def theta3_from_theta1(theta1):
    """bar(tau(Theta_1)) in the Theta_3 layout."""
    datum = theta1.datum
    out = {}
    for nu, M in theta1.blocks.items():
        sg = pipow(datum.par(nu))
        out[nu] = [[M[b][a].bar() * sg for b in range(len(M))] for a in range(len(M))]
    return ThetaTruncation(theta1.alg, 3, theta1.H, out)


def dual_basis_theta3(alg, H):
    """Independent construction from the form on f, P the number of odd letters in nu:
    Theta_{3,nu} = (-1)^{ht nu} v_nu^{-1} pi^{binom(P+1, 2)} sum (G_nu^{-1})_{ab} x_a (x) y_b."""
    from .linalg import solve as _solve
    datum = alg.datum
    out = {}
    for nu in alg.weights_upto(H):
        G = alg.gram(nu)
        n = len(G)
        ident = [[ONE if a == b else PiScalar.zero() for b in range(n)] for a in range(n)]
        Ginv = _solve(G, ident)
        p = sum(n * q for n, q in zip(nu, datum.parity))
        c = vpow(-datum.pi_exp(nu)) * pipow(p * (p + 1) // 2)
        if sum(nu) % 2:
            c = -c
        out[nu] = _scale(Ginv, c)
    return ThetaTruncation(alg, 3, H, out)


def _ff_product(alg, t1, nu1, t2, nu2, bar2):
    """Theta_{nu1} * bar(Theta_{nu2}) as {(dword, dword): coef} in f (x) f."""
    datum = alg.datum
    sign = pipow(datum.par(nu1) * datum.par(nu2))
    out = {}
    for c1, a1, b1 in t1.element(nu1):
        for c2, a2, b2 in t2.element(nu2):
            c = c1 * (c2.bar() if bar2 else c2) * sign
            left = alg.basis_elem(a1) * alg.basis_elem(a2)
            right = alg.basis_elem(b1) * alg.basis_elem(b2)
            for ka, ea in left.terms.items():
                for kb, eb in right.terms.items():
                    vadd(out, {(ka, kb): ea * eb * c})
    return out


def check_unitarity(theta):
    """Failures of sum_{mu+mu'=nu} Theta_mu bar(Theta_mu') = delta_{nu,0}."""
    alg = theta.alg
    failures = []
    for nu in alg.weights_upto(theta.H):
        acc = {}
        for mu in theta.blocks:
            mup = tuple(a - b for a, b in zip(nu, mu))
            if min(mup) < 0:
                continue
            vadd(acc, _ff_product(alg, theta, mu, theta, mup, True))
        if sum(nu) == 0:
            vadd(acc, {((), ()): -ONE})
        if acc:
            failures.append(nu)
    return {"pass": not failures, "failures": failures}


def apply_theta(theta, N, vec):
    """sum_nu Theta_nu (vec) on a tensor module N = M1 (x) M2."""
    datum = theta.datum
    M1, M2 = N.M1, N.M2
    out = {}
    for nu in theta.blocks:
        elems = theta.element(nu)
        if not elems:
            continue
        pnu = datum.par(nu)
        boundary = sum(nu) == theta.H
        part = {}
        for (k1, k2), c in vec.items():
            p1 = M1.par(k1[0])
            for coef, a, b in elems:
                x = M1.act_mono(theta.left, a, k1)
                if not x:
                    continue
                y = M2.act_mono(theta.right, b, k2)
                if not y:
                    continue
                cc = coef * c * pipow(pnu * p1)
                for ka, ca in x.items():
                    if theta.jtilde:
                        ca = ca * pipow(datum.pair(datum.tilde(nu), M1.wt(ka[0])))
                    for kb, cb in y.items():
                        vadd(part, {(ka, kb): ca * cb * cc})
        if part and boundary:
            raise ValueError("height bound %d too small for this vector" % theta.H)
        vadd(out, part)
    return out


def intertwining_residual(theta, N, vec, gen, i):
    """Delta_s(g) Theta(vec) - Theta(bar-Delta_s(g) vec); zero when Theta is right."""
    s = theta.s
    lhs = N.act_gen(s, gen, i, apply_theta(theta, N, vec))
    rhs = apply_theta(theta, N, N.act_gen(s, gen, i, vec, barred=True))
    return {k: c for k, c in vadd(lhs, rhs, -ONE).items()}
