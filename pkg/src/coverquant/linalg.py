"""Exact elimination over Q(v), run separately on the two eps-components."""
from .coeffring import PiScalar, RatFunc

_Z = RatFunc.const(0)


class SingularSystem(ArithmeticError):
    pass


def rref_rows(rows):
    """Gauss-Jordan on sparse rows {col: RatFunc}; the pivot of a row is its
    smallest column.  Returns {pivot_col: row} with row[pivot] == 1."""
    piv = {}
    for row in rows:
        row = {c: x for c, x in row.items() if not x.is_zero()}
        for p in sorted(piv):
            if p in row:
                f = row[p]
                for c, x in piv[p].items():
                    y = row.get(c, _Z) - f * x
                    if y.is_zero():
                        row.pop(c, None)
                    else:
                        row[c] = y
        if not row:
            continue
        p = min(row)
        inv = row[p].inverse()
        row = {c: x * inv for c, x in row.items()}
        for q, other in piv.items():
            if p in other:
                f = other[p]
                for c, x in row.items():
                    y = other.get(c, _Z) - f * x
                    if y.is_zero():
                        other.pop(c, None)
                    else:
                        other[c] = y
        piv[p] = row
    return piv


def _solve_comp(A, B):
    # A: n x m, B: n x k (lists of RatFunc).  Solve A X = B, X is m x k.
    n = len(A)
    m = len(A[0]) if n else 0
    k = len(B[0]) if n else 0
    M = [list(A[r]) + list(B[r]) for r in range(n)]
    pivcols = []
    row = 0
    for c in range(m):
        pr = next((r for r in range(row, n) if not M[r][c].is_zero()), None)
        if pr is None:
            continue
        M[row], M[pr] = M[pr], M[row]
        inv = M[row][c].inverse()
        M[row] = [x * inv for x in M[row]]
        for r in range(n):
            if r != row and not M[r][c].is_zero():
                f = M[r][c]
                M[r] = [x - f * y for x, y in zip(M[r], M[row])]
        pivcols.append(c)
        row += 1
    if len(pivcols) < m:
        raise SingularSystem("solution not unique (rank %d < %d)" % (len(pivcols), m))
    for r in range(row, n):
        if any(not x.is_zero() for x in M[r][m:]):
            raise SingularSystem("inconsistent system")
    X = [[None] * k for _ in range(m)]
    for r, c in enumerate(pivcols):
        X[c] = M[r][m:]
    return X


def solve(A, B):
    """Unique X with A X = B over Q(v)^pi (A may be overdetermined)."""
    if not A or not A[0]:
        return []
    Xp = _solve_comp([[x.plus for x in row] for row in A], [[x.plus for x in row] for row in B])
    Xm = _solve_comp([[x.minus for x in row] for row in A], [[x.minus for x in row] for row in B])
    return [[PiScalar(p, q) for p, q in zip(rp, rm)] for rp, rm in zip(Xp, Xm)]


def rank_comp(A, sign):
    rows = [{c: (x.plus if sign > 0 else x.minus) for c, x in enumerate(row)} for row in A]
    return len(rref_rows(rows))


def matmul(A, B):
    n = len(A)
    k = len(B[0]) if B else 0
    out = [[PiScalar.zero()] * k for _ in range(n)]
    for r in range(n):
        for c in range(k):
            s = PiScalar.zero()
            for t, a in enumerate(A[r]):
                if not a.is_zero() and not B[t][c].is_zero():
                    s = s + a * B[t][c]
            out[r][c] = s
    return out


def transpose(A):
    return [list(col) for col in zip(*A)] if A else []


def det_comp(A, sign):
    n = len(A)
    M = [[(x.plus if sign > 0 else x.minus) for x in row] for row in A]
    det = RatFunc.const(1)
    for c in range(n):
        pr = next((r for r in range(c, n) if not M[r][c].is_zero()), None)
        if pr is None:
            return RatFunc.const(0)
        if pr != c:
            M[c], M[pr] = M[pr], M[c]
            det = -det
        det = det * M[c][c]
        inv = M[c][c].inverse()
        for r in range(c + 1, n):
            if not M[r][c].is_zero():
                f = M[r][c] * inv
                M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    return det


def det(A):
    return PiScalar(det_comp(A, 1), det_comp(A, -1))
