"""Dense matrix algebra over GF(2^m).

A matrix is a row-major list of lists of field elements (plain ints); a
diagonal matrix is the list of its diagonal entries.  Functions never
mutate their arguments and always return fresh matrices, so values can be
shared freely between scan workers.  Operations that need field
multiplication take the owning `GF2m` as their first argument; the ones
that only add (trace) or only rearrange (transpose, submatrix) do not.
"""

from __future__ import annotations

from .field import GF2m


class MatrixError(ValueError):
    """Base class for matrix shape and solvability errors."""


class DimensionMismatch(MatrixError):
    """Operand shapes are incompatible."""


class Singular(MatrixError):
    """Matrix has no inverse."""


class BadIndex(MatrixError):
    """Submatrix index sets are out of bounds or not strictly increasing."""


Matrix = list  # list[list[int]], row-major


def dims(A: Matrix) -> tuple[int, int]:
    return len(A), len(A[0]) if A else 0


def require_square(A: Matrix) -> int:
    n, c = dims(A)
    if n != c:
        raise DimensionMismatch(f"expected a square matrix, got {n}x{c}")
    return n


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(A: Matrix) -> Matrix:
    return [list(col) for col in zip(*A)]


def mat_mul(gf: GF2m, A: Matrix, B: Matrix) -> Matrix:
    ra, ca = dims(A)
    rb, cb = dims(B)
    if ca != rb:
        raise DimensionMismatch(f"cannot multiply {ra}x{ca} by {rb}x{cb}")
    mul = gf.mul
    BT = transpose(B)
    out = []
    for arow in A:
        row = []
        for bcol in BT:
            s = 0
            for a, b in zip(arow, bcol):
                s ^= mul(a, b)
            row.append(s)
        out.append(row)
    return out


def mat_equal(A: Matrix, B: Matrix) -> bool:
    return A == B


def trace(A: Matrix) -> int:
    """XOR of the main diagonal (field addition in characteristic 2)."""
    n = require_square(A)
    t = 0
    for i in range(n):
        t ^= A[i][i]
    return t


def submatrix(A: Matrix, rows, cols) -> Matrix:
    r, c = dims(A)
    rows = list(rows)
    cols = list(cols)
    for idx, bound in ((rows, r), (cols, c)):
        if any(i < 0 or i >= bound for i in idx):
            raise BadIndex(f"index out of range in {idx}")
        if any(a >= b for a, b in zip(idx, idx[1:])):
            raise BadIndex(f"indices must be strictly increasing: {idx}")
    return [[A[i][j] for j in cols] for i in rows]


def det(gf: GF2m, A: Matrix) -> int:
    """Determinant by forward elimination; 0 iff singular.

    Char-2 spares the sign bookkeeping of row swaps, and the pivot is
    simply the first nonzero entry (no magnitude ordering exists).
    """
    n = require_square(A)
    mul = gf.mul
    inv = gf.inv
    M = [row[:] for row in A]
    d = 1
    for col in range(n):
        piv = None
        for r in range(col, n):
            if M[r][col]:
                piv = r
                break
        if piv is None:
            return 0
        if piv != col:
            M[col], M[piv] = M[piv], M[col]
        pivot = M[col][col]
        d = mul(d, pivot)
        pinv = inv(pivot)
        prow = M[col]
        for j in range(col, n):
            prow[j] = mul(pinv, prow[j])
        for r in range(col + 1, n):
            f = M[r][col]
            if f:
                rrow = M[r]
                for j in range(col, n):
                    rrow[j] ^= mul(f, prow[j])
    return d


def rank(gf: GF2m, A: Matrix) -> int:
    mul = gf.mul
    inv = gf.inv
    M = [row[:] for row in A]
    nrows, ncols = dims(A)
    rk = 0
    for col in range(ncols):
        piv = None
        for r in range(rk, nrows):
            if M[r][col]:
                piv = r
                break
        if piv is None:
            continue
        M[rk], M[piv] = M[piv], M[rk]
        pinv = inv(M[rk][col])
        M[rk] = [mul(pinv, v) for v in M[rk]]
        for r in range(nrows):
            if r != rk and M[r][col]:
                f = M[r][col]
                M[r] = [v ^ mul(f, w) for v, w in zip(M[r], M[rk])]
        rk += 1
    return rk


def inverse(gf: GF2m, A: Matrix) -> Matrix:
    """Gauss-Jordan inverse; raises Singular when some column has no pivot."""
    n = require_square(A)
    mul = gf.mul
    inv = gf.inv
    aug = [A[i][:] + [1 if i == j else 0 for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if aug[r][col]:
                piv = r
                break
        if piv is None:
            raise Singular(f"no pivot in column {col}")
        if piv != col:
            aug[col], aug[piv] = aug[piv], aug[col]
        pinv = inv(aug[col][col])
        prow = aug[col]
        for j in range(col, 2 * n):
            prow[j] = mul(pinv, prow[j])
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                rrow = aug[r]
                for j in range(col, 2 * n):
                    rrow[j] ^= mul(f, prow[j])
    return [row[n:] for row in aug]


# -- diagonal matrices ------------------------------------------------------

Diagonal = list  # list[int], the main diagonal


def diag_to_matrix(d: Diagonal) -> Matrix:
    n = len(d)
    return [[d[i] if i == j else 0 for j in range(n)] for i in range(n)]


def diag_power(gf: GF2m, d: Diagonal, k: int) -> Diagonal:
    return [gf.pow(v, k) for v in d]


def diag_trace(d: Diagonal) -> int:
    t = 0
    for v in d:
        t ^= v
    return t


def sandwich(gf: GF2m, d1: Diagonal, A: Matrix, d2: Diagonal) -> Matrix:
    """D1 * A * D2 computed entrywise: out[i][j] = d1[i] * A[i][j] * d2[j]."""
    r, c = dims(A)
    if len(d1) != r or len(d2) != c:
        raise DimensionMismatch("diagonal lengths must match the matrix shape")
    mul = gf.mul
    return [
        [mul(mul(d1[i], A[i][j]), d2[j]) for j in range(c)]
        for i in range(r)
    ]
