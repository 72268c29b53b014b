"""Circulant construction and the structural sums its theory leans on.

A circulant is determined by its first row (c_0, ..., c_{n-1}) through the
entry rule C[i][j] = c_{(j-i) mod n}; row 1 therefore reads
(c_{n-1}, c_0, ..., c_{n-2}).  The all-ones vector is always an
eigenvector with eigenvalue equal to the first-row sum, so a zero row sum
forces singularity.
"""

from __future__ import annotations

from .matgf import Matrix, require_square


class OddOrder(ValueError):
    """Operation requires an even order."""


def build(first_row) -> Matrix:
    row = list(first_row)
    n = len(row)
    return [[row[(j - i) % n] for j in range(n)] for i in range(n)]


def is_circulant(A: Matrix) -> bool:
    n = require_square(A)
    first = A[0]
    return all(A[i][j] == first[(j - i) % n] for i in range(1, n) for j in range(n))


def row_sum(first_row) -> int:
    s = 0
    for c in first_row:
        s ^= c
    return s


def interleaved_sums(first_row) -> tuple[int, int]:
    """(c_0 + c_2 + ..., c_1 + c_3 + ...) for even order.

    These are the row sums of the two order-n/2 circulant submatrices on
    the even/odd index grids, hence both are nonzero whenever the full
    matrix is MDS.
    """
    row = list(first_row)
    if len(row) % 2 != 0:
        raise OddOrder(f"interleaved sums need an even order, got {len(row)}")
    even = 0
    odd = 0
    for i, c in enumerate(row):
        if i % 2 == 0:
            even ^= c
        else:
            odd ^= c
    return even, odd
