"""Decision procedures for matrix properties over GF(2^m).

Covers the MDS test (all square minors nonsingular), the involutory and
orthogonal identity checks, detection of the generalized forms
A^-1 = D1*A*D2 (semi-involutory) and A^-T = D1*A*D2 (semi-orthogonal)
with recovery of the diagonal pair, and the order-based four-way
classification of circulants.

A recovered pair is canonical: within each connected component of the
bipartite nonzero-pattern graph, the d-entry at the component's smallest
row index is normalized to 1.  On a connected pattern the full solution
set is exactly the one-parameter orbit {(c*D1, c^-1*D2)}, so the
trace-zero, nonperiodicity, and scalar-power predicates reported here do
not depend on the anchor choice.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .circulant import build, interleaved_sums, is_circulant
from .field import GF2m
from .matgf import (
    DimensionMismatch,
    Matrix,
    Singular,
    det,
    diag_trace,
    dims,
    identity,
    inverse,
    require_square,
    sandwich,
    submatrix,
    transpose,
)

# Order categories: odd, power of two, == 0 mod 4 but not a power of two,
# and == 2 mod 4 (with 2 itself claimed by POW2).
ODD = "ODD"
POW2 = "POW2"
MOD4_ZERO = "MOD4_ZERO"
MOD4_TWO = "MOD4_TWO"

SCHEMA_VERSION = 1


def is_power_of_two(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


def order_category(n: int) -> str:
    if n % 2 == 1:
        return ODD
    if is_power_of_two(n):
        return POW2
    return MOD4_ZERO if n % 4 == 0 else MOD4_TWO


@dataclass(frozen=True)
class MdsVerdict:
    is_mds: bool
    witness: Optional[tuple[tuple[int, ...], tuple[int, ...]]] = None

    def __bool__(self) -> bool:
        return self.is_mds


@dataclass(frozen=True)
class DiagonalPair:
    """Associated diagonal pair (D1, D2), all entries nonzero.

    `anchors` lists the row index normalized to d1 == 1 in each connected
    component of the nonzero pattern (one entry per component).
    """

    d1: tuple[int, ...]
    d2: tuple[int, ...]
    anchors: tuple[int, ...] = (0,)


def is_mds(gf: GF2m, A: Matrix) -> MdsVerdict:
    """Check every square submatrix for nonsingularity, smallest first.

    Scans minors in increasing size with lexicographic row/column index
    sets and stops at the first singular one; the 1x1 and 2x2 layers kill
    almost every non-MDS candidate, which is what scan throughput lives on.
    """
    n = require_square(A)
    for i in range(n):
        for j in range(n):
            if A[i][j] == 0:
                return MdsVerdict(False, ((i,), (j,)))
    mul = gf.mul
    for i, j in combinations(range(n), 2):
        for k, l in combinations(range(n), 2):
            if mul(A[i][k], A[j][l]) == mul(A[i][l], A[j][k]):
                return MdsVerdict(False, ((i, j), (k, l)))
    for size in range(3, n + 1):
        for rows in combinations(range(n), size):
            for cols in combinations(range(n), size):
                if det(gf, submatrix(A, rows, cols)) == 0:
                    return MdsVerdict(False, (rows, cols))
    return MdsVerdict(True, None)


def is_involutory(gf: GF2m, A: Matrix) -> bool:
    """A*A == I, computed entrywise with early exit."""
    n = require_square(A)
    mul = gf.mul
    for i in range(n):
        arow = A[i]
        for j in range(n):
            s = 0
            for k in range(n):
                s ^= mul(arow[k], A[k][j])
            if s != (1 if i == j else 0):
                return False
    return True


def is_orthogonal(gf: GF2m, A: Matrix) -> bool:
    """A*A^T == I (which over a field already forces A^T*A == I)."""
    n = require_square(A)
    mul = gf.mul
    for i in range(n):
        arow = A[i]
        for j in range(n):
            brow = A[j]
            s = 0
            for k in range(n):
                s ^= mul(arow[k], brow[k])
            if s != (1 if i == j else 0):
                return False
    return True


def diagonal_scaling_solve(
    gf: GF2m, A: Matrix, B: Matrix, anchor_pick=min
) -> Optional[DiagonalPair]:
    """Find nonsingular diagonal D1, D2 with B == D1*A*D2, or None.

    The zero patterns of A and B must coincide.  On nonzero positions the
    ratio B[i][j]/A[i][j] must factor as d_i*e_j; the factorization is
    recovered by spanning-tree propagation over the bipartite
    row/column graph and then verified on every position.  `anchor_pick`
    chooses the anchored row among each component's rows (min by default)
    and exists so tests can exercise the scalar freedom.
    """
    n = require_square(A)
    if dims(B) != (n, n):
        raise DimensionMismatch("A and B must have identical shapes")
    mul = gf.mul
    inv = gf.inv

    ratio = [[0] * n for _ in range(n)]
    row_adj: list[list[int]] = [[] for _ in range(n)]
    col_adj: list[list[int]] = [[] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            a = A[i][j]
            b = B[i][j]
            if (a == 0) != (b == 0):
                return None
            if a:
                ratio[i][j] = mul(b, inv(a))
                row_adj[i].append(j)
                col_adj[j].append(i)

    d: list[Optional[int]] = [None] * n
    e: list[Optional[int]] = [None] * n
    anchors = []
    seen_rows = [False] * n
    for start in range(n):
        if seen_rows[start]:
            continue
        # collect the rows of this component first so the anchor choice
        # does not depend on traversal order
        comp_rows = [start]
        comp_cols: list[int] = []
        seen_rows[start] = True
        seen_cols = set()
        frontier = [("r", start)]
        while frontier:
            kind, idx = frontier.pop()
            if kind == "r":
                for j in row_adj[idx]:
                    if j not in seen_cols:
                        seen_cols.add(j)
                        comp_cols.append(j)
                        frontier.append(("c", j))
            else:
                for i in col_adj[idx]:
                    if not seen_rows[i]:
                        seen_rows[i] = True
                        comp_rows.append(i)
                        frontier.append(("r", i))
        anchor = anchor_pick(comp_rows)
        anchors.append(anchor)
        d[anchor] = 1
        queue = [("r", anchor)]
        while queue:
            kind, idx = queue.pop()
            if kind == "r":
                di = d[idx]
                for j in row_adj[idx]:
                    if e[j] is None:
                        e[j] = mul(ratio[idx][j], inv(di))
                        queue.append(("c", j))
            else:
                ej = e[idx]
                for i in col_adj[idx]:
                    if d[i] is None:
                        d[i] = mul(ratio[i][idx], inv(ej))
                        queue.append(("r", i))

    # isolated all-zero rows/columns leave free entries; pin them to 1
    d_full = [v if v is not None else 1 for v in d]
    e_full = [v if v is not None else 1 for v in e]

    # verify every nonzero position (covers all non-tree edges)
    for i in range(n):
        for j in row_adj[i]:
            if mul(d_full[i], e_full[j]) != ratio[i][j]:
                return None
    return DiagonalPair(tuple(d_full), tuple(e_full), tuple(sorted(anchors)))


def semi_orthogonal_check(gf: GF2m, A: Matrix) -> Optional[DiagonalPair]:
    """Diagonal pair with A^-T == D1*A*D2, or None.  Raises Singular."""
    return diagonal_scaling_solve(gf, A, transpose(inverse(gf, A)))


def semi_involutory_check(gf: GF2m, A: Matrix) -> Optional[DiagonalPair]:
    """Diagonal pair with A^-1 == D1*A*D2, or None.  Raises Singular."""
    return diagonal_scaling_solve(gf, A, inverse(gf, A))


def power_scalar(gf: GF2m, d, n: int) -> Optional[int]:
    """The scalar k with D^n == k*I, if the entrywise n-th powers agree.

    Returns None when the powers differ or when k would be 0 (the scalar
    is required to be nonzero, so a zero entry disqualifies the diagonal).
    """
    powers = {gf.pow(v, n) for v in d}
    if len(powers) != 1:
        return None
    k = powers.pop()
    return k if k != 0 else None


def is_nonperiodic(d) -> bool:
    """For order 2h: every opposite pair differs (d_i != d_{i+h})."""
    from .circulant import OddOrder

    n = len(d)
    if n % 2 != 0:
        raise OddOrder(f"nonperiodicity needs an even order, got {n}")
    h = n // 2
    return all(d[i] != d[i + h] for i in range(h))


@dataclass(frozen=True)
class SemiReport:
    """Outcome of one semi-property check on a nonsingular matrix."""

    found: bool
    pair: Optional[DiagonalPair] = None
    k1: Optional[int] = None
    k2: Optional[int] = None
    trace_d1: Optional[int] = None
    trace_d2: Optional[int] = None


@dataclass(frozen=True)
class Classification:
    """Everything `check` reports about one circulant first row."""

    order: int
    category: str
    first_row: tuple[int, ...]
    singular: bool
    mds: MdsVerdict
    involutory: bool
    orthogonal: bool
    semi_involutory: SemiReport
    semi_orthogonal: SemiReport
    nonperiodic_d1: Optional[bool]  # of the semi-orthogonal pair, even order only
    nonperiodic_d2: Optional[bool]


def _semi_report(gf: GF2m, order: int, pair: Optional[DiagonalPair]) -> SemiReport:
    if pair is None:
        return SemiReport(found=False)
    return SemiReport(
        found=True,
        pair=pair,
        k1=power_scalar(gf, pair.d1, order),
        k2=power_scalar(gf, pair.d2, order),
        trace_d1=diag_trace(pair.d1),
        trace_d2=diag_trace(pair.d2),
    )


def classify(gf: GF2m, first_row) -> Classification:
    """Run the full property battery on circulant(first_row)."""
    row = tuple(first_row)
    n = len(row)
    A = build(row)
    category = order_category(n)
    try:
        Ainv = inverse(gf, A)
    except Singular:
        return Classification(
            order=n,
            category=category,
            first_row=row,
            singular=True,
            mds=is_mds(gf, A),
            involutory=False,
            orthogonal=False,
            semi_involutory=SemiReport(found=False),
            semi_orthogonal=SemiReport(found=False),
            nonperiodic_d1=None,
            nonperiodic_d2=None,
        )
    si = _semi_report(gf, n, diagonal_scaling_solve(gf, A, Ainv))
    so = _semi_report(gf, n, diagonal_scaling_solve(gf, A, transpose(Ainv)))
    np1 = np2 = None
    if n % 2 == 0 and so.found:
        np1 = is_nonperiodic(so.pair.d1)
        np2 = is_nonperiodic(so.pair.d2)
    return Classification(
        order=n,
        category=category,
        first_row=row,
        singular=False,
        mds=is_mds(gf, A),
        involutory=is_involutory(gf, A),
        orthogonal=is_orthogonal(gf, A),
        semi_involutory=si,
        semi_orthogonal=so,
        nonperiodic_d1=np1,
        nonperiodic_d2=np2,
    )


def _semi_json(gf: GF2m, rep: SemiReport) -> dict:
    fmt = gf.format_element
    if not rep.found:
        return {"found": False, "d1": None, "d2": None, "k1": None, "k2": None,
                "trace_d1": None, "trace_d2": None}
    return {
        "found": True,
        "d1": [fmt(v) for v in rep.pair.d1],
        "d2": [fmt(v) for v in rep.pair.d2],
        "k1": fmt(rep.k1) if rep.k1 is not None else None,
        "k2": fmt(rep.k2) if rep.k2 is not None else None,
        "trace_d1": fmt(rep.trace_d1),
        "trace_d2": fmt(rep.trace_d2),
    }


def classification_json(gf: GF2m, cls: Classification) -> dict:
    fmt = gf.format_element
    witness = None
    if cls.mds.witness is not None:
        witness = {"rows": list(cls.mds.witness[0]), "cols": list(cls.mds.witness[1])}
    return {
        "schema_version": SCHEMA_VERSION,
        "field": {"m": gf.m, "poly": f"0x{gf.poly:X}"},
        "order": cls.order,
        "first_row": [fmt(v) for v in cls.first_row],
        "singular": cls.singular,
        "mds": cls.mds.is_mds,
        "mds_witness": witness,
        "involutory": cls.involutory,
        "orthogonal": cls.orthogonal,
        "semi_involutory": _semi_json(gf, cls.semi_involutory),
        "semi_orthogonal": _semi_json(gf, cls.semi_orthogonal),
        "category": cls.category,
        "nonperiodic_d1": cls.nonperiodic_d1,
        "nonperiodic_d2": cls.nonperiodic_d2,
    }


def matrix_properties_json(gf: GF2m, A: Matrix) -> dict:
    """`check` output for an explicit (not necessarily circulant) matrix."""
    n = require_square(A)
    fmt = gf.format_element
    try:
        Ainv = inverse(gf, A)
        singular = False
    except Singular:
        Ainv = None
        singular = True
    mds = is_mds(gf, A)
    if singular:
        si = SemiReport(found=False)
        so = SemiReport(found=False)
    else:
        si = _semi_report(gf, n, diagonal_scaling_solve(gf, A, Ainv))
        so = _semi_report(gf, n, diagonal_scaling_solve(gf, A, transpose(Ainv)))
    np1 = np2 = None
    if n % 2 == 0 and so.found:
        np1 = is_nonperiodic(so.pair.d1)
        np2 = is_nonperiodic(so.pair.d2)
    witness = None
    if mds.witness is not None:
        witness = {"rows": list(mds.witness[0]), "cols": list(mds.witness[1])}
    circ = is_circulant(A)
    return {
        "schema_version": SCHEMA_VERSION,
        "field": {"m": gf.m, "poly": f"0x{gf.poly:X}"},
        "order": n,
        "circulant": circ,
        "first_row": [fmt(v) for v in A[0]] if circ else None,
        "matrix": [[fmt(v) for v in row] for row in A],
        "singular": singular,
        "mds": mds.is_mds,
        "mds_witness": witness,
        "involutory": False if singular else is_involutory(gf, A),
        "orthogonal": False if singular else is_orthogonal(gf, A),
        "semi_involutory": _semi_json(gf, si),
        "semi_orthogonal": _semi_json(gf, so),
        "category": order_category(n),
        "nonperiodic_d1": np1,
        "nonperiodic_d2": np2,
    }
