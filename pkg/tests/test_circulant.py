"""Circulant construction, recognition, and structural sums."""

import random

import pytest

from circmds.circulant import OddOrder, build, interleaved_sums, is_circulant, row_sum
from circmds.field import get_field
from circmds.matgf import det, identity, mat_mul, transpose
from circmds.props import is_mds

GF4 = get_field(2, 0x7)
GF8 = get_field(3, 0xB)
F11B = get_field(8, 0x11B)


def test_entry_rule():
    A = build((10, 20, 30))
    assert A == [
        [10, 20, 30],
        [30, 10, 20],
        [20, 30, 10],
    ]


def test_aes_diffusion_matrix():
    A = build((0x02, 0x03, 0x01, 0x01))
    assert A == [
        [0x02, 0x03, 0x01, 0x01],
        [0x01, 0x02, 0x03, 0x01],
        [0x01, 0x01, 0x02, 0x03],
        [0x03, 0x01, 0x01, 0x02],
    ]


def test_build_1x1():
    assert build((7,)) == [[7]]


def test_is_circulant():
    assert is_circulant(build((1, 2, 3, 4)))
    assert is_circulant(identity(4))
    assert not is_circulant([[1, 0], [1, 1]])


def test_row_sum_examples():
    assert row_sum((1, 1)) == 0
    assert det(GF4, build((1, 1))) == 0
    assert row_sum((0x02, 0x03, 0x01, 0x01)) == 0x01
    assert row_sum((7,)) == 7


def test_interleaved_sums_aes():
    assert interleaved_sums((0x02, 0x03, 0x01, 0x01)) == (0x03, 0x02)


def test_interleaved_sums_cancel():
    assert interleaved_sums((5, 9, 5, 9)) == (0, 0)


def test_interleaved_sums_odd_order():
    with pytest.raises(OddOrder):
        interleaved_sums((1, 2, 3))


def test_transpose_reverses_tail():
    rng = random.Random(20)
    for n in (1, 2, 3, 5, 6):
        row = [rng.randrange(GF8.order) for _ in range(n)]
        reversed_tail = [row[0]] + row[1:][::-1]
        assert transpose(build(row)) == build(reversed_tail)


def test_transpose_entrywise_oracle():
    # T[i][j] = C[j][i] = c[(i-j) mod n] directly from the entry rule
    row = (3, 1, 4, 1, 5)
    T = transpose(build(row))
    n = len(row)
    for i in range(n):
        for j in range(n):
            assert T[i][j] == row[(i - j) % n]


def test_circulant_products_are_circulant_and_commute():
    rng = random.Random(21)
    for gf in (GF8, F11B):
        for n in (2, 3, 4, 5):
            A = build([rng.randrange(gf.order) for _ in range(n)])
            B = build([rng.randrange(gf.order) for _ in range(n)])
            AB = mat_mul(gf, A, B)
            assert is_circulant(AB)
            assert AB == mat_mul(gf, B, A)


def test_all_ones_eigenvector():
    rng = random.Random(22)
    for _ in range(20):
        n = rng.randrange(1, 6)
        row = [rng.randrange(GF8.order) for _ in range(n)]
        A = build(row)
        s = row_sum(row)
        ones = [[1]] * n
        assert mat_mul(GF8, A, ones) == [[s]] * n


def test_mds_even_order_forces_nonzero_interleaved_sums():
    # exhaustive at GF(4) order 2: every MDS circulant has nonzero components
    seen_mds = 0
    for a in GF4.elements():
        for b in GF4.elements():
            if is_mds(GF4, build((a, b))).is_mds:
                seen_mds += 1
                even, odd = interleaved_sums((a, b))
                assert even != 0 and odd != 0
    assert seen_mds == 6  # nonzero distinct pairs
