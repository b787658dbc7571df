"""Bit-packed GF(2) matrices, codes, and the length-16 RM(1,4) code."""

import random

import pytest

from bwlab import f2linalg as fl


def test_vec_bits_roundtrip():
    assert fl.vec_from_bits((1, 0, 1, 1)) == 0b1101
    assert fl.vec_to_bits(0b1101, 4) == (1, 0, 1, 1)
    for x in range(64):
        assert fl.vec_from_bits(fl.vec_to_bits(x, 6)) == x


def test_identity_rank_and_inverse():
    m = fl.F2Matrix.identity(7)
    assert fl.rank(m) == 7
    assert fl.inverse(m) == m


def test_rank_drops_on_dependent_rows():
    m = fl.F2Matrix.from_rows([[1, 0, 1], [0, 1, 1], [1, 1, 0]])
    assert fl.rank(m) == 2
    assert not fl.is_invertible(m)
    with pytest.raises(ValueError):
        fl.inverse(m)


def test_inverse_roundtrip_random():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randint(1, 10)
        m = fl.random_invertible(n, rng)
        assert fl.rank(m) == n
        assert m.mul(fl.inverse(m)) == fl.F2Matrix.identity(n)


def test_mul_vec_agrees_with_matrix_mul():
    rng = random.Random(11)
    m = fl.random_invertible(6, rng)
    for x in range(64):
        col = fl.F2Matrix(6, 1, tuple((x >> i) & 1 for i in range(6)))
        expect = fl.vec_from_bits(tuple(r[0] for r in m.mul(col).row_lists()))
        assert m.mul_vec(x) == expect


def test_transpose_involution():
    rng = random.Random(3)
    m = fl.random_invertible(5, rng)
    assert m.transpose().transpose() == m


def test_rm14_dimension():
    assert fl.rm14().dimension == 5


def test_rm14_codeword_count():
    words = fl.enumerate_codewords(fl.rm14())
    assert len(words) == 32
    assert len(set(words)) == 32
    assert 0 in words and 0xFFFF in words


def test_rm14_weight_distribution():
    assert fl.weight_enumerator(fl.rm14()) == {0: 1, 8: 30, 16: 1}


def test_rm14_closed_under_addition():
    words = set(fl.enumerate_codewords(fl.rm14()))
    for a in words:
        for b in words:
            assert (a ^ b) in words


def test_code_contains():
    code = fl.rm14()
    assert code.contains(0x5555)
    assert code.contains(0x5555 ^ 0x3333)
    assert not code.contains(0x0001)


def test_enumeration_guard():
    gens = fl.F2Matrix.identity(fl.MAX_ENUM_DIM + 1)
    big = fl.F2Code(gens, fl.MAX_ENUM_DIM + 1)
    with pytest.raises(ValueError):
        fl.enumerate_codewords(big)


def test_row_space_basis_spans():
    m = fl.F2Matrix.from_rows([[1, 1, 0], [0, 1, 1], [1, 0, 1]])
    basis = fl.row_space_basis(m)
    assert len(basis) == fl.rank(m) == 2


def test_matrix_file_roundtrip(tmp_path):
    rng = random.Random(5)
    m = fl.random_invertible(9, rng)
    path = tmp_path / "m.f2"
    fl.write_matrix(m, path)
    assert fl.read_matrix(path) == m
