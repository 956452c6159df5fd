"""
Tests for exact rank over Q and F_p.
"""
from fractions import Fraction

import numpy as np
import pytest

from schemas.field import FieldSpec
from services.xla import SCREEN_PRIME, ExactMatrix, cokernel_dim, kernel_dim, rank
from utils.seeding import make_rng


@pytest.mark.parametrize("prime", [None, 32003])
def test_identity_and_zero(prime):
    field = FieldSpec(prime=prime)
    eye = ExactMatrix.identity(5, field)
    assert rank(eye) == 5
    assert (kernel_dim(eye), cokernel_dim(eye)) == (0, 0)
    z = ExactMatrix.zeros(3, 7, field)
    assert rank(z) == 0
    assert (kernel_dim(z), cokernel_dim(z)) == (7, 3)


def test_empty_matrix():
    assert rank(ExactMatrix.zeros(0, 4, FieldSpec())) == 0


def test_rational_entries():
    m = ExactMatrix.from_rows([[Fraction(1, 2), Fraction(1, 3)], [1, Fraction(2, 3)]], FieldSpec(prime=None))
    assert rank(m) == 1


def test_rank_over_q_bounds_rank_mod_p():
    rows = [[2, 0], [0, 2]]
    assert rank(ExactMatrix.from_rows(rows, FieldSpec(prime=None))) == 2
    assert rank(ExactMatrix.from_rows(rows, FieldSpec(prime=2))) == 0


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_low_rank_products(seed):
    rng = make_rng(seed)
    left = rng.integers(-9, 10, size=(8, 3))
    right = rng.integers(-9, 10, size=(3, 9))
    prod = (left.astype(object).dot(right.astype(object))).tolist()
    rq = rank(ExactMatrix.from_rows(prod, FieldSpec(prime=None)))
    rp = rank(ExactMatrix.from_rows(prod, FieldSpec(prime=32003)))
    assert rq <= 3
    assert rq >= rp


@pytest.mark.parametrize("prime", [None, 32003])
def test_rank_nullity_and_transpose(prime):
    field = FieldSpec(prime=prime)
    rng = make_rng(7)
    for shape in ((4, 9), (12, 5), (10, 10)):
        m = ExactMatrix.from_rows(rng.integers(-5, 6, size=shape).tolist(), field)
        assert kernel_dim(m) + rank(m) == m.cols
        assert rank(m.T) == rank(m)


def test_blocks(fp):
    a = ExactMatrix.from_rows([[1, 2], [3, 4]], fp)
    eye = ExactMatrix.identity(2, fp)
    big = ExactMatrix.blocks([[a, eye], [eye, a]], fp)
    assert big.shape == (4, 4)
    assert rank(big) == 4


def test_reduce_mod():
    m = ExactMatrix.from_rows([[32004, -1]], FieldSpec(prime=None))
    red = m.reduce_mod(32003)
    assert red.data.tolist() == [[1, 32002]]
    with pytest.raises(ValueError):
        ExactMatrix.from_rows([[Fraction(1, 2)]], FieldSpec(prime=None)).reduce_mod(7)


def test_rational_rank_falls_back_when_screen_prime_divides():
    qq = FieldSpec(prime=None)
    m = ExactMatrix.from_rows([[SCREEN_PRIME, 0], [0, 1]], qq)
    assert rank(m.reduce_mod(SCREEN_PRIME)) == 1
    assert rank(m) == 2
    singular = ExactMatrix.from_rows([[2, 4], [Fraction(1, 3), Fraction(2, 3)]], qq)
    assert rank(singular) == 1


def test_rejects_non_matrix():
    with pytest.raises(ValueError):
        ExactMatrix(np.zeros(3), FieldSpec())
