"""Exact determinants, Smith normal forms, and the involution."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from sliceobs.cyclotomic import Cyclotomic
from sliceobs.laurent import LaurentPolynomial, one, t
from sliceobs.linalg import (Matrix, det_bareiss, det_gf, det_laurent,
                             involution, smith_normal_form,
                             smith_normal_form_with_transforms,
                             snf_over_rational_polynomials)


def det_cofactor(rows):
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = rows[0][j] * det_cofactor(minor)
        total = total - term if j % 2 else total + term
    return total


int_matrix = st.integers(min_value=1, max_value=4).flatmap(
    lambda n: st.lists(
        st.lists(st.integers(min_value=-9, max_value=9),
                 min_size=n, max_size=n),
        min_size=n, max_size=n))


def test_matrix_basics():
    m = Matrix([[1, 2], [3, 4]])
    assert m.nrows == 2 and m.ncols == 2
    assert m.transpose() == Matrix([[1, 3], [2, 4]])
    assert m + m == Matrix([[2, 4], [6, 8]])
    assert m * Matrix.identity(2) == m
    assert m.minor(0, 1) == Matrix([[3]])
    with pytest.raises(ValueError):
        Matrix([[1, 2], [3]])
    with pytest.raises(AttributeError):
        m.rows = ()


def test_involution_dispatch():
    assert involution(5) == 5
    assert involution(Fraction(2, 3)) == Fraction(2, 3)
    p = t(2, 3) + 1
    assert involution(p) == t(-2, 3) + 1
    xi = Cyclotomic.root(5, 2)
    assert involution(xi) == Cyclotomic.root(5, 3)
    m = Matrix([[t(), 1], [0, t(-1)]])
    mi = involution(m)
    assert mi == Matrix([[t(-1), 0], [1, t()]])
    with pytest.raises(TypeError):
        involution("nope")


@given(int_matrix)
def test_bareiss_matches_cofactor(rows):
    assert det_bareiss(rows) == det_cofactor(rows)


@given(int_matrix, st.sampled_from([5, 23, 97]))
def test_det_gf_matches_integer_det(rows, s):
    assert det_gf(rows, s) == det_cofactor(rows) % s


def test_det_bareiss_needs_square():
    with pytest.raises(AssertionError):
        det_bareiss([[1, 2, 3], [4, 5, 6]])


def test_det_bareiss_zero_matrix():
    assert det_bareiss([[0, 0], [0, 0]]) == 0
    assert det_bareiss([]) == 1


def test_det_laurent_small():
    m = Matrix([[t() - 1, 1], [0, t() + 1]])
    assert det_laurent(m) == t(2) - 1
    burau = Matrix([[-t(), 1], [t(-1), 0]])
    d = det_laurent(burau)
    assert d == LaurentPolynomial({-1: -1})


@settings(max_examples=50)
@given(st.integers(min_value=1, max_value=3).flatmap(
    lambda n: st.lists(
        st.lists(st.tuples(st.integers(-3, 3), st.integers(-2, 2)),
                 min_size=n, max_size=n),
        min_size=n, max_size=n)))
def test_det_laurent_matches_bareiss(entries):
    rows = [[LaurentPolynomial({e: c}) for c, e in r] for r in entries]
    assert det_laurent(rows) == det_bareiss(rows)


def test_smith_normal_form_known():
    assert smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, 4, 16]]) \
        == [2, 2, 156]
    assert smith_normal_form([[1, 0], [0, 1]]) == [1, 1]
    assert smith_normal_form([[0, 0], [0, 0]]) == [0, 0]
    assert smith_normal_form([[2, 0], [0, 3]]) == [1, 6]


def test_smith_invariants_divide():
    rng = random.Random(7)
    for _ in range(30):
        n = rng.randrange(1, 5)
        rows = [[rng.randrange(-10, 11) for _ in range(n)] for _ in range(n)]
        inv = smith_normal_form(rows)
        for a, b in zip(inv, inv[1:]):
            if b == 0:
                continue
            assert a != 0 and b % a == 0


def test_snf_transforms_diagonalize():
    rng = random.Random(11)
    for _ in range(40):
        m = rng.randrange(1, 5)
        k = rng.randrange(1, 5)
        rows = [[rng.randrange(-9, 10) for _ in range(k)] for _ in range(m)]
        inv, u, v = smith_normal_form_with_transforms(rows)
        assert inv == smith_normal_form(rows)
        prod = u * Matrix(rows) * v
        for i in range(m):
            for j in range(k):
                want = inv[i] if i == j and i < len(inv) else 0
                assert prod[i][j] == want
        assert abs(det_bareiss(u)) == 1
        assert abs(det_bareiss(v)) == 1


def test_snf_over_rational_polynomials():
    # diag(t-1, (t-1)(t+1)) with a twist keeps its invariant factors
    m = Matrix([[t() - 1, t() - 1],
                [LaurentPolynomial({}), (t() - 1) * (t() + 1)]])
    inv = snf_over_rational_polynomials(m)
    assert len(inv) == 2
    assert inv[0] == (t() - 1).monic()
    q, r = inv[1].divmod_poly(inv[0])
    assert r.is_zero
    # det = (t-1)^2 (t+1), so the second factor is (t-1)(t+1)
    assert inv[1] == ((t() - 1) * (t() + 1)).monic()


def test_snf_polynomials_zero_rows():
    m = Matrix([[t() - 1, LaurentPolynomial({})],
                [LaurentPolynomial({}), LaurentPolynomial({})]])
    inv = snf_over_rational_polynomials(m)
    assert inv[0] == (t() - 1).monic()
    assert inv[1].is_zero


def test_det_laurent_with_int_entries_mixed():
    m = [[2, t()], [t(-1), 1]]
    assert det_laurent(m) == one()
