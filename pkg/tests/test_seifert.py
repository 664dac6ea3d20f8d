"""Seifert matrices for the braid-closure family and the polynomials
derived from them."""

import pytest

from sliceobs.laurent import one as lp_one, t as lp_t
from sliceobs.linalg import det_bareiss
from sliceobs.seifert import (
    alexander_polynomial,
    band_matrix,
    p_n,
    seifert_matrix,
)

t = lp_t()
one = lp_one()


class TestBandMatrix:
    def test_smallest(self):
        assert band_matrix(2).rows == ((1,),)

    def test_shape_and_entries(self):
        b = band_matrix(5)
        assert b.nrows == b.ncols == 4
        for i in range(4):
            for j in range(4):
                expected = 1 if i == j else (-1 if j == i + 1 else 0)
                assert b[i][j] == expected

    def test_rejects_small_n(self):
        with pytest.raises(ValueError):
            band_matrix(1)

    def test_unimodular(self):
        assert det_bareiss(band_matrix(9)) == 1


class TestSeifertMatrix:
    def test_block_shape(self):
        data = seifert_matrix(3)
        a = data.matrix
        assert a.nrows == 4
        b = band_matrix(3)
        for i in range(2):
            for j in range(2):
                assert a[i][j] == -b[j][i]
                assert a[i][j + 2] == 0
                assert a[i + 2][j] == b[i][j]
                assert a[i + 2][j + 2] == b[i][j]

    def test_genus(self):
        assert seifert_matrix(7).genus == 6

    @pytest.mark.parametrize("n", (2, 4, 5, 7, 8, 10, 11))
    def test_intersection_form_unimodular_for_knots(self, n):
        assert seifert_matrix(n).intersection_determinant == 1

    @pytest.mark.parametrize("n", (3, 6, 9))
    def test_intersection_form_degenerate_for_links(self, n):
        assert seifert_matrix(n).intersection_determinant == 0


class TestAlexanderPolynomial:
    def test_figure_eight(self):
        # n = 2 closes to the figure-eight knot
        delta = alexander_polynomial(2)
        target = t * t - 3 * t + one
        assert delta.associates(target)

    def test_determinant_values(self):
        # |Delta(-1)| is the double-branched-cover homology order
        assert abs(alexander_polynomial(2)(-1)) == 5
        assert abs(alexander_polynomial(4)(-1)) == 45

    @pytest.mark.parametrize("n", (2, 4, 5, 7))
    def test_degree_and_normalization(self, n):
        delta = alexander_polynomial(n)
        span = delta.max_exp - delta.min_exp
        assert span == 2 * (n - 1)
        assert abs(delta(1)) == 1

    @pytest.mark.parametrize("n", (2, 4, 5, 7))
    def test_palindromic(self, n):
        delta = alexander_polynomial(n)
        assert delta.associates(delta.involution())


class TestSquareRoot:
    def test_rejects_even_or_tiny(self):
        with pytest.raises(ValueError):
            p_n(4)
        with pytest.raises(ValueError):
            p_n(1)

    @pytest.mark.parametrize("n", (5, 7, 11))
    def test_monic_symmetric_of_degree_n_minus_one(self, n):
        p = p_n(n)
        assert p.min_exp == 0
        assert p.max_exp == n - 1
        assert p.leading_coeff == 1
        assert p.associates(p.involution())

    @pytest.mark.parametrize("n", (5, 7))
    def test_square_is_alexander_polynomial(self, n):
        p = p_n(n)
        assert (p * p).associates(alexander_polynomial(n))

    def test_value_at_one(self):
        for n in (5, 7, 11):
            assert abs(p_n(n)(1)) == 1
