"""Seifert data for the braid-closure family and the invariants that
fall out of it: the Alexander polynomial det(tA - A^T) and its
distinguished square root.

For the n-th member, applying Seifert's algorithm to the closure of
(sigma_1 sigma_2^-1)^n yields a genus n-1 surface whose Seifert matrix
has the block shape [[-B^T, 0], [B, B]] for the (n-1)-square band
matrix B with 1 on the diagonal and -1 on the first superdiagonal.
"""

from dataclasses import dataclass
from math import gcd

from .cyclotomic import Cyclotomic
from .laurent import LaurentPolynomial
from .linalg import Matrix, det_bareiss, det_laurent

__all__ = ["SeifertData", "band_matrix", "seifert_matrix",
           "alexander_polynomial", "p_n"]


def band_matrix(n):
    """The (n-1)-square matrix with 1 on the diagonal, -1 above it."""
    if n < 2:
        raise ValueError("need n >= 2")
    m = n - 1
    return Matrix(tuple(
        tuple(1 if i == j else (-1 if j == i + 1 else 0) for j in range(m))
        for i in range(m)))


@dataclass(frozen=True)
class SeifertData:
    """A Seifert matrix for the n-th closure, on a genus n-1 surface."""
    n: int
    matrix: Matrix

    @property
    def genus(self):
        return self.n - 1

    @property
    def intersection_determinant(self):
        """det(A - A^T); +/-1 exactly when the closure is a knot."""
        a = self.matrix
        return det_bareiss(a - a.transpose())


def seifert_matrix(n):
    b = band_matrix(n)
    bt = b.transpose()
    m = n - 1
    z = [[0] * m for _ in range(m)]
    rows = []
    for i in range(m):
        rows.append(tuple((-bt)[i]) + tuple(z[i]))
    for i in range(m):
        rows.append(tuple(b[i]) + tuple(b[i]))
    return SeifertData(n, Matrix(rows))


def alexander_polynomial(n):
    """det(tA - A^T) for the Seifert matrix A, an integer Laurent
    polynomial (monic of degree 2n-2 for odd n coprime to 3)."""
    a = seifert_matrix(n).matrix
    size = a.nrows
    rows = [[LaurentPolynomial({1: a[i][j], 0: -a[j][i]}
                               if a[i][j] or a[j][i] else {})
             for j in range(size)] for i in range(size)]
    return det_laurent(rows)


def p_n(n):
    """The distinguished square root of the Alexander polynomial:
    prod over k = 1 .. (n-1)/2 of t^2 + (xi^k - 1 + xi^-k) t + 1 with
    xi a primitive n-th root of unity.  Integer coefficients.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError("defined for odd n >= 3")
    acc = LaurentPolynomial.constant(Cyclotomic.from_rational(n, 1))
    one = Cyclotomic.from_rational(n, 1)
    for k in range(1, (n - 1) // 2 + 1):
        mid = Cyclotomic.root(n, k) + Cyclotomic.root(n, n - k) - one
        factor = LaurentPolynomial({2: one, 1: mid, 0: one})
        acc = acc * factor
    out = {}
    for e, c in acc.items():
        out[e] = c.as_int()
    return LaurentPolynomial(out)
