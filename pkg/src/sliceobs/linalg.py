"""Exact linear algebra over the rings used elsewhere: integers,
rationals, Laurent polynomials, and prime fields.

Everything here is deliberately dependency-free.  Determinants come in
three flavors: fraction-free Bareiss elimination for generic exact
entries, fast Gaussian elimination modulo a prime, and an
evaluation/interpolation route for polynomial matrices that stays in
integer arithmetic until the final interpolation step.
"""

from fractions import Fraction

from .cyclotomic import Cyclotomic
from .laurent import LaurentPolynomial, _to_q, one, zero, t

__all__ = [
    "Matrix",
    "involution",
    "det_bareiss",
    "det_gf",
    "det_laurent",
    "smith_normal_form",
    "smith_normal_form_with_transforms",
    "snf_over_rational_polynomials",
]


class Matrix:
    """Immutable matrix with arbitrary exact entries."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("ragged rows")
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @staticmethod
    def identity(n, one=1, zero=0):
        return Matrix(tuple(tuple(one if i == j else zero
                                  for j in range(n)) for i in range(n)))

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0]) if self.rows else 0

    def __getitem__(self, i):
        return self.rows[i]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.nrows != other.nrows or self.ncols != other.ncols:
            return False
        return all(a == b for ra, rb in zip(self.rows, other.rows)
                   for a, b in zip(ra, rb))

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = ",\n        ".join(repr(list(r)) for r in self.rows)
        return f"Matrix([{body}])"

    def transpose(self):
        return Matrix(tuple(zip(*self.rows))) if self.rows else self

    def map(self, fn):
        return Matrix(tuple(tuple(fn(x) for x in r) for r in self.rows))

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return Matrix(tuple(tuple(a + b for a, b in zip(ra, rb))
                            for ra, rb in zip(self.rows, other.rows)))

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return Matrix(tuple(tuple(a - b for a, b in zip(ra, rb))
                            for ra, rb in zip(self.rows, other.rows)))

    def __neg__(self):
        return self.map(lambda x: -x)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise ValueError("shape mismatch")
            cols = other.transpose().rows
            return Matrix(tuple(
                tuple(_dot(row, col) for col in cols) for row in self.rows))
        return Matrix(tuple(tuple(x * other for x in r) for r in self.rows))

    def __rmul__(self, other):
        return Matrix(tuple(tuple(other * x for x in r) for r in self.rows))

    def minor(self, i, j):
        """Submatrix with row i and column j removed."""
        return Matrix(tuple(tuple(x for cj, x in enumerate(r) if cj != j)
                            for ri, r in enumerate(self.rows) if ri != i))


def _dot(row, col):
    total = None
    for a, b in zip(row, col):
        prod = a * b
        total = prod if total is None else total + prod
    return 0 if total is None else total


def involution(obj, conjugate=None):
    """The standard involution: t -> t^-1 on Laurent polynomials, complex
    conjugation on cyclotomic elements, and conjugate-transpose on matrices.
    """
    if isinstance(obj, Matrix):
        return obj.transpose().map(lambda x: involution(x, conjugate))
    if isinstance(obj, LaurentPolynomial):
        return obj.involution(conjugate)
    if isinstance(obj, Cyclotomic):
        return obj.conjugate()
    if isinstance(obj, (int, Fraction)):
        return obj
    raise TypeError(f"no involution for {type(obj).__name__}")


# -- determinants -------------------------------------------------------------


def _exact_div(num, den):
    """Division known to be exact in the entry ring."""
    if isinstance(den, int):
        if den == 1:
            return num
        if den == -1:
            return -num
        if isinstance(num, int):
            q, r = divmod(num, den)
            assert not r, "Bareiss division was not exact"
            return q
        if isinstance(num, Fraction):
            return num / den
        den = LaurentPolynomial.constant(den)
    if isinstance(den, Fraction):
        return num / den
    if isinstance(den, LaurentPolynomial):
        if not isinstance(num, LaurentPolynomial):
            num = LaurentPolynomial.constant(num)
        return num.exact_div(den)
    raise TypeError(f"no exact division by {type(den).__name__}")


def det_bareiss(m):
    """Fraction-free determinant for exact entries (int, Fraction, or
    Laurent polynomial).  All intermediate divisions are exact.
    """
    rows = m.rows if isinstance(m, Matrix) else m
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    assert all(len(r) == n for r in a), "determinant of non-square matrix"
    sign = 1
    prev = 1
    for k in range(n - 1):
        if not a[k][k]:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return _zero_like(a[k][k])
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            row_i, aik = a[i], a[i][k]
            row_k = a[k]
            for j in range(k + 1, n):
                row_i[j] = _exact_div(row_i[j] * pivot - aik * row_k[j], prev)
            row_i[k] = _zero_like(pivot)
        prev = pivot
    d = a[n - 1][n - 1]
    return -d if sign < 0 else d


def _zero_like(x):
    return LaurentPolynomial({}) if isinstance(x, LaurentPolynomial) else 0


def det_gf(rows, s):
    """Determinant of an integer matrix modulo the prime s, by Gaussian
    elimination.  Accepts a Matrix or a list of rows; returns an int in
    [0, s).
    """
    if isinstance(rows, Matrix):
        rows = rows.rows
    a = [[x % s for x in r] for r in rows]
    n = len(a)
    det = 1
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k]), None)
        if piv is None:
            return 0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = s - det
        pk = a[k][k]
        det = det * pk % s
        inv = pow(pk, s - 2, s)
        row_k = a[k]
        for i in range(k + 1, n):
            f = a[i][k]
            if f:
                f = f * inv % s
                a[i] = [(x - f * y) % s for x, y in zip(a[i], row_k)]
    return det % s


def det_laurent(m):
    """Determinant of a matrix of Laurent polynomials with integer
    coefficients, by evaluation at integer points and Newton interpolation.

    Row-wise powers of t are factored out first so every evaluation is a
    plain integer determinant (computed by Bareiss), then the interpolated
    coefficients are checked to be integers.
    """
    rows = m.rows if isinstance(m, Matrix) else m
    rows = [[x if isinstance(x, LaurentPolynomial)
             else LaurentPolynomial.constant(x) for x in r] for r in rows]
    n = len(rows)
    if n == 0:
        return one()
    total_shift = 0
    degree_bound = 0
    shifted = []
    for r in rows:
        exps = [x.min_exp for x in r if not x.is_zero]
        if not exps:
            return zero()
        lo = min(exps)
        total_shift += lo
        r = [x.shift(-lo) for x in r]
        degree_bound += max(x.max_exp for x in r if not x.is_zero)
        shifted.append(r)
    pts = _eval_points(degree_bound + 1)
    vals = [det_bareiss([[x(p) for x in r] for r in shifted]) for p in pts]
    poly = _newton_interpolate(pts, vals)
    return poly.shift(total_shift)


def _eval_points(count):
    pts = [0]
    k = 1
    while len(pts) < count:
        pts.append(k)
        if len(pts) < count:
            pts.append(-k)
        k += 1
    return pts[:count]


def _newton_interpolate(pts, vals):
    """The unique integer polynomial of degree < len(pts) through the
    given integer values.  Raises if the interpolant is not integral.
    """
    coef = [Fraction(v) for v in vals]
    n = len(pts)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (pts[i] - pts[i - j])
    poly = zero()
    basis = one()
    for i in range(n):
        if coef[i]:
            poly = poly + basis.scale(coef[i])
        basis = basis * (t() - pts[i])
    out = {}
    for e, c in poly.items():
        assert c.denominator == 1, "interpolant not integral"
        out[e] = c.numerator
    return LaurentPolynomial(out)


# -- Smith normal form --------------------------------------------------------


class _IntegerDomain:
    @staticmethod
    def lift(x):
        assert isinstance(x, int)
        return x

    @staticmethod
    def is_zero(x):
        return x == 0

    @staticmethod
    def size(x):
        return abs(x)

    @staticmethod
    def divmod(a, b):
        q = a // b
        r = a - q * b
        # choose the representative of least absolute value
        if 2 * abs(r) > abs(b):
            adj = 1 if (r > 0) == (b > 0) else -1
            q += adj
            r -= adj * b
        return q, r

    @staticmethod
    def normalize(x):
        return abs(x)


class _RationalPolyDomain:
    @staticmethod
    def lift(x):
        if not isinstance(x, LaurentPolynomial):
            x = LaurentPolynomial.constant(x)
        return _to_q(x).aligned()

    @staticmethod
    def is_zero(x):
        return x.is_zero

    @staticmethod
    def size(x):
        return x.degree

    @staticmethod
    def divmod(a, b):
        return a.divmod_poly(b)

    @staticmethod
    def normalize(x):
        return x.monic()


def _snf_invariants(rows, dom):
    a = [[dom.lift(x) for x in r] for r in rows]
    m = len(a)
    n = len(a[0]) if a else 0
    out = []
    for k in range(min(m, n)):
        while True:
            pivot = None
            best = None
            for i in range(k, m):
                for j in range(k, n):
                    if not dom.is_zero(a[i][j]):
                        sz = dom.size(a[i][j])
                        if best is None or sz < best:
                            best = sz
                            pivot = (i, j)
            if pivot is None:
                # everything remaining is zero
                pad = zero() if dom is _RationalPolyDomain else 0
                return out + [pad] * (min(m, n) - k)
            pi, pj = pivot
            if pi != k:
                a[k], a[pi] = a[pi], a[k]
            if pj != k:
                for row in a:
                    row[k], row[pj] = row[pj], row[k]
            p = a[k][k]
            dirty = False
            for i in range(k + 1, m):
                if dom.is_zero(a[i][k]):
                    continue
                q, _ = dom.divmod(a[i][k], p)
                if not dom.is_zero(q):
                    a[i] = [x - q * y for x, y in zip(a[i], a[k])]
                if not dom.is_zero(a[i][k]):
                    dirty = True
            for j in range(k + 1, n):
                if dom.is_zero(a[k][j]):
                    continue
                q, _ = dom.divmod(a[k][j], p)
                if not dom.is_zero(q):
                    for row in a[k:]:
                        row[j] = row[j] - q * row[k]
                if not dom.is_zero(a[k][j]):
                    dirty = True
            if dirty:
                continue
            # row and column are clear; enforce divisibility of the rest
            offender = None
            for i in range(k + 1, m):
                for j in range(k + 1, n):
                    if dom.is_zero(a[i][j]):
                        continue
                    _, r = dom.divmod(a[i][j], p)
                    if not dom.is_zero(r):
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            a[k] = [x + y for x, y in zip(a[k], a[offender])]
        out.append(dom.normalize(a[k][k]))
    return out


def smith_normal_form(m):
    """Invariant factors d_1 | d_2 | ... (nonnegative ints, zeros last) of
    an integer matrix."""
    rows = m.rows if isinstance(m, Matrix) else m
    return _snf_invariants(rows, _IntegerDomain)


def smith_normal_form_with_transforms(m):
    """Integer Smith form with the change of basis: returns (invariants,
    U, V) where U and V are unimodular and U m V is diagonal.  The rows
    of U selected by the nontrivial invariants project onto the cokernel
    coordinates."""
    rows = m.rows if isinstance(m, Matrix) else m
    a = [[int(x) for x in r] for r in rows]
    mm = len(a)
    nn = len(a[0]) if a else 0
    u = [[int(i == j) for j in range(mm)] for i in range(mm)]
    v = [[int(i == j) for j in range(nn)] for i in range(nn)]
    dm = _IntegerDomain.divmod
    for k in range(min(mm, nn)):
        while True:
            pivot = None
            best = None
            for i in range(k, mm):
                for j in range(k, nn):
                    if a[i][j]:
                        sz = abs(a[i][j])
                        if best is None or sz < best:
                            best = sz
                            pivot = (i, j)
            if pivot is None:
                break
            pi, pj = pivot
            if pi != k:
                a[k], a[pi] = a[pi], a[k]
                u[k], u[pi] = u[pi], u[k]
            if pj != k:
                for row in a:
                    row[k], row[pj] = row[pj], row[k]
                for row in v:
                    row[k], row[pj] = row[pj], row[k]
            p = a[k][k]
            dirty = False
            for i in range(k + 1, mm):
                if a[i][k] == 0:
                    continue
                q, _ = dm(a[i][k], p)
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[k])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[k])]
                if a[i][k]:
                    dirty = True
            for j in range(k + 1, nn):
                if a[k][j] == 0:
                    continue
                q, _ = dm(a[k][j], p)
                if q:
                    for row in a:
                        row[j] -= q * row[k]
                    for row in v:
                        row[j] -= q * row[k]
                if a[k][j]:
                    dirty = True
            if dirty:
                continue
            offender = None
            for i in range(k + 1, mm):
                if any(x % p for x in a[i][k + 1:]):
                    offender = i
                    break
            if offender is None:
                break
            a[k] = [x + y for x, y in zip(a[k], a[offender])]
            u[k] = [x + y for x, y in zip(u[k], u[offender])]
        if a[k][k] < 0:
            a[k] = [-x for x in a[k]]
            u[k] = [-x for x in u[k]]
    inv = [a[k][k] for k in range(min(mm, nn))]
    return inv, Matrix(u), Matrix(v)


def snf_over_rational_polynomials(m):
    """Invariant factors over Q[t], as monic polynomials (zeros last)."""
    rows = m.rows if isinstance(m, Matrix) else m
    return _snf_invariants(rows, _RationalPolyDomain)
