"""The Blanchfield pairing of the braid-closure family, its reduction to
the rational-cyclic linking form of a branched cover, and the order-n
symmetry acting on everything.

The pairing on the infinite cyclic cover is carried by the two
generators sitting at rows n-1 and 2(n-1) of the Seifert presentation;
only the four pairing values between them are ever needed.  Reducing
modulo t^q - 1 turns those values into the Q/Z linking form on the
first homology of the q-fold branched cover, evaluated on the basis
(a, ta, b, tb) when q = 3.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .laurent import LaurentPolynomial, one, poly_xgcd
from .linalg import Matrix, det_laurent, smith_normal_form
from .seifert import seifert_matrix

__all__ = [
    "BlanchfieldEntries",
    "CoverHomology",
    "LinkingForm",
    "SymmetryAction",
    "blanchfield_entries",
    "cover_homology_snf",
    "linking_form",
    "linking_template",
    "symmetry_action",
]

# H_1 of the 3-fold cover is generated by a, ta, b, tb with t^2 = -1 - t;
# basis elements are (deck power j, generator index e)
BASIS = ((0, 0), (1, 0), (0, 1), (1, 1))


@dataclass(frozen=True)
class BlanchfieldEntries:
    """The four pairing values c_ij = (t-1) (A - t A^T)^-1 [p_i, p_j] at
    the generator rows p_1 = n-1, p_2 = 2(n-1), stored as exact fractions
    numerators[i][j] / denominator."""
    n: int
    denominator: LaurentPolynomial
    numerators: tuple

    def entry(self, i, j):
        return self.numerators[i][j], self.denominator


def blanchfield_entries(n):
    a = seifert_matrix(n).matrix
    size = a.nrows
    m = Matrix([[LaurentPolynomial({0: a[i][j], 1: -a[j][i]}
                                   if a[i][j] or a[j][i] else {})
                 for j in range(size)] for i in range(size)])
    den = det_laurent(m)
    assert den, "pairing matrix must be nonsingular"
    tm1 = LaurentPolynomial({1: 1, 0: -1})
    pos = (n - 2, 2 * n - 3)
    nums = []
    for i in range(2):
        row = []
        for j in range(2):
            # inverse entry [p_i, p_j] is the (p_j, p_i) cofactor / det
            cof = det_laurent(m.minor(pos[j], pos[i]))
            if (pos[i] + pos[j]) % 2:
                cof = -cof
            row.append(tm1 * cof)
        nums.append(tuple(row))
    ent = BlanchfieldEntries(n, den, tuple(nums))
    for i in range(2):
        for j in range(2):
            lhs = ent.numerators[i][j].involution() * den
            rhs = ent.numerators[j][i] * den.involution()
            assert lhs == rhs, "pairing entries are not hermitian"
    return ent


# -- branched cover homology ----------------------------------------------------


@dataclass(frozen=True)
class CoverHomology:
    """Invariant factors of H_1 of the q-fold branched cover."""
    n: int
    q: int
    invariants: tuple

    @property
    def torsion(self):
        return tuple(d for d in self.invariants if d > 1)

    @property
    def order(self):
        total = 1
        for d in self.torsion:
            total *= d
        return total


def cover_homology_snf(n, q):
    """Smith form of the presentation t A - A^T with t replaced by the
    companion matrix of t^q - 1."""
    a = seifert_matrix(n).matrix
    size = a.nrows
    rows = []
    for i in range(size):
        for r in range(q):
            row = []
            for j in range(size):
                tij, cij = a[i][j], a[j][i]
                for col in range(q):
                    v = tij if r == (col + 1) % q else 0
                    if r == col:
                        v -= cij
                    row.append(v)
            rows.append(row)
    inv = smith_normal_form(rows)
    assert all(d != 0 for d in inv), "branched cover homology must be finite"
    return CoverHomology(n, q, tuple(inv))


# -- the Q/Z linking form -------------------------------------------------------


def _cyclic(poly, q):
    """Coefficients of poly mod t^q - 1, as a length-q list."""
    out = [0] * q
    for e, c in poly.items():
        out[e % q] += c
    return out


def _cyclic_mul(a, b, q):
    out = [0] * q
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[(i + j) % q] += x * y
    return out


def _annihilator_pair(delta, q):
    """r (length-q int list) and c > 0 with delta * r = c modulo t^q - 1."""
    tq1 = LaurentPolynomial({q: 1, 0: -1})
    aligned = delta.aligned()
    d, u, _ = poly_xgcd(aligned, tq1)
    assert d == one(), "Alexander polynomial shares a root of unity with t^q-1"
    c = 1
    for _, cf in u.items():
        den = Fraction(cf).denominator
        c = c * den // gcd(c, den)
    rc = [0] * q
    for e, cf in u.scale(c).items():
        cf = Fraction(cf)
        assert cf.denominator == 1
        rc[(e - delta.min_exp) % q] += int(cf)
    check = _cyclic_mul(_cyclic(delta, q), rc, q)
    assert check == [c] + [0] * (q - 1)
    return rc, c


@dataclass(frozen=True)
class LinkingForm:
    """The Q/Z linking form on H_1 of the q-fold branched cover, on the
    basis (a, ta, b, tb); values are Fractions in [0, 1)."""
    n: int
    q: int
    matrix: tuple
    template_sign: int  # +1/-1 when the closed form matched, else 0

    def value(self, u, v):
        """Pairing of integer coordinate vectors on the basis."""
        total = Fraction(0)
        for i, x in enumerate(u):
            if x:
                for j, y in enumerate(v):
                    total += x * y * self.matrix[i][j]
        return total % 1


def linking_form(n, q=3):
    ent = blanchfield_entries(n)
    rc, c = _annihilator_pair(ent.denominator, q)
    num_cyc = [[_cyclic(ent.numerators[i][j], q) for j in range(2)]
               for i in range(2)]

    def lam(u, v):
        ju, eu = u
        jv, ev = v
        p = num_cyc[ev][eu]
        p = [p[(m + ju) % q] for m in range(q)]
        beta = _cyclic_mul(p, rc, q)
        return Fraction(beta[(q - jv) % q], c) % 1

    mat = tuple(tuple(lam(u, v) for v in BASIS) for u in BASIS)
    for i in range(4):
        for j in range(4):
            assert mat[i][j] == mat[j][i], "linking form must be symmetric"
            assert n % mat[i][j].denominator == 0, \
                "linking values must have denominator dividing n"
    sign = 0
    if q == 3:
        plus = linking_template(n)
        if mat == plus:
            sign = 1
        elif mat == tuple(tuple((-x) % 1 for x in row) for row in plus):
            sign = -1
    form = LinkingForm(n, q, mat, sign)
    if q == 3:
        tmat = t_matrix()
        assert _transforms_to(form, tmat, form.n), \
            "deck transformation must preserve the linking form"
    return form


def linking_template(n):
    """Closed form of the 3-fold linking matrix, k = (n-1)/2."""
    k = (n - 1) // 2
    base = ((-1, -k, -k, k),
            (-k, -1, 0, -k),
            (-k, 0, 1, k),
            (k, -k, k, 1))
    return tuple(tuple(Fraction(x, n) % 1 for x in row) for row in base)


def _transforms_to(form, g, n):
    """True if the integer matrix g (acting on column coordinates) is an
    isometry: form(gu, gv) = form(u, v) for basis u, v."""
    cols = [[g[i][j] for i in range(4)] for j in range(4)]
    for i in range(4):
        for j in range(4):
            if form.value(cols[i], cols[j]) != form.matrix[i][j]:
                return False
    return True


# -- the order-n symmetry -------------------------------------------------------


def t_matrix():
    """Deck transformation on (a, ta, b, tb); t^2 = -1 - t."""
    return Matrix(((0, -1, 0, 0),
                   (1, -1, 0, 0),
                   (0, 0, 0, -1),
                   (0, 0, 1, -1)))


def r_matrix():
    """The order-n symmetry on (a, ta, b, tb), from r(a) = -t^-1 a - b and
    r(b) = t^-1 a + (1 - t) b with t^-1 = t^2 = -1 - t."""
    return Matrix(((1, -1, -1, 1),
                   (1, 0, -1, 0),
                   (-1, 0, 1, 1),
                   (0, -1, -1, 2)))


@dataclass(frozen=True)
class SymmetryAction:
    """The commuting pair (deck transformation t, periodic symmetry r)
    acting on H_1 of the 3-fold cover mod n."""
    n: int
    t: Matrix
    r: Matrix


def symmetry_action(n, form=None):
    t = t_matrix()
    r = r_matrix()
    assert t * r == r * t, "symmetry must commute with the deck action"
    cube = t * t * t
    assert cube == Matrix.identity(4), "deck transformation has order 3"
    power = Matrix.identity(4)
    for _ in range(n):
        power = power * r
    assert power.map(lambda x: x % n) == Matrix.identity(4).map(
        lambda x: x % n), "symmetry must have order n on the cover"
    if form is not None:
        assert _transforms_to(form, r, n), \
            "symmetry must preserve the linking form"
    return SymmetryAction(n, t, r)
