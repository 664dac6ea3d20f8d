"""Exact arithmetic in Z[xi_n], the ring generated by a primitive n-th
root of unity.

Elements are coordinate vectors on the power basis 1, x, ..., x^(phi(n)-1)
of Z[x]/Phi_n(x), with Phi_n the n-th cyclotomic polynomial.  Reduction
modulo Phi_n is applied after every multiplication, keeping the vector
length fixed at phi(n).  Coordinates are ints or Fractions.
"""

from fractions import Fraction
from functools import lru_cache

__all__ = ["Cyclotomic", "cyclotomic_polynomial"]


def _poly_exact_div(num, den):
    """Exact division of int polynomials (ascending lists), den monic."""
    num = list(num)
    assert den[-1] == 1
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        out[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    assert all(c == 0 for c in num), "division was not exact"
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n):
    """Ascending integer coefficients of Phi_n, via Phi_n = (x^n - 1) / prod
    of Phi_d over proper divisors d of n."""
    if n < 1:
        raise ValueError("n must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_exact_div(poly, cyclotomic_polynomial(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _reduction_table(n):
    """x^m mod Phi_n as coordinate tuples, for m = 0 .. 2*phi(n) - 2."""
    phi_n = list(cyclotomic_polynomial(n))
    phi = len(phi_n) - 1
    rows = []
    for m in range(phi):
        rows.append(tuple(1 if i == m else 0 for i in range(phi)))
    for m in range(phi, 2 * phi - 1):
        prev = rows[m - 1]
        shifted = [0] + list(prev[:-1])
        top = prev[-1]
        if top:
            for i in range(phi):
                shifted[i] -= top * phi_n[i]
        rows.append(tuple(shifted))
    return tuple(rows)


@lru_cache(maxsize=None)
def _power_coords(n, k):
    """Coordinates of x^(k mod n) reduced modulo Phi_n."""
    k %= n
    table = _reduction_table(n)
    phi = len(table[0])
    if k < len(table):
        return table[k]
    # k can exceed 2*phi - 2 only for non-prime n; fold down by squaring.
    gen = Cyclotomic(n, table[1]) if phi > 1 else Cyclotomic(n, (1,))
    return (gen ** k).coords


class Cyclotomic:
    """An element of Z[xi_n] (coordinates may also be Fractions)."""

    __slots__ = ("n", "coords")

    def __init__(self, n, coords):
        phi = len(cyclotomic_polynomial(n)) - 1
        coords = tuple(coords)
        if len(coords) != phi:
            raise ValueError(f"need {phi} coordinates for n={n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, name, value):
        raise AttributeError("Cyclotomic is immutable")

    @staticmethod
    def root(n, k=1):
        """xi_n^k."""
        return Cyclotomic(n, _power_coords(n, k))

    @staticmethod
    def from_rational(n, c):
        phi = len(cyclotomic_polynomial(n)) - 1
        return Cyclotomic(n, (c,) + (0,) * (phi - 1))

    # -- ring structure -----------------------------------------------------

    def _lift(self, other):
        if isinstance(other, Cyclotomic):
            if other.n != self.n:
                raise ValueError("mixed cyclotomic moduli")
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic.from_rational(self.n, other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Cyclotomic(self.n,
                          tuple(a + b for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.n, tuple(-a for a in self.coords))

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.n, tuple(a * other for a in self.coords))
        o = self._lift(other)
        if o is None:
            return NotImplemented
        phi = len(self.coords)
        prod = [0] * (2 * phi - 1)
        for i, a in enumerate(self.coords):
            if a:
                for j, b in enumerate(o.coords):
                    if b:
                        prod[i + j] += a * b
        table = _reduction_table(self.n)
        out = [0] * phi
        for m, c in enumerate(prod):
            if c:
                row = table[m]
                for i in range(phi):
                    if row[i]:
                        out[i] += c * row[i]
        return Cyclotomic(self.n, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative powers not supported")
        result = Cyclotomic.from_rational(self.n, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __bool__(self):
        return any(self.coords)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic.from_rational(self.n, other)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self.n == other.n and all(
            a == b for a, b in zip(self.coords, other.coords))

    def __hash__(self):
        return hash((self.n, tuple(Fraction(c) for c in self.coords)))

    def __repr__(self):
        return f"Cyclotomic({self.n}, {self.coords})"

    # -- field-specific operations -------------------------------------------

    def conjugate(self):
        """The involution xi_n -> xi_n^(-1)."""
        phi = len(self.coords)
        out = [0] * phi
        for i, c in enumerate(self.coords):
            if c:
                row = _power_coords(self.n, (self.n - i) % self.n)
                for j in range(phi):
                    if row[j]:
                        out[j] += c * row[j]
        return Cyclotomic(self.n, tuple(out))

    @property
    def is_rational(self):
        return not any(self.coords[1:])

    def as_int(self):
        """The value as a rational integer; raises if not one."""
        if not self.is_rational:
            raise ValueError(f"{self!r} is not rational")
        c = self.coords[0]
        if isinstance(c, Fraction):
            if c.denominator != 1:
                raise ValueError(f"{self!r} is not an integer")
            return c.numerator
        return c
