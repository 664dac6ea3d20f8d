"""Dense polynomial arithmetic and factorization over prime fields.

Polynomials are ascending coefficient lists with entries reduced into
[0, s) and no trailing zeros; [] is the zero polynomial.  The prime s is
passed explicitly to every operation.  Factorization is squarefree
decomposition, then distinct-degree splitting, then seeded
Cantor-Zassenhaus, so results are deterministic.
"""

import random
from dataclasses import dataclass

__all__ = [
    "PrimeField",
    "FactorizationResult",
    "is_prime",
    "trim",
    "add",
    "sub",
    "mul",
    "scalar_mul",
    "poly_divmod",
    "poly_gcd",
    "monic",
    "pow_mod",
    "evaluate",
    "interpolate",
    "derivative",
    "factor",
    "is_irreducible",
    "degree_sequence",
    "primitive_root_of_unity",
    "norm_obstructed",
    "poly_matrix_det",
]


def is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class PrimeField:
    """The field Z/s for a prime s."""

    __slots__ = ("s",)

    def __init__(self, s):
        if not is_prime(s):
            raise ValueError(f"{s} is not prime")
        object.__setattr__(self, "s", s)

    def __setattr__(self, name, value):
        raise AttributeError("PrimeField is immutable")

    def __eq__(self, other):
        return isinstance(other, PrimeField) and self.s == other.s

    def __hash__(self):
        return hash(("PrimeField", self.s))

    def __repr__(self):
        return f"PrimeField({self.s})"

    def element(self, a):
        return a % self.s

    def inv(self, a):
        a %= self.s
        if not a:
            raise ZeroDivisionError("inverse of 0")
        return pow(a, self.s - 2, self.s)


# -- basic dense arithmetic ----------------------------------------------------


def trim(a, s=None):
    """Canonical form: reduce mod s when given, drop trailing zeros."""
    if s is not None:
        a = [c % s for c in a]
    else:
        a = list(a)
    while a and not a[-1]:
        a.pop()
    return a


def add(a, b, s):
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % s
    return trim(out)


def sub(a, b, s):
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % s
    return trim(out)


def scalar_mul(c, a, s):
    c %= s
    if not c:
        return []
    return trim([c * x % s for x in a])


def mul(a, b, s):
    if not a or not b:
        return []
    if min(len(a), len(b)) >= 16:
        return _mul_packed(a, b, s)
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return trim(out, s)


def _mul_packed(a, b, s):
    """Multiply by packing coefficients into one big integer, so the inner
    convolution runs on CPython's fast bignum multiply."""
    limb = (min(len(a), len(b)) * (s - 1) * (s - 1)).bit_length() + 1
    pa = sum(c << (limb * i) for i, c in enumerate(a))
    pb = sum(c << (limb * i) for i, c in enumerate(b))
    prod = pa * pb
    mask = (1 << limb) - 1
    out = []
    for _ in range(len(a) + len(b) - 1):
        out.append((prod & mask) % s)
        prod >>= limb
    return trim(out)


def poly_divmod(a, b, s):
    b = trim(b, s)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = trim(a, s)
    if len(r) < len(b):
        return [], r
    q = [0] * (len(r) - len(b) + 1)
    inv = pow(b[-1], s - 2, s)
    for i in range(len(q) - 1, -1, -1):
        c = r[i + len(b) - 1] * inv % s
        q[i] = c
        if c:
            for j, bc in enumerate(b):
                r[i + j] = (r[i + j] - c * bc) % s
    return trim(q), trim(r[:len(b) - 1])


def poly_gcd(a, b, s):
    a, b = trim(a, s), trim(b, s)
    while b:
        _, r = poly_divmod(a, b, s)
        a, b = b, r
    return monic(a, s)


def monic(a, s):
    a = trim(a, s)
    if not a or a[-1] == 1:
        return a
    return scalar_mul(pow(a[-1], s - 2, s), a, s)


def pow_mod(base, e, modulus, s):
    """base^e reduced modulo the polynomial modulus."""
    _, result = poly_divmod([1], modulus, s)
    _, base = poly_divmod(base, modulus, s)
    while e:
        if e & 1:
            result = poly_divmod(mul(result, base, s), modulus, s)[1]
        base = poly_divmod(mul(base, base, s), modulus, s)[1]
        e >>= 1
    return result


def evaluate(a, x, s):
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % s
    return acc


def interpolate(xs, ys, s):
    """The unique polynomial of degree < len(xs) through (xs[i], ys[i])
    mod s, by Newton's divided differences."""
    n = len(xs)
    assert len(ys) == n and len(set(x % s for x in xs)) == n
    coef = [y % s for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            inv = pow((xs[i] - xs[i - j]) % s, s - 2, s)
            coef[i] = (coef[i] - coef[i - 1]) * inv % s
    poly = []
    for i in range(n - 1, -1, -1):
        # poly = poly * (t - xs[i]) + coef[i]
        poly = add(mul(poly, [-xs[i] % s, 1], s), [coef[i]], s)
    return poly


def derivative(a, s):
    return trim([i * c % s for i, c in enumerate(a)][1:])


def poly_matrix_det(rows, s):
    """Fraction-free (Bareiss) determinant of a matrix of polynomials
    over Z/s; every intermediate division is exact and checked."""
    a = [[trim(x, s) for x in r] for r in rows]
    n = len(a)
    if n == 0:
        return [1]
    sign = 1
    prev = [1]
    for k in range(n - 1):
        if not a[k][k]:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return []
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        piv = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                num = sub(mul(row_i[j], piv, s), mul(aik, row_k[j], s), s)
                q, r = poly_divmod(num, prev, s)
                assert r == [], "Bareiss division not exact"
                row_i[j] = q
            row_i[k] = []
        prev = piv
    d = a[n - 1][n - 1]
    return scalar_mul(-1, d, s) if sign < 0 else d


# -- factorization -------------------------------------------------------------


@dataclass(frozen=True)
class FactorizationResult:
    """unit * prod(poly^mult) over Z/s; factors are monic, sorted by
    degree then coefficients, multiplicities kept separate."""
    modulus: int
    unit: int
    factors: tuple

    def expanded(self):
        """Each irreducible factor repeated to its multiplicity."""
        out = []
        for poly, m in self.factors:
            out.extend([list(poly)] * m)
        return out

    def product(self):
        s = self.modulus
        acc = [self.unit % s]
        for poly, m in self.factors:
            for _ in range(m):
                acc = mul(acc, list(poly), s)
        return acc


def _sth_root(a, s):
    """s-th root of a polynomial in t^s over Z/s (Frobenius fixes Z/s)."""
    assert all(c == 0 for i, c in enumerate(a) if i % s)
    return a[::s]


def _squarefree_parts(f, s):
    """Yield (squarefree factor, multiplicity) pairs with product f
    (f monic, nonconstant)."""
    d = derivative(f, s)
    if not d:
        for g, m in _squarefree_parts(_sth_root(f, s), s):
            yield g, m * s
        return
    g0 = poly_gcd(f, d, s)
    w = poly_divmod(f, g0, s)[0]
    m = 1
    while len(w) > 1:
        y = poly_gcd(w, g0, s)
        part = poly_divmod(w, y, s)[0]
        if len(part) > 1:
            yield part, m
        w = y
        g0 = poly_divmod(g0, y, s)[0]
        m += 1
    if len(g0) > 1:
        for g, mm in _squarefree_parts(g0, s):
            yield g, mm * s


def _distinct_degree(f, s):
    """Yield (product of degree-d irreducibles, d) for squarefree monic f."""
    h = [0, 1]  # t
    d = 0
    rest = f
    while len(rest) - 1 > 2 * (d + 1) - 2:
        d += 1
        h = pow_mod(h, s, rest, s)
        g = poly_gcd(sub(h, [0, 1], s), rest, s)
        if len(g) > 1:
            yield g, d
            rest = poly_divmod(rest, g, s)[0]
            h = poly_divmod(h, rest, s)[1]
    if len(rest) > 1:
        yield rest, len(rest) - 1


def _equal_degree_split(f, d, s, rng):
    """Cantor-Zassenhaus: split monic squarefree f whose irreducible
    factors all have degree d."""
    if len(f) - 1 == d:
        return [f]
    e = (s ** d - 1) // 2
    while True:
        u = [rng.randrange(s) for _ in range(len(f) - 1)]
        u = trim(u)
        if len(u) < 2:
            continue
        g = poly_gcd(u, f, s)
        if 1 < len(g) < len(f):
            pass
        else:
            w = pow_mod(u, e, f, s)
            g = poly_gcd(sub(w, [1], s), f, s)
            if not 1 < len(g) < len(f):
                continue
        rest = poly_divmod(f, g, s)[0]
        return (_equal_degree_split(g, d, s, rng)
                + _equal_degree_split(rest, d, s, rng))


def factor(a, s, seed=2026):
    """Full factorization over Z/s (s an odd prime) into monic
    irreducibles with multiplicity, plus the leading unit."""
    assert is_prime(s) and s > 2
    a = trim(a, s)
    if not a:
        raise ValueError("cannot factor the zero polynomial")
    unit = a[-1]
    f = monic(a, s)
    rng = random.Random(seed)
    found = {}
    if len(f) > 1:
        for sf, m in _squarefree_parts(f, s):
            for prod, d in _distinct_degree(sf, s):
                for irr in _equal_degree_split(prod, d, s, rng):
                    key = tuple(irr)
                    found[key] = found.get(key, 0) + m
    factors = tuple(sorted(found.items(), key=lambda kv: (len(kv[0]), kv[0])))
    result = FactorizationResult(modulus=s, unit=unit, factors=factors)
    assert result.product() == a, "factorization does not multiply back"
    return result


def is_irreducible(f, s):
    """Irreducibility over Z/s via distinct-degree probes."""
    f = monic(f, s)
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    if not poly_gcd(f, derivative(f, s), s) == [1]:
        return False
    h = [0, 1]
    for d in range(1, n // 2 + 1):
        h = pow_mod(h, s, f, s)
        if len(poly_gcd(sub(h, [0, 1], s), f, s)) > 1:
            return False
    return True


def degree_sequence(fact):
    """Sorted degrees, with multiplicity, of a factorization."""
    if isinstance(fact, FactorizationResult):
        pairs = fact.factors
    else:
        pairs = fact
    degs = []
    for poly, m in pairs:
        degs.extend([len(poly) - 1] * m)
    return sorted(degs)


# -- roots of unity and the degree obstruction ---------------------------------


def primitive_root_of_unity(s, d, theta=None):
    """An element of order exactly d in Z/s (d prime, d | s-1).  A supplied
    candidate is validated and returned reduced."""
    assert is_prime(s)
    assert is_prime(d)
    if (s - 1) % d:
        raise ValueError(f"no {d}-th roots of unity mod {s}")
    if theta is not None:
        theta %= s
        if theta == 1 or pow(theta, d, s) != 1:
            raise ValueError(f"{theta} does not have order {d} mod {s}")
        return theta
    for h in range(2, s):
        cand = pow(h, (s - 1) // d, s)
        if cand != 1:
            return cand
    raise AssertionError("unreachable for valid s, d")


def norm_obstructed(degrees, half=None):
    """True when no sub-multiset of degrees sums to half the total.

    A factorization into a norm f(t) * f(1/t) (up to units) would split
    the degrees into two equal halves, so an unreachable half-sum rules
    that out.  Subset sums are swept with a bitset.
    """
    total = sum(degrees)
    if half is None:
        assert total % 2 == 0, "odd total degree cannot be a norm anyway"
        half = total // 2
    else:
        assert total == 2 * half, "degree total inconsistent with target"
    mask = 1
    for d in degrees:
        mask |= mask << d
    return not (mask >> half) & 1
