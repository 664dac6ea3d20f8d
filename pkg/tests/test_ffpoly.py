"""Prime-field polynomial arithmetic, factorization, and the norm
obstruction."""

import pytest
from hypothesis import given, settings, strategies as st

from sliceobs import ffpoly
from sliceobs.ffpoly import (FactorizationResult, add, degree_sequence,
                             derivative, evaluate, factor, interpolate,
                             is_irreducible, is_prime, monic, mul,
                             norm_obstructed, poly_divmod, poly_gcd,
                             poly_matrix_det, pow_mod, primitive_root_of_unity,
                             sub, trim)


def test_is_prime_small():
    primes = [p for p in range(60) if is_prime(p)]
    assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43,
                      47, 53, 59]


def test_trim_reduces_and_strips():
    assert trim([5, 7, 0], 5) == [0, 2]
    assert trim([0, 0, 0]) == []
    assert trim([1, 0, 3]) == [1, 0, 3]


def test_basic_ring_ops():
    s = 7
    a = [1, 2, 3]
    b = [6, 5]
    assert add(a, b, s) == [0, 0, 3]
    assert sub(add(a, b, s), b, s) == a
    assert mul([1, 1], [6, 1], s) == [6, 0, 1]
    assert mul(a, [], s) == []


def test_mul_packed_agrees_with_schoolbook():
    s = 23
    a = list(range(1, 40))
    b = list(range(3, 30))
    direct = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            direct[i + j] += ca * cb
    assert mul(a, b, s) == trim(direct, s)


def test_poly_divmod_roundtrip():
    s = 11
    a = [3, 1, 4, 1, 5, 9]
    b = [2, 7, 1]
    q, r = poly_divmod(a, b, s)
    assert trim(add(mul(q, b, s), r, s), s) == trim(a, s)
    assert len(r) < len(b)
    with pytest.raises(ZeroDivisionError):
        poly_divmod(a, [], s)


def test_poly_gcd_of_products():
    s = 13
    f = mul([1, 1], [2, 0, 1], s)
    g = mul([1, 1], [5, 1], s)
    assert poly_gcd(f, g, s) == [1, 1]
    assert poly_gcd(f, [], s) == monic(f, s)


def test_pow_mod_fermat():
    # t^s = t mod (t^s - t) factors; check small case by brute force
    s = 5
    modulus = [3, 1, 1]
    got = pow_mod([0, 1], 25, modulus, s)
    brute = [0, 1]
    for _ in range(24):
        brute = poly_divmod(mul(brute, [0, 1], s), modulus, s)[1]
    assert got == brute


def test_evaluate_and_interpolate():
    s = 23
    poly = [5, 0, 3, 1]
    xs = [0, 1, 2, 3]
    ys = [evaluate(poly, x, s) for x in xs]
    assert interpolate(xs, ys, s) == poly


@settings(max_examples=60)
@given(st.lists(st.integers(0, 22), min_size=1, max_size=8),
       st.integers(0, 22))
def test_interpolation_recovers_random_polys(coeffs, shift):
    s = 23
    poly = trim(coeffs, s)
    xs = [(shift + i) % s for i in range(len(coeffs) + 1)]
    ys = [evaluate(poly, x, s) for x in xs]
    assert interpolate(xs, ys, s) == poly


def test_derivative():
    assert derivative([4, 3, 2, 1], 7) == [3, 4, 3]
    assert derivative([9], 7) == []


def test_factor_known_splitting():
    s = 23
    # t^2 + 13t + 1 = (t + 17)(t + 19) mod 23
    res = factor([1, 13, 1], s)
    assert res.unit == 1
    assert res.factors == (((17, 1), 1), ((19, 1), 1))
    # t^2 + 13t + 10 is irreducible mod 23
    res2 = factor([10, 13, 1], s)
    assert res2.factors == (((10, 13, 1), 1),)


def test_factor_with_multiplicity_and_unit():
    s = 11
    f = mul(mul([1, 1], [1, 1], s), [3, 1], s)
    f = ffpoly.scalar_mul(7, f, s)
    res = factor(f, s)
    assert res.unit == 7
    assert res.factors == (((1, 1), 2), ((3, 1), 1))
    assert res.product() == f
    assert res.expanded() == [[1, 1], [1, 1], [3, 1]]


def test_factor_frobenius_power():
    s = 5
    # (t + 1)^5 = t^5 + 1 mod 5
    f = [1] + [0] * 4 + [1]
    res = factor(f, s)
    assert res.factors == (((1, 1), 5),)


def test_factor_rejects_zero():
    with pytest.raises(ValueError):
        factor([], 7)


def test_factor_is_deterministic():
    s = 47
    f = [7, 0, 0, 5, 1, 0, 3, 1]
    assert factor(f, s) == factor(f, s)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, 10), min_size=2, max_size=10))
def test_factor_product_roundtrip(coeffs):
    s = 11
    f = trim(coeffs, s)
    if not f:
        return
    res = factor(f, s)
    assert isinstance(res, FactorizationResult)
    assert res.product() == f
    for poly, _ in res.factors:
        assert is_irreducible(list(poly), s)
        assert poly[-1] == 1


def test_is_irreducible_cases():
    assert is_irreducible([1, 1], 7)
    assert not is_irreducible([1], 7)
    assert not is_irreducible([1, 0, 1], 5)   # (t+2)(t+3) mod 5
    assert is_irreducible([1, 1, 1], 5)
    assert not is_irreducible(mul([1, 1, 1], [1, 1, 1], 5), 5)


def test_degree_sequence():
    res = factor([1, 0, 0, 0, 0, 0, 1], 23)  # t^6 + 1
    degs = degree_sequence(res)
    assert sum(degs) == 6
    assert degs == sorted(degs)
    assert degree_sequence([((0, 1), 2), ((1, 2, 1), 1)]) == [1, 1, 2]


def test_primitive_root_of_unity():
    theta = primitive_root_of_unity(23, 11)
    assert pow(theta, 11, 23) == 1 and theta != 1
    assert primitive_root_of_unity(23, 11, 2) == 2
    with pytest.raises(ValueError):
        primitive_root_of_unity(23, 11, 5)
    with pytest.raises(ValueError):
        primitive_root_of_unity(23, 7)


def test_norm_obstruction_oracles():
    # no sub-multiset of (2,2,3,3,8) sums to 9
    assert norm_obstructed([2, 2, 3, 3, 8])
    assert norm_obstructed([4, 14])
    # 1 + 1 + 7 = 9 reaches half of 18
    assert not norm_obstructed([1, 1, 1, 1, 7, 7])
    assert not norm_obstructed([9, 9])
    assert norm_obstructed([1, 4, 13])


@given(st.lists(st.integers(1, 12), min_size=1, max_size=10))
def test_norm_obstruction_matches_brute_force(degs):
    total = sum(degs)
    if total % 2:
        return
    half = total // 2
    reachable = {0}
    for d in degs:
        reachable |= {r + d for r in reachable}
    assert norm_obstructed(degs) == (half not in reachable)


def test_poly_matrix_det_matches_expansion():
    s = 23
    m = [[[1, 1], [2]], [[0, 1], [1, 0, 1]]]
    # det = (t+1)(t^2+1) - 2t
    want = sub(mul([1, 1], [1, 0, 1], s), mul([2], [0, 1], s), s)
    assert poly_matrix_det(m, s) == want
    assert poly_matrix_det([], s) == [1]
    assert poly_matrix_det([[[], []], [[], []]], s) == []
