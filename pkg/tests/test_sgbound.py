import itertools
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from sgcert.arith import primes_upto
from sgcert.certified import Outcome
from sgcert.sgbound import (
    BOUND_CONSTANT,
    EPSILON,
    S,
    C_enclosure,
    Factorization,
    bound_B,
    c_enclosure,
    constants_certificate,
    f_of_r,
    gaussian_binomial,
    lower_bound_check,
    shalev_check,
    subgroup_sum,
    theta_constants,
    theta_even_expr,
    theta_odd_expr,
    trivial_bound,
)

MP_DPS = 60
GRID_PRIMES = (2, 3, 5, 7, 11)


def F(s):
    return Fraction(s)


def count_subspaces_gf2(a: int, k: int) -> int:
    """Brute force: subsets of GF(2)^a closed under xor with 2^k elements."""
    vecs = range(1, 2**a)
    seen = set()
    for basis in itertools.combinations(vecs, k):
        span = {0}
        for v in basis:
            span |= {x ^ v for x in span}
        if len(span) == 2**k:
            seen.add(frozenset(span))
    return len(seen)


@pytest.mark.parametrize("a,k", [(4, 0), (4, 1), (4, 2), (5, 2), (6, 3)])
def test_gaussian_binomial_brute_force(a, k):
    assert gaussian_binomial(a, k, 2) == count_subspaces_gf2(a, k)


def test_gaussian_binomial_frozen():
    assert gaussian_binomial(4, 0, 2) == 1
    assert gaussian_binomial(4, 2, 2) == 35
    assert gaussian_binomial(10, 5, 2) == 109221651
    for p in (2, 3, 5, 7, 97):
        assert gaussian_binomial(4, 2, p) == p**4 + p**3 + 2 * p**2 + p + 1


def test_gaussian_binomial_domain():
    with pytest.raises(ValueError):
        gaussian_binomial(3, 4, 2)
    with pytest.raises(ValueError):
        gaussian_binomial(3, 1, 4)


@pytest.mark.parametrize("p", GRID_PRIMES)
def test_symmetry_and_q_pascal_grid(p):
    for a in range(0, 13):
        for k in range(0, a + 1):
            g = gaussian_binomial(a, k, p)
            assert g == gaussian_binomial(a, a - k, p)
            if 1 <= k <= a - 1:
                assert g == gaussian_binomial(a - 1, k - 1, p) + p**k * gaussian_binomial(a - 1, k, p)


@given(st.integers(min_value=1, max_value=30), st.data(), st.sampled_from([2, 3, 5, 7, 11, 13]))
def test_q_pascal_property(a, data, p):
    k = data.draw(st.integers(min_value=0, max_value=a))
    g = gaussian_binomial(a, k, p)
    assert g == gaussian_binomial(a, a - k, p)
    if 1 <= k <= a - 1:
        assert g == gaussian_binomial(a - 1, k - 1, p) + p**k * gaussian_binomial(a - 1, k, p)


def test_subgroup_sum_frozen():
    assert subgroup_sum(1, 7) == 2
    assert subgroup_sum(6, 2) == 2825 == 1 + 63 + 651 + 1395 + 651 + 63 + 1
    assert subgroup_sum(4, 3) == 212 == S(3, 4).value


@pytest.mark.parametrize("p", primes_upto(97))
def test_S_exact_for_small_a(p):
    for a in range(1, 6):
        s = S(p, a)
        assert s.exact and s.value == subgroup_sum(a, p)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_S_dominates_for_large_a(p):
    for a in range(6, 11):
        s = S(p, a)
        assert not s.exact
        assert s.upper >= subgroup_sum(a, p)


def test_S_frozen_and_domain():
    assert S(2, 1).value == 2
    assert S(3, 3).value == 28
    assert S(2, 4).value == 67
    with pytest.raises(ValueError):
        S(2, 0)
    with pytest.raises(ValueError):
        S(4, 2)


def test_C_and_c_enclosures():
    c2 = C_enclosure(2).interval
    assert F("3.46274") < c2.lo and c2.hi < F("3.46276")
    assert c2.width <= Fraction(1, 2**60)
    assert abs(c2.mid - F("3.4627466194550636")) < F("1e-15")
    small = c_enclosure(2).interval
    assert F("7.37218") < small.lo and small.hi < F("7.37220") and small.hi < BOUND_CONSTANT
    c3 = c_enclosure(3).interval
    assert F("3.8009") < c3.lo and c3.hi < F("3.8010")


@pytest.mark.parametrize("p", [2, 3, 5, 11])
def test_C_against_mpmath(p):
    exact = mpmath.nprod(lambda i: 1 / (1 - mpmath.mpf(p) ** -i), [1, mpmath.inf])
    enc = C_enclosure(p, F("1e-30")).interval
    assert enc.width <= F("1e-30")
    assert mpmath.mpf(enc.lo.numerator) / enc.lo.denominator <= exact
    assert exact <= mpmath.mpf(enc.hi.numerator) / enc.hi.denominator


def test_theta_constants():
    v = theta_constants()
    assert all(x.outcome is Outcome.VERIFIED for x in v.values())
    even = theta_even_expr().evaluate(64)
    odd = theta_odd_expr().evaluate(64)
    assert F("2.12893") < even.lo and even.hi < F("2.12894")
    assert F("2.53174") < odd.lo and odd.hi < F("2.53175")
    assert abs(even.mid - F("2.128936827211877")) < F("1e-14")
    assert abs(odd.mid - F("2.531740190461733")) < F("1e-14")


def test_constants_certificate():
    c = constants_certificate()
    assert c.ok
    assert c.detail["checks"]["c(2) < 7.3722"] == "Verified"


@pytest.mark.parametrize("r,lo,hi", [(2, "25.3", "25.4"), (4, "123", "125"), (24, "36596.9", "36597.0"),
                                     (64, "2203087", "2203088")])
def test_bound_B_frozen(r, lo, hi):
    b = bound_B(r)
    assert F(lo) < b.lo and b.hi < F(hi)


@pytest.mark.parametrize("r", [2, 3, 12, 24, 1000, 43890])
def test_bound_B_against_mpmath(r):
    b = bound_B(r, 128)
    v = mpmath.mpf(73722) / 10000 * mpmath.power(r, mpmath.log(r, 2) / 4 + mpmath.mpf(15315) / 10000)
    assert mpmath.mpf(b.lo.numerator) / b.lo.denominator <= v <= mpmath.mpf(b.hi.numerator) / b.hi.denominator


def test_bound_B_monotone_and_domain():
    assert bound_B(24).lo > bound_B(12).hi
    with pytest.raises(ValueError):
        bound_B(1)


def test_f_of_r_frozen():
    assert f_of_r(12) == 120
    assert f_of_r(97) == 2
    assert f_of_r(8) == 16
    assert f_of_r(24) == 24 * 16 * 2
    for p in (2, 3, 5):
        for a in range(1, 6):
            assert f_of_r(p**a) == S(p, a).value


def test_f_of_r_with_large_exponent_is_enclosure():
    v = f_of_r(2**6 * 3)
    assert not isinstance(v, int)
    s6 = S(2, 6).value
    # f(192) = 192 * S(2,6) * S(3,1)
    assert v.lo <= 384 * s6.hi and v.hi >= 384 * s6.lo


def test_factorization_invariants():
    f = Factorization.of(360)
    assert f.pairs == ((2, 3), (3, 2), (5, 1)) and f.r == 360 and f.ell == 3
    with pytest.raises(ValueError):
        Factorization(((3, 1), (2, 1)))
    with pytest.raises(ValueError):
        Factorization(((4, 1),))


def test_trivial_bound():
    assert trivial_bound(2) == 2
    assert trivial_bound(24) == 24**4
    with pytest.raises(ValueError):
        trivial_bound(1)


@pytest.mark.parametrize("a", range(2, 41))
def test_lower_bound_check(a):
    assert lower_bound_check(a).ok


def test_lower_bound_fails_at_one():
    # [1,0]_2 = 1 < 2^(1/4)
    assert lower_bound_check(1).outcome is Outcome.REFUTED


def test_shalev_frozen():
    assert shalev_check(4, 2, 2).ok
    assert shalev_check(1, 0, 5).ok
    assert shalev_check(6, 3, 2).ok
    w = C_enclosure(2).interval * 512
    assert F("1772.92") < w.lo and w.hi < F("1772.93")


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
def test_shalev_grid(p):
    for a in range(0, 11):
        for k in range(0, a + 1):
            assert shalev_check(a, k, p).ok, (a, k, p)


def test_epsilon_constant_exact():
    assert EPSILON == Fraction(15315, 10000)
