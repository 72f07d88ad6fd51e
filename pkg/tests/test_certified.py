from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sgcert.certified import (
    CertReal,
    Const,
    Log2,
    Outcome,
    Power,
    PrecisionError,
    Product,
    Quotient,
    Sum,
    certified_compare,
    certify_le,
    certify_lt,
    decimal_string,
    log2_enclosure,
    pow2_enclosure,
    round_down,
    round_up,
)

MP_DPS = 121  # about 400 bits


def mp(x: Fraction):
    return mpmath.mpf(x.numerator) / x.denominator


fractions = st.fractions(min_value=Fraction(-10**6), max_value=Fraction(10**6), max_denominator=10**6)
positive = st.fractions(min_value=Fraction(1, 10**4), max_value=Fraction(10**6), max_denominator=10**4)


@given(fractions, st.integers(min_value=2, max_value=200))
def test_rounding_brackets(x, prec):
    lo, hi = round_down(x, prec), round_up(x, prec)
    assert lo <= x <= hi
    if x:
        assert (hi - lo) <= abs(x) * Fraction(2, 2**prec) * 2


def test_rounding_is_exact_on_dyadics():
    assert round_down(Fraction(3, 8), 10) == Fraction(3, 8)
    assert round_up(Fraction(-5, 4), 3) == Fraction(-5, 4)


@given(positive, positive)
def test_interval_ops_enclose(a, b):
    x, y = CertReal.point(a), CertReal.point(b)
    for got, want in ((x + y, a + b), (x - y, a - b), (x * y, a * b), (x / y, a / b)):
        assert got.contains(want)


def test_cert_real_rejects_inverted():
    with pytest.raises(ValueError):
        CertReal(Fraction(2), Fraction(1))


def test_reciprocal_of_zero_interval():
    with pytest.raises((ZeroDivisionError, PrecisionError, ValueError)):
        CertReal(Fraction(-1), Fraction(1)).reciprocal()


@pytest.mark.parametrize("n", [3, 5, 19, 23, 29, 97, 10**6 + 3])
def test_log2_enclosure_against_mpmath(n):
    x = log2_enclosure(n, 128)
    assert x.width <= Fraction(1, 2**128)
    v = mpmath.log(n, 2)
    assert mp(x.lo) <= v <= mp(x.hi)


def test_log2_19_frozen():
    x = log2_enclosure(19, 64)
    assert abs(x.mid - Fraction("4.247927513443585")) < Fraction(1, 10**15)


@pytest.mark.parametrize("k", [0, 1, 7, 64])
def test_log2_of_powers_of_two_is_exact(k):
    x = log2_enclosure(2**k, 64)
    assert x.is_point and x.lo == k


@given(st.fractions(min_value=Fraction(-40), max_value=Fraction(40), max_denominator=1000))
@settings(max_examples=60)
def test_pow2_against_mpmath(x):
    e = pow2_enclosure(x, 96)
    v = mpmath.power(2, mp(x))
    assert mp(e.lo) <= v <= mp(e.hi)


def test_higher_precision_nests():
    a, b = log2_enclosure(7, 64), log2_enclosure(7, 256)
    assert a.lo <= b.lo and b.hi <= a.hi


def test_decimal_string_directed():
    x = Fraction(2, 3)
    assert decimal_string(x, 4, "down") == "0.6666"
    assert decimal_string(x, 4, "up") == "0.6667"
    assert decimal_string(-x, 4, "down") == "-0.6667"


def test_compare_exact_paths():
    assert certified_compare(Const(1), Const(2)).outcome is Outcome.VERIFIED
    assert certified_compare(Const(3), Const(2)).outcome is Outcome.REFUTED
    assert certified_compare(Power(Const(4), Const(Fraction(1, 2))), Const(2)).outcome is Outcome.EQUAL
    assert certify_le(Log2(16), 4).ok
    assert certify_lt(Log2(16), 4).outcome is Outcome.REFUTED


def test_compare_syntactic_equality():
    a = Sum(Log2(3), Log2(5))
    b = Sum(Log2(5), Log2(3))
    assert certified_compare(a, b).outcome is Outcome.EQUAL
    assert certify_le(a, b).ok


def test_compare_escalates_precision():
    # log2(3) vs a rational 2**-100 above it
    L = log2_enclosure(3, 300).hi
    v = certified_compare(Log2(3), Const(L + Fraction(1, 2**100)))
    assert v.outcome is Outcome.VERIFIED and v.prec_used > 64


def test_compare_undetermined_at_low_cap():
    L = log2_enclosure(3, 300).hi
    v = certified_compare(Log2(3), Const(L + Fraction(1, 2**100)), prec_cap=64)
    assert v.outcome is Outcome.UNDETERMINED


def test_quotient_and_power_tree():
    e = Quotient(Product(Const(2), Log2(9)), Log2(3))
    x = e.evaluate(128)
    assert x.contains(4)
    assert certify_le(Power(Const(3), Log2(2)), Const(3)).ok


@st.composite
def expressions(draw, depth=2):
    leaf = st.one_of(
        st.fractions(min_value=Fraction(1, 8), max_value=Fraction(64), max_denominator=64).map(Const),
        st.integers(min_value=2, max_value=200).map(Log2),
    )
    if depth == 0:
        return draw(leaf)
    kind = draw(st.sampled_from(["leaf", "sum", "prod", "quot", "pow"]))
    if kind == "leaf":
        return draw(leaf)
    a = draw(expressions(depth=depth - 1))
    b = draw(expressions(depth=depth - 1))
    if kind == "sum":
        return Sum(a, b)
    if kind == "prod":
        return Product(a, b)
    if kind == "quot":
        return Quotient(a, b)
    # a leaf numerator keeps power towers inside the exponent budget
    return Power(Const(draw(st.integers(min_value=2, max_value=9))), Quotient(draw(leaf), Sum(Const(1), b)))


@given(expressions(), expressions())
@settings(max_examples=150, deadline=None)
def test_verdict_stable_under_more_precision(a, b):
    v1 = certified_compare(a, b, prec_cap=1024)
    v4 = certified_compare(a, b, prec_cap=4096, start_prec=256)
    if v1.outcome is not Outcome.UNDETERMINED:
        assert v4.outcome is v1.outcome


@given(expressions())
@settings(max_examples=80, deadline=None)
def test_evaluation_contains_mpmath_value(e):
    def value(x):
        if isinstance(x, Const):
            return mp(x.exact())
        if isinstance(x, Log2):
            return mpmath.log(value(x.arg), 2)
        if isinstance(x, Sum):
            return mpmath.fsum(value(c) for c in x.args)
        if isinstance(x, Product):
            out = mpmath.mpf(1)
            for c in x.args:
                out *= value(c)
            return out
        if isinstance(x, Quotient):
            return value(x.num) / value(x.den)
        return mpmath.power(value(x.base), value(x.exponent))

    enc = e.evaluate(128)
    v = value(e)
    slack = abs(v) * mpmath.mpf(2) ** -300
    assert mp(enc.lo) - slack <= v <= mp(enc.hi) + slack
