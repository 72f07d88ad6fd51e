"""Exact subgroup-count quantities: Gaussian binomials, the S(p, a) table, the
constants C(p) and c(p), and the composite bounds f(r) and B(r).

Upper bounds on the number of subgroups of a group of order ``p**a`` come from
summing Gaussian binomials; for ``a >= 6`` the sum is replaced by the
closed-form majorant ``c(p) * p**(a*a/4)`` with ``c(p) = 2.129 * C(p)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import ceil

from .arith import factor_pairs, is_prime
from .certified import (
    DEFAULT_PREC,
    DEFAULT_PREC_CAP,
    CertReal,
    Const,
    Expr,
    Log2,
    Named,
    Power,
    Product,
    Sum,
    Verdict,
    certify_le,
    certify_lt,
    round_up,
)
from .certificate import Certificate, combine, max_prec, stopwatch

BOUND_CONSTANT = Fraction(73722, 10000)
EPSILON = Fraction(15315, 10000)
EPSILON_WITHOUT_3 = Fraction(9278, 10000)
THETA_EVEN = Fraction(2129, 1000)
THETA_ODD = Fraction(253175, 100000)

# recorded on every certificate that relies on S(p, a) for a >= 6
EXPONENT_NOTE = (
    "S(p,a) for a>=6 evaluated as c(p)*p^(a^2/4); the printed table entry "
    "c(p)*p^(a^2/2) contradicts the derivation of this bound and is not used"
)


def _check_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


# ---------------------------------------------------------------------------
# factorizations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Factorization:
    """``r = prod(p**a for p, a in pairs)`` with strictly increasing primes."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple((int(p), int(a)) for p, a in self.pairs)
        prev = 1
        for p, a in pairs:
            if p <= prev:
                raise ValueError("primes must be strictly increasing")
            _check_prime(p)
            if a < 1:
                raise ValueError(f"exponent of {p} must be positive")
            prev = p
        object.__setattr__(self, "pairs", pairs)

    @classmethod
    def of(cls, n: int) -> Factorization:
        if n == 1:
            return cls(())
        return cls(factor_pairs(n))

    @property
    def r(self) -> int:
        out = 1
        for p, a in self.pairs:
            out *= p**a
        return out

    @property
    def ell(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def __str__(self) -> str:
        return " * ".join(f"{p}^{a}" if a > 1 else str(p) for p, a in self.pairs) or "1"


def _as_factorization(x) -> Factorization:
    return x if isinstance(x, Factorization) else Factorization.of(x)


# ---------------------------------------------------------------------------
# Gaussian binomials
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def gaussian_binomial(a: int, k: int, p: int) -> int:
    """Number of ``k``-dimensional subspaces of ``GF(p)**a``."""
    if a < 0 or k < 0:
        raise ValueError("a and k must be non-negative")
    if k > a:
        raise ValueError(f"k={k} exceeds a={a}")
    _check_prime(p)
    k = min(k, a - k)
    num = den = 1
    for i in range(k):
        num *= p ** (a - i) - 1
        den *= p ** (i + 1) - 1
    return num // den


def subgroup_sum(a: int, p: int) -> int:
    """Total number of subspaces of ``GF(p)**a``."""
    if a < 0:
        raise ValueError("a must be non-negative")
    return sum(gaussian_binomial(a, k, p) for k in range(a + 1))


# ---------------------------------------------------------------------------
# C(p), c(p) and the theta constants
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConstantEnclosure:
    name: str
    interval: CertReal


@lru_cache(maxsize=None)
def _C_interval(p: int, prec: int) -> CertReal:
    """Enclosure of prod_{i>=1} 1/(1 - p**-i) of width at most 2**-prec."""
    work = prec + 16
    tol = Fraction(1, 1 << prec)
    partial = CertReal.point(1, work)
    pi = 1
    n = 0
    while True:
        n += 1
        pi *= p
        partial = partial * Fraction(pi, pi - 1)
        if n < prec // max(1, p.bit_length() - 1) - 4:
            continue
        # log of the tail product is at most p^-N / ((p-1)(1 - p^-(N+1)))
        tail = Fraction(1, pi * (p - 1)) / (1 - Fraction(1, pi * p))
        # exp(t) <= 1/(1-t) for 0 <= t < 1
        upper = round_up(partial.hi / (1 - tail), work)
        if upper - partial.lo <= tol:
            return CertReal(partial.lo, upper, prec)


def C_enclosure(p: int, tol: Fraction | str = Fraction(1, 1 << 60)) -> ConstantEnclosure:
    """Certified enclosure of ``C(p) = prod_{i>=1} (1 - p**-i)**-1`` of width <= tol."""
    _check_prime(p)
    tol = Fraction(tol)
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    prec = max(DEFAULT_PREC, ceil(-_log2_floor(tol)) + 1)
    return ConstantEnclosure(f"C({p})", _C_interval(p, prec))


def c_enclosure(p: int, tol: Fraction | str = Fraction(1, 1 << 60)) -> ConstantEnclosure:
    """Certified enclosure of ``c(p) = 2.129 * C(p)``."""
    tol = Fraction(tol)
    inner = C_enclosure(p, tol / 4).interval
    return ConstantEnclosure(f"c({p})", inner * THETA_EVEN)


def _log2_floor(x: Fraction) -> int:
    return x.numerator.bit_length() - x.denominator.bit_length() - 1


def C_expr(p: int) -> Named:
    _check_prime(p)
    return Named(f"C({p})", lambda prec: _C_interval(p, prec))


def c_expr(p: int) -> Expr:
    return Product(Const(THETA_EVEN), C_expr(p))


@lru_cache(maxsize=None)
def _theta_sum(p: int, shift: int, prec: int) -> CertReal:
    """Enclosure of sum_{k>=0} p**-(k*(k+shift)) for shift in {0, 1}."""
    tol = Fraction(1, 1 << prec)
    total = Fraction(0)
    k = 0
    while True:
        total += Fraction(1, p ** (k * (k + shift)))
        k += 1
        head = Fraction(1, p ** (k * (k + shift)))
        ratio = Fraction(1, p ** (2 * k + 1 + shift))
        tail = head / (1 - ratio)
        if tail <= tol:
            return CertReal(total, round_up(total + tail, prec + 8), prec)


def theta_even_expr(p: int = 2) -> Expr:
    """``-1 + 2 * sum_{k>=0} p**-(k**2)``."""
    return Sum(Const(-1), Product(Const(2), Named(f"sum_k {p}^-k^2", lambda prec: _theta_sum(p, 0, prec))))


def theta_odd_expr(p: int = 2) -> Expr:
    """``2 * sum_{k>=0} p**-(k*(k+1))``."""
    return Product(Const(2), Named(f"sum_k {p}^-k(k+1)", lambda prec: _theta_sum(p, 1, prec)))


def theta_constants(prec_cap: int = DEFAULT_PREC_CAP) -> dict[str, Verdict]:
    """Certify the two series constants and their relation.

    Keys: ``even`` (-1 + 2*sum 2^-k^2 <= 2.129), ``odd``
    (2*sum 2^-k(k+1) <= 2.53175) and ``odd_to_even`` (2.53175 * 2^-1/4 <= 2.129).
    Each verdict's witness carries the enclosure that was separated.
    """
    odd_scaled = Product(Const(THETA_ODD), Power(Const(2), Const(Fraction(-1, 4))))
    return {
        "even": certify_le(theta_even_expr(2), THETA_EVEN, prec_cap),
        "odd": certify_le(theta_odd_expr(2), THETA_ODD, prec_cap),
        "odd_to_even": certify_le(odd_scaled, THETA_EVEN, prec_cap),
    }


# ---------------------------------------------------------------------------
# S(p, a)
# ---------------------------------------------------------------------------


def s_polynomial(p: int, a: int) -> int:
    if a == 1:
        return 2
    if a == 2:
        return p + 3
    if a == 3:
        return 2 * p**2 + 2 * p + 4
    if a == 4:
        return p**4 + 3 * p**3 + 4 * p**2 + 3 * p + 5
    if a == 5:
        return 2 * p**6 + 2 * p**5 + 6 * p**4 + 6 * p**3 + 6 * p**2 + 4 * p + 6
    raise ValueError(f"no polynomial form for a={a}")


# degree of s_polynomial in p, i.e. floor(a^2/4)
S_DEGREE = {1: 0, 2: 1, 3: 2, 4: 4, 5: 6}


@dataclass(frozen=True)
class SBound:
    """Upper bound on the subgroup count of a group of order ``p**a``.

    ``value`` is an exact int for ``a <= 5`` and an enclosure of
    ``c(p) * p**(a*a/4)`` otherwise.
    """

    p: int
    a: int
    value: int | CertReal

    @property
    def exact(self) -> bool:
        return isinstance(self.value, int)

    @property
    def upper(self) -> Fraction:
        return Fraction(self.value) if self.exact else self.value.hi

    def as_expr(self) -> Expr:
        return s_expr(self.p, self.a)


def s_expr(p: int, a: int) -> Expr:
    if a < 1:
        raise ValueError("S(p, a) needs a >= 1")
    _check_prime(p)
    if a <= 5:
        return Const(s_polynomial(p, a))
    return Product(c_expr(p), Power(Const(p), Const(Fraction(a * a, 4))))


def S(p: int, a: int, prec: int = DEFAULT_PREC) -> SBound:
    if a < 1:
        raise ValueError("S(p, a) needs a >= 1")
    _check_prime(p)
    if a <= 5:
        return SBound(p, a, s_polynomial(p, a))
    return SBound(p, a, s_expr(p, a).evaluate(prec))


# ---------------------------------------------------------------------------
# composite bounds
# ---------------------------------------------------------------------------


def bound_B_expr(r: int, const: Fraction = BOUND_CONSTANT, eps: Fraction = EPSILON) -> Expr:
    """``const * r**(log2(r)/4 + eps)``."""
    if r < 2:
        raise ValueError(f"B(r) needs r >= 2, got {r}")
    expo = Sum(Product(Const(Fraction(1, 4)), Log2(r)), Const(Fraction(eps)))
    return Product(Const(Fraction(const)), Power(Const(r), expo))


def bound_B(r: int, prec: int = DEFAULT_PREC, const: Fraction = BOUND_CONSTANT, eps: Fraction = EPSILON) -> CertReal:
    return bound_B_expr(r, const, eps).evaluate(prec)


def f_expr(fact) -> Expr:
    fact = _as_factorization(fact)
    if fact.r < 2:
        raise ValueError("f(r) needs r >= 2")
    return Product(Const(fact.r ** (fact.ell - 1)), *(s_expr(p, a) for p, a in fact))


def f_of_r(fact, prec: int = DEFAULT_PREC) -> int | CertReal:
    """``r**(l-1) * prod S(p_i, a_i)``; exact when every exponent is at most 5."""
    fact = _as_factorization(fact)
    if fact.r < 2:
        raise ValueError("f(r) needs r >= 2")
    if all(a <= 5 for _, a in fact):
        out = fact.r ** (fact.ell - 1)
        for p, a in fact:
            out *= s_polynomial(p, a)
        return out
    return f_expr(fact).evaluate(prec)


def trivial_bound(r: int) -> int:
    """``r**floor(log2 r)``."""
    if r < 2:
        raise ValueError("trivial bound needs r >= 2")
    return r ** (r.bit_length() - 1)


def lower_bound_check(a: int) -> Verdict:
    """Certify ``[a, floor(a/2)]_2 >= 2**(a*a/4)`` by exact integer comparison."""
    if a < 1:
        raise ValueError("a must be positive")
    g = gaussian_binomial(a, a // 2, 2)
    if a % 2 == 0:
        v = certify_le(Const(2 ** (a * a // 4)), Const(g))
    else:
        # a*a/4 is not an integer: compare fourth powers
        v = certify_le(Const(2 ** (a * a)), Const(g**4))
    w = dict(v.witness or {})
    w.update(gaussian=g, exponent=Fraction(a * a, 4))
    return Verdict(v.outcome, v.prec_used, w)


def shalev_check(a: int, k: int, p: int, prec_cap: int = DEFAULT_PREC_CAP) -> Verdict:
    """Certify ``[a, k]_p <= C(p) * p**(k*(a-k))``."""
    g = gaussian_binomial(a, k, p)
    return certify_le(Const(g), Product(C_expr(p), Const(p ** (k * (a - k)))), prec_cap)


def constants_certificate(prec_cap: int = DEFAULT_PREC_CAP) -> Certificate:
    """Enclosures of C(p), c(p) for p in {2, 3} and the series constants.

    Verified when c(2) < 7.3722, c(2) lies in (7.37218, 7.37220) and the
    three series inequalities hold.
    """
    with stopwatch() as ms:
        verdicts = {f"theta.{k}": v for k, v in theta_constants(prec_cap).items()}
        verdicts["c(2) < 7.3722"] = certify_lt(c_expr(2), BOUND_CONSTANT, prec_cap)
        verdicts["c(2) > 7.37218"] = certify_lt(Fraction("7.37218"), c_expr(2), prec_cap)
        verdicts["c(2) < 7.37220"] = certify_lt(c_expr(2), Fraction("7.37220"), prec_cap)
        enclosures = {}
        for p in (2, 3):
            enclosures[f"C({p})"] = C_enclosure(p).interval
            enclosures[f"c({p})"] = c_enclosure(p).interval
        enclosures["theta_even"] = theta_even_expr(2).evaluate(DEFAULT_PREC)
        enclosures["theta_odd"] = theta_odd_expr(2).evaluate(DEFAULT_PREC)
    detail = {
        "enclosures": enclosures,
        "checks": {k: v.outcome.value for k, v in verdicts.items()},
    }
    return Certificate("constants", combine(verdicts.values()), detail, max_prec(verdicts.values()), ms[0])
