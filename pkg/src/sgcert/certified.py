"""Interval enclosures with exact dyadic endpoints, and certified comparisons.

Every real quantity is carried as a :class:`CertReal`, a closed interval whose
endpoints are exact :class:`fractions.Fraction` values.  Transcendental
primitives (``log2`` and ``2**x``) are *correctly rounded* onto a dyadic grid
by a Ziv loop: the series is re-evaluated with more guard bits until the lower
and upper bounds land in the same grid cell.  Because the grid cell containing
an irrational number is unique, enclosures computed at a higher precision are
always contained in those computed at a lower one.

Comparisons between expressions are decided by :func:`certified_compare`,
which escalates the working precision until the two enclosures separate.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Any, Callable, Union

DEFAULT_PREC = 64
DEFAULT_PREC_CAP = 4096
GUARD_BITS = 16
# |exponent| of 2**x beyond which we refuse to build the enclosure
MAX_EXP2_EXPONENT = 1 << 24
_ZIV_MAX_GUARD = 1 << 16

Number = Union[int, Fraction]


class PrecisionError(ArithmeticError):
    """Raised when an enclosure cannot be produced within the precision budget."""


class ExpressionError(TypeError):
    """Raised for structurally invalid comparison expressions."""


# ---------------------------------------------------------------------------
# dyadic helpers
# ---------------------------------------------------------------------------


def _dyadic(m: int, k: int) -> Fraction:
    """Return ``m / 2**k`` for any integer ``k``."""
    if k >= 0:
        return Fraction(m, 1 << k)
    return Fraction(m << -k)


def _floor_scaled(x: Fraction, k: int) -> int:
    """``floor(x * 2**k)``."""
    if k >= 0:
        return (x.numerator << k) // x.denominator
    return x.numerator // (x.denominator << -k)


def _ceil_scaled(x: Fraction, k: int) -> int:
    return -_floor_scaled(-x, k)


def _ilog2(x: Fraction) -> int:
    """``floor(log2 x)`` for ``x > 0``."""
    e = x.numerator.bit_length() - x.denominator.bit_length()
    if e >= 0:
        if x.numerator < x.denominator << e:
            e -= 1
    elif x.numerator << -e < x.denominator:
        e -= 1
    return e


def _power_of_two_exponent(x: Fraction) -> int | None:
    """Return ``k`` with ``x == 2**k``, or ``None``."""
    if x <= 0:
        return None
    n, d = x.numerator, x.denominator
    if n & (n - 1) or d & (d - 1):
        return None
    return n.bit_length() - d.bit_length()


def round_down(x: Fraction, prec: int) -> Fraction:
    """Largest dyadic with ``prec`` significant bits that is ``<= x``."""
    if x == 0:
        return x
    k = prec - 1 - _ilog2(abs(x))
    d = x.denominator
    if k >= 0 and not d & (d - 1) and d.bit_length() - 1 <= k:
        return x
    return _dyadic(_floor_scaled(x, k), k)


def round_up(x: Fraction, prec: int) -> Fraction:
    return -round_down(-x, prec)


def _as_fraction(x: Any) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not numbers here")
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


# ---------------------------------------------------------------------------
# series kernels (fixed point, scale 2**w)
# ---------------------------------------------------------------------------


def _atanh_series(zn: int, zd: int, w: int) -> tuple[int, int]:
    """Bounds on ``2*atanh(zn/zd) * 2**w`` for ``0 < zn/zd <= 1/3``.

    Lower bound truncates every term downwards; upper bound rounds every
    term up and adds the geometric tail majorant.
    """
    zn2, zd2 = zn * zn, zd * zd
    one = 1 << w
    p_lo = one * zn // zd
    p_hi = -(-one * zn // zd)
    lo = hi = 0
    j = 0
    while True:
        q = 2 * j + 1
        lo += p_lo // q
        hi += -(-p_hi // q)
        p_lo = p_lo * zn2 // zd2
        p_hi = -(-p_hi * zn2 // zd2)
        j += 1
        if p_hi <= 1:
            break
    # sum_{i>=j} z^(2i+1)/(2i+1) <= z^(2j+1) / ((2j+1)(1 - z^2))
    tail = -(-p_hi * zd2 // ((2 * j + 1) * (zd2 - zn2)))
    return 2 * lo, 2 * (hi + tail)


@lru_cache(maxsize=64)
def _ln2_scaled(w: int) -> tuple[int, int]:
    return _atanh_series(1, 3, w)


def _ln_scaled(y: Fraction, w: int) -> tuple[int, int]:
    """Bounds on ``ln(y) * 2**w`` for ``1 < y < 2``."""
    n, d = y.numerator, y.denominator
    return _atanh_series(n - d, n + d, w)


def _exp_series(t_num: int, w: int, upper: bool) -> int:
    """Bound on ``exp(t) * 2**w`` where ``t = t_num / 2**w`` and ``0 <= t < 1``."""
    one = 1 << w
    term = one
    total = 0
    j = 0
    while True:
        total += term
        j += 1
        if upper:
            term = -(-term * t_num // (j << w))
        else:
            term = term * t_num // (j << w)
        if term <= 1:
            break
    if upper:
        # remaining terms form a series with ratio <= t/(j+1) <= 1/2
        total += 2 * term + j
    return total


# ---------------------------------------------------------------------------
# correctly rounded primitives
# ---------------------------------------------------------------------------


@lru_cache(maxsize=65536)
def _log2_rounded(x: Fraction, k: int) -> tuple[Fraction, Fraction]:
    """(round-down, round-up) of ``log2 x`` on the grid ``2**-k``."""
    e = _ilog2(x)
    y = x / _dyadic(1, -e) if e >= 0 else x * (1 << -e)
    if y == 1:
        v = Fraction(e)
        return v, v
    w = max(k, 8) + GUARD_BITS
    while w <= _ZIV_MAX_GUARD + k:
        ln_lo, ln_hi = _ln_scaled(y, w)
        l2_lo, l2_hi = _ln2_scaled(w)
        a = (ln_lo << k) // l2_hi
        b = (ln_hi << k) // l2_lo
        if a == b:
            return _dyadic((e << k) + a, k), _dyadic((e << k) + a + 1, k)
        w *= 2
    raise PrecisionError(f"log2({x}) could not be rounded at {k} bits")


@lru_cache(maxsize=65536)
def _exp2_rounded(x: Fraction, prec: int) -> tuple[Fraction, Fraction]:
    """(round-down, round-up) of ``2**x`` with ``prec`` significant bits."""
    m = x.numerator // x.denominator
    if abs(m) > MAX_EXP2_EXPONENT:
        raise PrecisionError(f"2**x overflow: exponent {m} exceeds budget")
    f = x - m
    if f == 0:
        v = _dyadic(1, -m)
        return v, v
    k = prec - 1
    w = prec + GUARD_BITS
    while w <= _ZIV_MAX_GUARD + prec:
        l2_lo, l2_hi = _ln2_scaled(w)
        t_lo = _floor_scaled(f * l2_lo, 0)
        t_hi = _ceil_scaled(f * l2_hi, 0)
        s_lo = _exp_series(t_lo, w, upper=False)
        s_hi = _exp_series(t_hi, w, upper=True)
        a = (s_lo << k) >> w
        b = (s_hi << k) >> w
        if a == b:
            return _dyadic(a, k - m), _dyadic(a + 1, k - m)
        w *= 2
    raise PrecisionError(f"2**({x}) could not be rounded at {prec} bits")


# ---------------------------------------------------------------------------
# CertReal
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CertReal:
    """Closed interval ``[lo, hi]`` with exact rational endpoints."""

    lo: Fraction
    hi: Fraction
    prec: int = DEFAULT_PREC

    def __post_init__(self):
        lo, hi = _as_fraction(self.lo), _as_fraction(self.hi)
        if lo > hi:
            raise ValueError(f"empty interval [{lo}, {hi}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @classmethod
    def _raw(cls, lo: Fraction, hi: Fraction, prec: int) -> CertReal:
        # endpoints already Fractions with lo <= hi
        obj = object.__new__(cls)
        object.__setattr__(obj, "lo", lo)
        object.__setattr__(obj, "hi", hi)
        object.__setattr__(obj, "prec", prec)
        return obj

    @classmethod
    def point(cls, x: Number, prec: int = DEFAULT_PREC) -> CertReal:
        x = _as_fraction(x)
        return cls._raw(x, x, prec)

    @classmethod
    def lift(cls, x: Any, prec: int = DEFAULT_PREC) -> CertReal:
        if isinstance(x, CertReal):
            return x
        return cls.point(x, prec)

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x: Any) -> bool:
        if isinstance(x, CertReal):
            return self.lo <= x.lo and x.hi <= self.hi
        x = _as_fraction(x)
        return self.lo <= x <= self.hi

    def _outward(self, lo: Fraction, hi: Fraction, prec: int) -> CertReal:
        return CertReal._raw(round_down(lo, prec), round_up(hi, prec), prec)

    def __add__(self, other: Any) -> CertReal:
        if not isinstance(other, (CertReal, int, Fraction)):
            return NotImplemented
        o = CertReal.lift(other, self.prec)
        prec = max(self.prec, o.prec)
        return self._outward(self.lo + o.lo, self.hi + o.hi, prec)

    __radd__ = __add__

    def __neg__(self) -> CertReal:
        return CertReal._raw(-self.hi, -self.lo, self.prec)

    def __sub__(self, other: Any) -> CertReal:
        if not isinstance(other, (CertReal, int, Fraction)):
            return NotImplemented
        return self + (-CertReal.lift(other, self.prec))

    def __rsub__(self, other: Any) -> CertReal:
        return CertReal.lift(other, self.prec) - self

    def __mul__(self, other: Any) -> CertReal:
        if not isinstance(other, (CertReal, int, Fraction)):
            return NotImplemented
        o = CertReal.lift(other, self.prec)
        prec = max(self.prec, o.prec)
        if self.lo >= 0 and o.lo >= 0:
            return self._outward(self.lo * o.lo, self.hi * o.hi, prec)
        ps = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return self._outward(min(ps), max(ps), prec)

    __rmul__ = __mul__

    def reciprocal(self) -> CertReal:
        if self.lo <= 0 <= self.hi:
            raise ZeroDivisionError(f"interval {self} contains zero")
        return self._outward(1 / self.hi, 1 / self.lo, self.prec)

    def __truediv__(self, other: Any) -> CertReal:
        if not isinstance(other, (CertReal, int, Fraction)):
            return NotImplemented
        return self * CertReal.lift(other, self.prec).reciprocal()

    def __rtruediv__(self, other: Any) -> CertReal:
        return CertReal.lift(other, self.prec) * self.reciprocal()

    def ipow(self, n: int) -> CertReal:
        """Integer power of an interval with positive lower endpoint."""
        if self.lo <= 0:
            raise ValueError("ipow requires a positive interval")
        if n >= 0:
            return self._outward(self.lo**n, self.hi**n, self.prec)
        return self._outward(self.hi**n, self.lo**n, self.prec)

    def log2(self) -> CertReal:
        if self.lo <= 0:
            raise ValueError(f"log2 of non-positive interval {self}")
        lo, _ = _log2_rounded(self.lo, self.prec)
        _, hi = _log2_rounded(self.hi, self.prec)
        return CertReal._raw(lo, hi, self.prec)

    def exp2(self) -> CertReal:
        lo, _ = _exp2_rounded(self.lo, self.prec)
        _, hi = _exp2_rounded(self.hi, self.prec)
        return CertReal._raw(lo, hi, self.prec)

    def with_prec(self, prec: int) -> CertReal:
        if prec == self.prec:
            return self
        return CertReal._raw(self.lo, self.hi, prec)

    def certainly_lt(self, other: Any) -> bool:
        return self.hi < CertReal.lift(other).lo

    def certainly_gt(self, other: Any) -> bool:
        return self.lo > CertReal.lift(other).hi

    def decimal(self, digits: int = 12) -> tuple[str, str]:
        """Endpoints as decimal strings, lower rounded down and upper rounded up."""
        return decimal_string(self.lo, digits, "down"), decimal_string(self.hi, digits, "up")

    def __str__(self) -> str:
        lo, hi = self.decimal(10)
        return f"[{lo}, {hi}]"


def decimal_string(x: Fraction, digits: int, direction: str) -> str:
    """``x`` rounded to ``digits`` decimals in the given direction ('down'/'up')."""
    x = _as_fraction(x)
    scale = 10**digits
    scaled = x * scale
    if direction == "down":
        q = scaled.numerator // scaled.denominator
    elif direction == "up":
        q = -(-scaled.numerator // scaled.denominator)
    else:
        raise ValueError(f"unknown rounding direction {direction!r}")
    sign = "-" if q < 0 else ""
    q = abs(q)
    whole, frac = divmod(q, scale)
    if digits == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{digits}d}"


def log2_enclosure(n: int, prec: int = DEFAULT_PREC) -> CertReal:
    """Enclosure of ``log2 n`` of width ``2**-prec`` (a point when ``n`` is a power of two)."""
    if isinstance(n, bool) or not isinstance(n, (int, Fraction)):
        raise TypeError("log2_enclosure takes an exact positive number")
    x = Fraction(n)
    if x <= 0:
        raise ValueError(f"log2 undefined for {n}")
    lo, hi = _log2_rounded(x, prec)
    return CertReal(lo, hi, prec)


def pow2_enclosure(x: Any, prec: int = DEFAULT_PREC) -> CertReal:
    """Enclosure of ``{2**t : t in x}`` with ``prec`` significant bits."""
    return CertReal.lift(x, prec).with_prec(prec).exp2()


# ---------------------------------------------------------------------------
# expressions
# ---------------------------------------------------------------------------


def _lift(x: Any) -> Expr:
    if isinstance(x, Expr):
        return x
    if isinstance(x, bool):
        raise ExpressionError("booleans cannot appear in expressions")
    if isinstance(x, (int, Fraction)):
        return Const(x)
    if isinstance(x, float):
        raise ExpressionError("floats are not allowed; use Fraction or a decimal string")
    raise ExpressionError(f"cannot use {type(x).__name__} in an expression")


_UNSET = object()


class Expr:
    """A real-valued expression that can be enclosed at any precision.

    Subclasses implement ``_exact`` and ``_key``; the public ``exact`` and
    ``key`` memoize them (nodes are immutable once built).
    """

    _exact_memo = _UNSET
    _key_memo = None

    def evaluate(self, prec: int) -> CertReal:
        raise NotImplementedError

    def exact(self) -> Fraction | None:
        """Exact rational value when one follows by rational reduction alone."""
        if self._exact_memo is _UNSET:
            self._exact_memo = self._exact()
        return self._exact_memo

    def key(self) -> tuple:
        if self._key_memo is None:
            self._key_memo = self._key()
        return self._key_memo

    def _exact(self) -> Fraction | None:
        return None

    def _key(self) -> tuple:
        raise NotImplementedError

    def __add__(self, other):
        return Sum(self, _lift(other))

    def __radd__(self, other):
        return Sum(_lift(other), self)

    def __sub__(self, other):
        return Sum(self, Product(Const(-1), _lift(other)))

    def __rsub__(self, other):
        return Sum(_lift(other), Product(Const(-1), self))

    def __mul__(self, other):
        return Product(self, _lift(other))

    def __rmul__(self, other):
        return Product(_lift(other), self)

    def __truediv__(self, other):
        return Quotient(self, _lift(other))

    def __rtruediv__(self, other):
        return Quotient(_lift(other), self)

    def __neg__(self):
        return Product(Const(-1), self)

    def __pow__(self, other):
        return Power(self, _lift(other))

    def __rpow__(self, other):
        return Power(_lift(other), self)

    def __repr__(self) -> str:
        return _render(self.key())


def _render(key: tuple) -> str:
    tag = key[0]
    if tag == "const":
        return str(key[1])
    if tag == "named":
        return key[1]
    if tag == "log2":
        return f"log2({_render(key[1])})"
    if tag == "pow":
        return f"({_render(key[1])})^({_render(key[2])})"
    if tag == "div":
        return f"({_render(key[1])})/({_render(key[2])})"
    sep = " + " if tag == "sum" else "*"
    return "(" + sep.join(_render(k) for k in key[1:]) + ")"


class Const(Expr):
    def __init__(self, value: Number | str):
        self.value = _as_fraction(value)

    def evaluate(self, prec):
        return CertReal.point(self.value, prec)

    def _exact(self):
        return self.value

    def _key(self):
        return ("const", self.value)


class Named(Expr):
    """An opaque quantity given by an enclosure function ``prec -> CertReal``.

    ``name`` must identify the quantity uniquely; it is used for syntactic
    equality.
    """

    def __init__(self, name: str, enclose: Callable[[int], CertReal]):
        self.name = name
        self.enclose = enclose

    def evaluate(self, prec):
        return self.enclose(prec)

    def _key(self):
        return ("named", self.name)


class Log2(Expr):
    def __init__(self, arg: Any):
        self.arg = _lift(arg)

    def evaluate(self, prec):
        x = self.arg.exact()
        if x is not None:
            if x <= 0:
                raise ExpressionError(f"log2 of non-positive value {x}")
            lo, hi = _log2_rounded(x, prec)
            return CertReal(lo, hi, prec)
        return self.arg.evaluate(prec).with_prec(prec).log2()

    def _exact(self):
        x = self.arg.exact()
        if x is None:
            return None
        k = _power_of_two_exponent(x)
        return None if k is None else Fraction(k)

    def _key(self):
        return ("log2", self.arg.key())


class _NAry(Expr):
    tag = ""

    def __init__(self, *args: Any):
        flat = []
        for a in args:
            a = _lift(a)
            if isinstance(a, type(self)):
                flat.extend(a.args)
            else:
                flat.append(a)
        if not flat:
            raise ExpressionError(f"empty {self.tag}")
        self.args = tuple(flat)

    def _key(self):
        return (self.tag, *sorted((a.key() for a in self.args), key=repr))


class Sum(_NAry):
    tag = "sum"

    def evaluate(self, prec):
        total = CertReal.point(0, prec)
        for a in self.args:
            total = total + a.evaluate(prec)
        return total

    def _exact(self):
        vals = [a.exact() for a in self.args]
        if any(v is None for v in vals):
            return None
        return sum(vals, Fraction(0))


class Product(_NAry):
    tag = "prod"

    def evaluate(self, prec):
        exact = [a.exact() for a in self.args]
        coeff = Fraction(1)
        result = None
        for a, v in zip(self.args, exact):
            if v is not None:
                coeff *= v
            else:
                x = a.evaluate(prec)
                result = x if result is None else result * x
        if result is None:
            return CertReal.point(coeff, prec)
        return result * coeff

    def _exact(self):
        vals = [a.exact() for a in self.args]
        if any(v == 0 for v in vals if v is not None):
            return Fraction(0)
        if any(v is None for v in vals):
            return None
        out = Fraction(1)
        for v in vals:
            out *= v
        return out


class Quotient(Expr):
    def __init__(self, num: Any, den: Any):
        self.num, self.den = _lift(num), _lift(den)

    def evaluate(self, prec):
        return self.num.evaluate(prec) / self.den.evaluate(prec)

    def _exact(self):
        n, d = self.num.exact(), self.den.exact()
        if n is None or d is None:
            return None
        if d == 0:
            raise ExpressionError("division by exact zero")
        return n / d

    def _key(self):
        return ("div", self.num.key(), self.den.key())


class Power(Expr):
    """``base ** exponent`` for a positive base."""

    def __init__(self, base: Any, exponent: Any):
        self.base, self.exponent = _lift(base), _lift(exponent)

    def _exact(self):
        b, e = self.base.exact(), self.exponent.exact()
        if e is None or b is None:
            return None
        if e == 0:
            return Fraction(1)
        if b <= 0:
            raise ExpressionError(f"power of non-positive base {b}")
        if e.denominator == 1:
            return b ** int(e)
        if b == 1:
            return Fraction(1)
        k = _power_of_two_exponent(b)
        if k is not None and (k * e).denominator == 1:
            return _dyadic(1, -int(k * e))
        return None

    def evaluate(self, prec):
        v = self.exact()
        if v is not None:
            return CertReal.point(v, prec)
        e = self.exponent.exact()
        base = self.base.evaluate(prec)
        if base.lo <= 0:
            raise ExpressionError("power requires a positive base")
        if e is not None and e.denominator == 1 and abs(e) <= 64:
            return base.ipow(int(e))
        if e is not None:
            # rational exponent: log2 of the base is the only inexact step
            expo = Log2(self.base).evaluate(prec) * e
        else:
            expo = self.exponent.evaluate(prec) * Log2(self.base).evaluate(prec)
        return expo.with_prec(prec).exp2()

    def _key(self):
        return ("pow", self.base.key(), self.exponent.key())


def expr(x: Any) -> Expr:
    """Lift an int/Fraction/str/Expr into an expression."""
    if isinstance(x, str):
        return Const(Fraction(x))
    return _lift(x)


# ---------------------------------------------------------------------------
# verdicts
# ---------------------------------------------------------------------------


class Outcome(str, enum.Enum):
    VERIFIED = "Verified"
    REFUTED = "Refuted"
    EQUAL = "Equal"
    UNDETERMINED = "Undetermined"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Verdict:
    """Outcome of comparing two expressions.

    For :func:`certified_compare` ``VERIFIED`` means lhs < rhs and ``REFUTED``
    means lhs > rhs.  For the claim helpers :func:`certify_le` and
    :func:`certify_lt` they mean the claim holds / fails.
    """

    outcome: Outcome
    prec_used: int
    witness: dict | None = field(default=None, compare=False)

    @property
    def ok(self) -> bool:
        return self.outcome is Outcome.VERIFIED


def _interval_witness(a: CertReal, b: CertReal) -> dict:
    return {"lhs": [a.lo, a.hi], "rhs": [b.lo, b.hi]}


def certified_compare(
    lhs: Any,
    rhs: Any,
    prec_cap: int = DEFAULT_PREC_CAP,
    start_prec: int = DEFAULT_PREC,
) -> Verdict:
    """Decide the order of ``lhs`` and ``rhs``.

    Returns VERIFIED when lhs < rhs is proven, REFUTED when lhs > rhs is
    proven, EQUAL when both sides reduce syntactically or rationally to the
    same value, and UNDETERMINED when ``prec_cap`` is exhausted.
    """
    lhs, rhs = expr(lhs), expr(rhs)
    a, b = lhs.exact(), rhs.exact()
    if a is not None and b is not None:
        w = {"lhs": [a, a], "rhs": [b, b], "reason": "exact"}
        if a < b:
            return Verdict(Outcome.VERIFIED, 0, w)
        if a > b:
            return Verdict(Outcome.REFUTED, 0, w)
        return Verdict(Outcome.EQUAL, 0, w)
    prec = start_prec
    checked_syntax = False
    while True:
        x, y = lhs.evaluate(prec), rhs.evaluate(prec)
        if x.hi < y.lo:
            return Verdict(Outcome.VERIFIED, prec, _interval_witness(x, y))
        if x.lo > y.hi:
            return Verdict(Outcome.REFUTED, prec, _interval_witness(x, y))
        # equal expressions always overlap, so the syntactic test can wait
        if not checked_syntax:
            checked_syntax = True
            if lhs.key() == rhs.key():
                return Verdict(Outcome.EQUAL, 0, {"reason": "syntactic"})
        if prec * 2 > prec_cap:
            return Verdict(Outcome.UNDETERMINED, prec, _interval_witness(x, y))
        prec *= 2


def certify_le(lhs: Any, rhs: Any, prec_cap: int = DEFAULT_PREC_CAP, start_prec: int = DEFAULT_PREC) -> Verdict:
    """Certify the claim ``lhs <= rhs``; equality counts as success."""
    v = certified_compare(lhs, rhs, prec_cap, start_prec)
    if v.outcome is Outcome.EQUAL:
        return Verdict(Outcome.VERIFIED, v.prec_used, {**(v.witness or {}), "equal": True})
    return v


def certify_lt(lhs: Any, rhs: Any, prec_cap: int = DEFAULT_PREC_CAP, start_prec: int = DEFAULT_PREC) -> Verdict:
    """Certify the strict claim ``lhs < rhs``; equality is a refutation."""
    v = certified_compare(lhs, rhs, prec_cap, start_prec)
    if v.outcome is Outcome.EQUAL:
        return Verdict(Outcome.REFUTED, v.prec_used, {**(v.witness or {}), "equal": True})
    return v
