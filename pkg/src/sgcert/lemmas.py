"""Exception sets of the one-prime inequality, and the scalar facts used when
small primes are combined.

For a prime power ``p**a`` exactly dividing ``r`` the inequality of interest is

    r * S(p, a) <= p ** (a * log2(r) / 4).

Taking logarithms, it reads ``log2 S(p, a) <= alpha * log2 r`` with
``alpha = a*log2(p)/4 - 1``.  When ``alpha <= 0`` it fails for every ``r``
(a *wholesale* exception); otherwise the failing ``r`` are exactly those
below ``r* = 2**(log2 S / alpha)``, so the exception set in the cofactor
``m = r / p**a`` is downward closed.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .arith import is_prime, next_prime, primes_upto
from .certificate import Certificate, combine, max_prec, stopwatch, verdict_payload
from .certified import (
    DEFAULT_PREC,
    DEFAULT_PREC_CAP,
    CertReal,
    Const,
    Expr,
    Log2,
    Outcome,
    Power,
    Product,
    Quotient,
    Sum,
    Verdict,
    certify_le,
    certify_lt,
)
from .sgbound import (
    BOUND_CONSTANT,
    EPSILON,
    EPSILON_WITHOUT_3,
    EXPONENT_NOTE,
    S_DEGREE,
    c_enclosure,
    c_expr,
    s_expr,
    s_polynomial,
)

PRIME_LIMIT = 97
LEMMA6_EXCEPTIONS = (729, 1458, 2187, 2916)


class ExceptionStatus(str, enum.Enum):
    FINITE_SET = "FiniteSet"
    WHOLESALE = "WholesaleException"
    NO_EXCEPTION = "NoException"


@dataclass
class ExceptionReport:
    """Exception data for one prime power ``p**a``.

    ``members`` is the explicit list of exceptional cofactors when the set was
    enumerated (up to ``cap``); ``max_m`` is the largest exceptional cofactor
    coprime to ``p`` (``None`` when there is none, or for wholesale exceptions).
    """

    p: int
    a: int
    status: ExceptionStatus
    max_m: int | None = None
    members: tuple[int, ...] | None = None
    threshold: CertReal | None = None
    cap: int | None = None
    complete: bool = False
    downward_closed: bool = True
    undetermined: tuple[int, ...] = ()
    verdicts: dict[str, Verdict] = field(default_factory=dict)

    @property
    def r_values(self) -> tuple[int, ...]:
        q = self.p**self.a
        return tuple(m * q for m in self.members or ())

    def summary(self) -> dict:
        out = {"p": self.p, "a": self.a, "status": self.status.value, "max_m": self.max_m}
        if self.threshold is not None:
            out["threshold"] = self.threshold
        if self.members is not None:
            out.update(cap=self.cap, members=len(self.members), complete=self.complete,
                       downward_closed=self.downward_closed)
        if self.undetermined:
            out["undetermined"] = list(self.undetermined)
        return out


# ---------------------------------------------------------------------------
# the one-prime inequality
# ---------------------------------------------------------------------------


def alpha_expr(p: int, a: int) -> Expr:
    return Sum(Product(Const(Fraction(a, 4)), Log2(p)), Const(-1))


def is_wholesale(p: int, a: int, prec_cap: int = DEFAULT_PREC_CAP) -> bool:
    """True when ``a*log2(p) <= 4``, i.e. the inequality fails for every r."""
    v = certify_le(Product(Const(a), Log2(p)), Const(4), prec_cap)
    if v.outcome is Outcome.UNDETERMINED:
        raise ArithmeticError(f"sign of alpha undecided for p={p}, a={a}")
    return v.ok


def membership(p: int, a: int, m: int, prec_cap: int = DEFAULT_PREC_CAP) -> Verdict:
    """Certify ``r*S(p,a) <= p**(a*log2(r)/4)`` at ``r = m*p**a``.

    VERIFIED means the inequality holds (``m`` is not exceptional);
    REFUTED means ``m`` is exceptional.
    """
    r = m * p**a
    lhs = Product(Const(r), s_expr(p, a))
    rhs = Power(Const(p), Product(Const(Fraction(a, 4)), Log2(r)))
    return certify_le(lhs, rhs, prec_cap)


def exception_threshold(p: int, a: int, prec: int = DEFAULT_PREC):
    """Enclosure of ``r*`` or ``ExceptionStatus.WHOLESALE`` when alpha <= 0."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if is_wholesale(p, a):
        return ExceptionStatus.WHOLESALE
    expo = Quotient(Log2(s_expr(p, a)), alpha_expr(p, a))
    return Power(Const(2), expo).evaluate(prec)


def _prev_coprime(m: int, p: int) -> int:
    m -= 1
    if m % p == 0:
        m -= 1
    return m


def _next_coprime(m: int, p: int) -> int:
    m += 1
    if m % p == 0:
        m += 1
    return m


def threshold_cofactor(p: int, a: int, prec_cap: int = DEFAULT_PREC_CAP) -> ExceptionReport:
    """Locate the largest exceptional cofactor from the threshold alone.

    The answer is certified by two membership checks at the boundary; the
    region in between follows from monotonicity in ``r``.
    """
    thr = exception_threshold(p, a)
    if thr is ExceptionStatus.WHOLESALE:
        return ExceptionReport(p, a, ExceptionStatus.WHOLESALE)
    q = p**a
    m = max(1, int(thr.hi // q))
    if m % p == 0:
        m -= 1
    verdicts = {}
    while m >= 1:
        v = membership(p, a, m, prec_cap)
        if v.outcome is Outcome.UNDETERMINED:
            raise ArithmeticError(f"membership of m={m} undecided for p={p}, a={a}")
        if v.outcome is Outcome.REFUTED:
            verdicts[f"m={m} exceptional"] = v
            break
        m = _prev_coprime(m, p)
    else:
        m = 0
    nxt = _next_coprime(m, p) if m else 1
    v = membership(p, a, nxt, prec_cap)
    while v.outcome is Outcome.REFUTED:
        m, nxt = nxt, _next_coprime(nxt, p)
        verdicts[f"m={m} exceptional"] = v
        v = membership(p, a, nxt, prec_cap)
    verdicts[f"m={nxt} holds"] = v
    status = ExceptionStatus.FINITE_SET if m else ExceptionStatus.NO_EXCEPTION
    return ExceptionReport(p, a, status, max_m=m or None, threshold=thr, complete=True, verdicts=verdicts)


def exception_set(p: int, a: int, cap: int, prec_cap: int = DEFAULT_PREC_CAP) -> ExceptionReport:
    """Enumerate exceptional cofactors ``m <= cap`` coprime to ``p``, each certified."""
    if cap < 1:
        raise ValueError("cap must be at least 1")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    members, undetermined = [], []
    for m in range(1, cap + 1):
        if m % p == 0:
            continue
        v = membership(p, a, m, prec_cap)
        if v.outcome is Outcome.REFUTED:
            members.append(m)
        elif v.outcome is Outcome.UNDETERMINED:
            undetermined.append(m)
    wholesale = is_wholesale(p, a, prec_cap)
    max_m = members[-1] if members else None
    closed = members == [m for m in range(1, (max_m or 0) + 1) if m % p]
    report = ExceptionReport(
        p, a,
        ExceptionStatus.WHOLESALE if wholesale else
        ExceptionStatus.FINITE_SET if members else ExceptionStatus.NO_EXCEPTION,
        max_m=None if wholesale else max_m,
        members=tuple(members),
        cap=cap,
        downward_closed=closed,
        undetermined=tuple(undetermined),
    )
    if not wholesale:
        report.threshold = exception_threshold(p, a)
        # alpha > 0: one non-member beyond the cap rules out everything larger
        beyond = _next_coprime(cap, p)
        v = membership(p, a, beyond, prec_cap)
        report.verdicts[f"m={beyond} holds"] = v
        report.complete = v.ok and not undetermined
    return report


# ---------------------------------------------------------------------------
# helpers for the per-lemma certificates
# ---------------------------------------------------------------------------


class _Claims:
    """Ordered collection of named verdicts forming one certificate."""

    def __init__(self):
        self.items: dict[str, Verdict] = {}
        self.info: dict = {}

    def add(self, name: str, v: Verdict | bool, **witness) -> Verdict:
        if isinstance(v, bool):
            v = Verdict(Outcome.VERIFIED if v else Outcome.REFUTED, 0, witness or None)
        elif v.outcome is Outcome.EQUAL:
            v = Verdict(Outcome.VERIFIED, v.prec_used, v.witness)
        self.items[name] = v
        return v

    def certificate(self, claim_id: str, elapsed_ms: int) -> Certificate:
        vs = list(self.items.values())
        failed = [k for k, v in self.items.items() if v.outcome is not Outcome.VERIFIED]
        detail = dict(self.info)
        detail["checks"] = {k: verdict_payload(v) for k, v in self.items.items()}
        if failed:
            detail["failed"] = failed
        return Certificate(claim_id, combine(vs), detail, max_prec(vs), elapsed_ms)


def _poly_tail(claims: _Claims, a: int, p0: int, lin: int, const: Expr, label: str) -> None:
    """Certify, for every real ``p >= p0``,

        lin*L + log2 S(p, a) <= (a*a/4)*L**2 + const,   L = log2 p.

    ``S(p)/p**d`` is non-increasing (non-negative coefficients, degree d), so
    ``log2 S(p) <= log2(S(p0)/p0**d) + d*L``; the resulting quadratic in L is
    non-negative at ``log2 p0`` and increasing beyond its vertex.
    """
    d = S_DEGREE[a]
    L0 = Log2(p0)
    head = Quotient(Const(s_polynomial(p0, a)), Const(p0**d))
    quad = Sum(
        Product(Const(Fraction(a * a, 4)), L0, L0),
        Product(Const(-(lin + d)), L0),
        const,
        Product(Const(-1), Log2(head)),
    )
    claims.add(f"{label}: quadratic >= 0 at p0={p0}", certify_le(Const(0), quad))
    slope = Sum(Product(Const(Fraction(a * a, 2)), L0), Const(-(lin + d)))
    claims.add(f"{label}: quadratic increasing from p0={p0}", certify_lt(Const(0), slope))


def _alpha_positive_from(claims: _Claims, a: int, p0: int, label: str) -> None:
    claims.add(f"{label}: a*log2(p) > 4 for p >= {p0}", certify_lt(Const(4), Product(Const(a), Log2(p0))))


@dataclass(frozen=True)
class LemmaStatement:
    """Exceptions claimed by one of the one-prime lemmas.

    ``ranges`` maps a prime to its stated maximal cofactor; ``blanket`` lists
    primes excepted outright.
    """

    index: int
    a: int
    ranges: dict
    blanket: frozenset
    notes: tuple[str, ...] = ()


PAPER_LEMMAS = {
    1: LemmaStatement(1, 1, {23: 8, 19: 3784}, frozenset(primes_upto(17))),
    2: LemmaStatement(2, 2, {7: 6, 5: 16314}, frozenset({2, 3})),
    3: LemmaStatement(
        3, 3, {5: 2}, frozenset({2, 3}),
        notes=("hypothesis r/p^3 > 1 conflicts with the stated range 1 <= r/p^3; m = 1 is included",),
    ),
    4: LemmaStatement(4, 4, {3: 116}, frozenset({2})),
    5: LemmaStatement(5, 5, {3: 11}, frozenset({2})),
}


def _verify_one_prime_lemma(st: LemmaStatement, prec_cap: int, prime_limit: int) -> tuple[_Claims, dict]:
    claims = _Claims()
    reports = {}
    a = st.a
    for p in primes_upto(prime_limit):
        if p in st.ranges:
            stated = st.ranges[p]
            rep = exception_set(p, a, stated + 2 * p + 2, prec_cap)
            reports[p] = rep.summary()
            expected = [m for m in range(1, stated + 1) if m % p]
            got = list(rep.members or ())
            diff = sorted(set(expected) ^ set(got))
            claims.add(f"p={p}: max cofactor {stated}", rep.max_m == stated and not diff,
                       computed=rep.max_m, differing=diff[:10])
            claims.add(f"p={p}: set downward closed and complete", rep.downward_closed and rep.complete)
            for name, v in rep.verdicts.items():
                claims.add(f"p={p}: {name}", v)
            tc = threshold_cofactor(p, a, prec_cap)
            claims.add(f"p={p}: threshold agrees with enumeration", tc.max_m == rep.max_m, threshold_max=tc.max_m)
        elif p in st.blanket:
            rep = threshold_cofactor(p, a, prec_cap)
            reports[p] = rep.summary()
        else:
            claims.add(f"p={p}: alpha > 0", not is_wholesale(p, a, prec_cap))
            claims.add(f"p={p}: holds at r=p^{a}", membership(p, a, 1, prec_cap))
            reports[p] = {"p": p, "a": a, "status": ExceptionStatus.NO_EXCEPTION.value}
    p0 = prime_limit + 1
    _alpha_positive_from(claims, a, p0, "tail")
    _poly_tail(claims, a, p0, lin=a, const=Const(0), label="tail")
    return claims, reports


def _verify_lemma0(prec_cap: int, prime_limit: int) -> _Claims:
    claims = _Claims()
    K = Log2(Const(BOUND_CONSTANT))
    for a in range(1, 11):
        for p in primes_upto(prime_limit):
            rhs = Product(Const(BOUND_CONSTANT), Power(Const(p), Product(Const(Fraction(a * a, 4)), Log2(p))))
            claims.add(f"a={a}, p={p}", certify_le(s_expr(p, a), rhs, prec_cap))
    for a in range(1, 6):
        _poly_tail(claims, a, prime_limit + 1, lin=0, const=K, label=f"a={a} tail")
    # a >= 6: S = c(p) p^(a^2/4) <= c(2) p^(a^2/4) <= 7.3722 p^(a^2 log2(p)/4)
    c2 = c_enclosure(2, Fraction(1, 10**9)).interval
    claims.add("c(2) < 7.3722", certify_lt(c_expr(2), Const(BOUND_CONSTANT), prec_cap))
    claims.add("c(2) in (7.37218, 7.37220)",
               Fraction("7.37218") < c2.lo and c2.hi < Fraction("7.37220"))
    for p in primes_upto(prime_limit)[1:]:
        claims.add(f"c({p}) <= c(2)", certify_le(c_expr(p), c_expr(2), prec_cap))
    # a = 1 and a = 2 base steps as written in the argument
    k1 = Product(Const(BOUND_CONSTANT), Power(Const(2), Const(Fraction(1, 4))))
    claims.add("a=1: S(p,1)=2 <= 7.3722*2^(1/4)", certify_le(Const(2), k1, prec_cap))
    claims.add("a=2: p+3 <= 7.3722*p at p=2", certify_le(Const(5), Const(2 * BOUND_CONSTANT)))
    printed = certify_lt(k1, Const(Fraction("9.5136")), prec_cap)
    claims.info["printed_constant_discrepancy"] = {
        "printed": "7.3722*2^(1/4) = 9.5136",
        "computed": k1.evaluate(DEFAULT_PREC),
        "computed_below_printed": printed.ok,
    }
    claims.info["notes"] = [
        EXPONENT_NOTE,
        "a=2 step read as p+3 <= 7.3722*p (the direction the argument needs)",
        "c(p) is non-increasing in p: each factor 1/(1-p^-i) decreases with p",
    ]
    claims.info["c(2)"] = c2
    return claims


def _lemma6_g(a: int, L: Expr, c: Expr) -> Expr:
    """``a^2 L (L-1)/4 - a L - log2 c``: non-negative iff the inequality holds at r = p^a."""
    return Sum(
        Product(Const(Fraction(a * a, 4)), L, Sum(L, Const(-1))),
        Product(Const(-a), L),
        Product(Const(-1), Log2(c)),
    )


def _verify_lemma6(prec_cap: int, prime_limit: int) -> tuple[_Claims, dict]:
    claims = _Claims()
    reports = {}
    union = []
    for a, cap in ((6, 10), (7, 5)):
        rep = exception_set(3, a, cap, prec_cap)
        reports[f"p=3,a={a}"] = {**rep.summary(), "m": list(rep.members or ())}
        claims.add(f"p=3, a={a}: enumeration complete", rep.complete and rep.downward_closed)
        union.extend(rep.r_values)
    L3 = Log2(3)
    a0 = 8
    claims.add(f"p=3: holds at r=3^{a0}", certify_le(Const(0), _lemma6_g(a0, L3, c_expr(3)), prec_cap))
    step = Sum(Product(Const(2 * a0 + 1), L3, Sum(L3, Const(-1)), Const(Fraction(1, 4))), Product(Const(-1), L3))
    claims.add(f"p=3: g(a+1) - g(a) > 0 for a >= {a0}", certify_lt(Const(0), step, prec_cap))
    union = sorted(union)
    claims.add("p=3 exception set", tuple(union) == LEMMA6_EXCEPTIONS, computed=union)
    claims.info["p3_exceptions"] = union
    # p >= 5, a >= 6: corner (a=6, p=5) with c(p) <= c(5); both partials grow in a and L
    L5 = Log2(5)
    claims.add("p>=5, a>=6: g(6, log2 5) >= 0", certify_le(Const(0), _lemma6_g(6, L5, c_expr(5)), prec_cap))
    da = Sum(Product(Const(3), L5, Sum(L5, Const(-1))), Product(Const(-1), L5))
    dL = Sum(Product(Const(9), Sum(Product(Const(2), L5), Const(-1))), Const(-6))
    claims.add("p>=5, a>=6: dg/da > 0 at corner", certify_lt(Const(0), da, prec_cap))
    claims.add("p>=5, a>=6: dg/dL > 0 at corner", certify_lt(Const(0), dL, prec_cap))
    for p in primes_upto(prime_limit)[2:]:
        for a in range(6, 11):
            claims.add(f"p={p}, a={a}: holds at r=p^a", membership(p, a, 1, prec_cap))
    claims.add("p=2: alpha > 0 for a >= 6 (finite but blanket exception)", not is_wholesale(2, 6, prec_cap))
    claims.info["notes"] = [
        EXPONENT_NOTE,
        "c(p) <= c(5) for p >= 5 since c is non-increasing",
    ]
    return claims, reports


def verify_lemma(index: int, prec_cap: int = DEFAULT_PREC_CAP, prime_limit: int = PRIME_LIMIT) -> Certificate:
    """Certificate for one of the lemmas 0..6."""
    if index not in range(7):
        raise ValueError(f"no lemma {index}")
    with stopwatch() as ms:
        if index == 0:
            claims = _verify_lemma0(prec_cap, prime_limit)
        elif index == 6:
            claims, reports = _verify_lemma6(prec_cap, prime_limit)
            claims.info["reports"] = reports
        else:
            st = PAPER_LEMMAS[index]
            claims, reports = _verify_one_prime_lemma(st, prec_cap, prime_limit)
            claims.info["reports"] = {str(p): r for p, r in reports.items()}
            claims.info["max_m"] = {str(p): reports[p]["max_m"] for p in st.ranges}
            claims.info["blanket"] = sorted(st.blanket)
            if st.notes:
                claims.info["notes"] = list(st.notes)
            if index == 1:
                _paper_base_case(claims, 29, 1)
            elif index == 2:
                _paper_base_case(claims, 19, 2)
    return claims.certificate(f"lemma.{index}", ms[0])


def _paper_base_case(claims: _Claims, p: int, a: int) -> None:
    """The two scalar facts the written argument uses at its first tail prime."""
    L = Log2(p)
    if a == 1:
        claims.add(f"p={p}: p^(log2(p)/4) > 2p",
                   certify_lt(Const(2 * p), Power(Const(p), Product(Const(Fraction(1, 4)), L))))
        claims.add(f"p={p}: p^(1/4) > 2", certify_lt(Const(2), Power(Const(p), Const(Fraction(1, 4)))))
    else:
        claims.add(f"p={p}: p^(log2(p)/2) > (p+3)p",
                   certify_lt(Const((p + 3) * p), Power(Const(p), Product(Const(Fraction(1, 2)), L))))
        claims.add(f"p={p}: p^(1/2) > 2", certify_lt(Const(2), Power(Const(p), Const(Fraction(1, 2)))))


# ---------------------------------------------------------------------------
# combining several small primes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EpsilonMax:
    subset: tuple[int, ...]
    value: CertReal
    verdict: Verdict | None = None


def eps_term(p: int) -> Expr:
    return Sum(Const(1), Product(Const(Fraction(-1, 4)), Log2(p)))


def maximize_eps(prime_pool, exclude=(), bound: Fraction | str | None = None,
                 prec: int = DEFAULT_PREC, prec_cap: int = DEFAULT_PREC_CAP) -> EpsilonMax:
    """Maximise ``sum(1 - log2(p)/4)`` over subsets of the pool.

    A prime belongs to the maximiser iff its term is positive, i.e.
    ``log2 p < 4``.  With ``bound`` given, the maximum is also certified
    to be ``<= bound``.
    """
    pool = sorted(set(prime_pool) - set(exclude))
    if not prime_pool:
        raise ValueError("empty prime pool")
    subset = []
    for p in pool:
        v = certify_lt(Log2(p), Const(4), prec_cap)
        if v.outcome is Outcome.UNDETERMINED:
            raise ArithmeticError(f"sign of the term for p={p} undecided")
        if v.ok:
            subset.append(p)
    total: Expr = Sum(*(eps_term(p) for p in subset)) if subset else Const(0)
    verdict = certify_le(total, Const(Fraction(bound)), prec_cap) if bound is not None else None
    return EpsilonMax(tuple(subset), total.evaluate(prec), verdict)


def check_r16(r: int) -> Verdict:
    """``3 r^(1 - 2 log2(3)/4) <= r^(1 - log2(3)/4)``.

    Taking log2 and dividing by ``log2(3)/4 > 0`` reduces this exactly to
    ``4 <= log2 r``, decided here without rounding at powers of two.
    """
    return certify_le(Const(4), Log2(r))


def check_r16_direct(r: int, prec_cap: int = DEFAULT_PREC_CAP) -> Verdict:
    """The unreduced form; undecidable by enclosures exactly at r = 16."""
    L = Log2(3)
    lhs = Product(Const(3), Power(Const(r), Sum(Const(1), Product(Const(Fraction(-1, 2)), L))))
    rhs = Power(Const(r), Sum(Const(1), Product(Const(Fraction(-1, 4)), L)))
    return certify_le(lhs, rhs, prec_cap)


def check_r68(r: int, prec_cap: int = DEFAULT_PREC_CAP) -> Verdict:
    """``r S(3,3) <= r^(eps - 0.9278) 3^(3 log2(r)/4)``."""
    lhs = Const(r * s_polynomial(3, 3))
    rhs = Product(
        Power(Const(r), Const(EPSILON - EPSILON_WITHOUT_3)),
        Power(Const(3), Product(Const(Fraction(3, 4)), Log2(r))),
    )
    return certify_le(lhs, rhs, prec_cap)


def _r68_slope() -> Expr:
    # log-form coefficient of log2 r: eps - 0.9278 - 1 + 3 log2(3)/4
    return Sum(Const(EPSILON - EPSILON_WITHOUT_3 - 1), Product(Const(Fraction(3, 4)), Log2(3)))


def final_lhs(r: int) -> Expr:
    x = Const(Fraction(r, 3))
    return Product(
        Const(BOUND_CONSTANT),
        Power(x, Sum(Product(Const(Fraction(1, 4)), Log2(x)), Const(EPSILON_WITHOUT_3))),
        Sum(Const(1), x),
    )


def final_rhs(r: int) -> Expr:
    return Product(
        Const(BOUND_CONSTANT),
        Power(Const(r), Sum(Product(Const(Fraction(1, 4)), Log2(r)), Const(EPSILON))),
    )


def check_final(r: int, prec_cap: int = DEFAULT_PREC_CAP) -> Verdict:
    """``7.3722 (r/3)^(log2(r/3)/4 + 0.9278) (1 + r/3) <= 7.3722 r^(log2(r)/4 + eps)``."""
    return certify_le(final_lhs(r), final_rhs(r), prec_cap)


def section4_checks(prec_cap: int = DEFAULT_PREC_CAP) -> list[Certificate]:
    certs = []

    with stopwatch() as ms:
        c = _Claims()
        c.add("r=16 boundary (equality)", check_r16(16))
        c.add("r=15 fails", check_r16(15).outcome is Outcome.REFUTED)
        c.add("r=17 holds", check_r16(17))
        for r in list(range(2, 16)) + list(range(17, 65)):
            v = check_r16_direct(r, prec_cap)
            c.add(f"direct form at r={r}", v.ok == (r > 16))
        c.info.update(threshold=16, reduction="log2(3) <= (log2(3)/4)*log2(r)  <=>  log2(r) >= 4")
    certs.append(c.certificate("section4.r16", ms[0]))

    with stopwatch() as ms:
        c = _Claims()
        c.add("slope > 0 (monotone in r)", certify_lt(Const(0), _r68_slope(), prec_cap))
        rstar = Power(Const(2), Quotient(Log2(s_polynomial(3, 3)), _r68_slope())).evaluate(DEFAULT_PREC)
        r0 = int(rstar.lo)
        while check_r68(r0, prec_cap).outcome is not Outcome.VERIFIED:
            r0 += 1
        while r0 > 2 and check_r68(r0 - 1, prec_cap).ok:
            r0 -= 1
        c.add(f"holds at r={r0}", check_r68(r0, prec_cap))
        c.add(f"fails at r={r0 - 1}", check_r68(r0 - 1, prec_cap).outcome is Outcome.REFUTED)
        c.add("discovered threshold is 68", r0 == 68, threshold=r0)
        c.info.update(threshold=r0, r_star=rstar)
    certs.append(c.certificate("section4.r68", ms[0]))

    with stopwatch() as ms:
        c = _Claims()
        for p in (5, 7, 11, 13, 17):
            L = Log2(p)
            c.add(f"p={p}: log2 p > 2", certify_lt(Const(2), L, prec_cap))
            c.add(f"p={p}: p^(eps - log2(p)/4) > 2",
                  certify_lt(Const(2), Power(Const(p), Sum(Const(EPSILON), Product(Const(Fraction(-1, 4)), L))),
                             prec_cap))
        full = maximize_eps([3, 5, 7, 11, 13, 17, 19, 23], bound=EPSILON)
        no3 = maximize_eps([3, 5, 7, 11, 13, 17, 19, 23], exclude=[3], bound=EPSILON_WITHOUT_3)
        c.add("max over {3,5,7,11,13} <= 1.5315", full.verdict)
        c.add("maximiser is {3,5,7,11,13}", full.subset == (3, 5, 7, 11, 13))
        c.add("max without 3 <= 0.9278", no3.verdict)
        c.add("maximiser without 3 is {5,7,11,13}", no3.subset == (5, 7, 11, 13))
        c.info.update(eps_max=full.value, eps_max_without_3=no3.value)
    certs.append(c.certificate("section4.primes", ms[0]))

    with stopwatch() as ms:
        c = _Claims()
        # D(x) = c1 x + c0 - log2(1 + 2^-x), x = log2(r/3); increasing when c1 > 0
        L = Log2(3)
        c1 = Sum(Product(Const(Fraction(1, 2)), L), Const(EPSILON - EPSILON_WITHOUT_3 - 1))
        c.add("difference slope > 0", certify_lt(Const(0), c1, prec_cap))
        r0 = 6
        while not check_final(r0, prec_cap).ok:
            r0 += 1
        c.add(f"holds at R0={r0}", check_final(r0, prec_cap))
        for r in range(6, r0):
            c.add(f"explicit r={r}", check_final(r, prec_cap))
        for r in range(r0 + 1, 201):
            c.add(f"cross-check r={r}", check_final(r, prec_cap))
        c.info.update(R0=r0, explicit_range=[6, r0])
    certs.append(c.certificate("section4.final", ms[0]))
    return certs
