from fractions import Fraction

import mpmath
import pytest

from sgcert.certified import Outcome
from sgcert.lemmas import (
    LEMMA6_EXCEPTIONS,
    PAPER_LEMMAS,
    ExceptionStatus,
    check_final,
    check_r16,
    check_r16_direct,
    check_r68,
    exception_set,
    exception_threshold,
    is_wholesale,
    maximize_eps,
    membership,
    section4_checks,
    threshold_cofactor,
    verify_lemma,
)
from sgcert.sgbound import s_polynomial

MP_DPS = 50

# independent oracle: mpmath brute force over coprime cofactors, computed before the build
ORACLE_SMALL = {
    (23, 1): 8,
    (7, 2): 6,
    (5, 3): 2,
    (3, 4): 116,
    (3, 5): 11,
}
ORACLE_COUNTS = {(23, 1): 8, (19, 1): 3585, (7, 2): 6, (5, 2): 13052, (5, 3): 2, (3, 4): 78, (3, 5): 8}
ORACLE_NONE = [(3, 8), (11, 2), (13, 2), (7, 3), (5, 4), (5, 5), (5, 6), (29, 1), (17, 2)]


def mp_exceptional(p, a, m):
    r = m * p**a
    if a <= 5:
        s = s_polynomial(p, a)
    else:
        c = mpmath.mpf(2129) / 1000 * mpmath.nprod(lambda i: 1 / (1 - mpmath.mpf(p) ** -i), [1, mpmath.inf])
        s = c * mpmath.power(p, mpmath.mpf(a * a) / 4)
    return r * s > mpmath.power(p, a * mpmath.log(r, 2) / 4)


@pytest.mark.parametrize("pa,max_m", sorted(ORACLE_SMALL.items()))
def test_exception_sets_small(pa, max_m):
    p, a = pa
    rep = exception_set(p, a, cap=max_m + 40)
    assert rep.status is ExceptionStatus.FINITE_SET
    assert rep.max_m == max_m
    assert len(rep.members) == ORACLE_COUNTS[pa]
    assert rep.complete and rep.downward_closed and not rep.undetermined


@pytest.mark.parametrize("pa,max_m", [((19, 1), 3784), ((5, 2), 16314), ((23, 1), 8), ((3, 4), 116)])
def test_threshold_cofactor_matches(pa, max_m):
    rep = threshold_cofactor(*pa)
    assert rep.max_m == max_m
    # the certified boundary agrees with the mpmath oracle
    p, a = pa
    assert mp_exceptional(p, a, max_m)
    nxt = max_m + 1 if (max_m + 1) % p else max_m + 2
    assert not mp_exceptional(p, a, nxt)


def test_exception_set_19_full():
    rep = exception_set(19, 1, cap=3800)
    assert rep.max_m == 3784 and len(rep.members) == 3585 and rep.complete


def test_lemma6_small_cases():
    assert exception_set(3, 6, cap=20).members == (1, 2, 4)
    assert exception_set(3, 7, cap=20).members == (1,)
    assert LEMMA6_EXCEPTIONS == (729, 1458, 2187, 2916)
    assert sorted([m * 3**6 for m in (1, 2, 4)] + [3**7]) == list(LEMMA6_EXCEPTIONS)


@pytest.mark.parametrize("pa", ORACLE_NONE)
def test_no_exceptions(pa):
    rep = threshold_cofactor(*pa)
    assert rep.status is ExceptionStatus.NO_EXCEPTION and rep.max_m is None


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
def test_wholesale_for_small_primes_a1(p):
    assert is_wholesale(p, 1)
    assert exception_threshold(p, 1) is ExceptionStatus.WHOLESALE


def test_threshold_value_19():
    thr = exception_threshold(19, 1)
    assert Fraction("71902.18") < thr.lo and thr.hi < Fraction("71902.19")


def test_membership_orientation():
    assert membership(19, 1, 3784).outcome is Outcome.REFUTED
    assert membership(19, 1, 3786).ok


def test_blanket_lists():
    assert PAPER_LEMMAS[1].blanket == frozenset({2, 3, 5, 7, 11, 13, 17})
    assert PAPER_LEMMAS[2].blanket == frozenset({2, 3})


@pytest.mark.parametrize("k", range(0, 7))
def test_verify_lemma(k):
    c = verify_lemma(k)
    assert c.claim_id == f"lemma.{k}"
    assert c.ok, c.detail


def test_lemma_certificates_carry_values():
    assert verify_lemma(1).detail["max_m"] == {"23": 8, "19": 3784}
    assert verify_lemma(2).detail["max_m"] == {"7": 6, "5": 16314}
    assert verify_lemma(6).detail["p3_exceptions"] == [729, 1458, 2187, 2916]
    disc = verify_lemma(0).detail["printed_constant_discrepancy"]
    lo, hi = Fraction(disc["computed"]["lo"]), Fraction(disc["computed"]["hi"])
    assert Fraction("8.76707") < lo and hi < Fraction("8.76708")


def test_verify_lemma_index_range():
    with pytest.raises(ValueError):
        verify_lemma(7)


def test_maximize_eps():
    pool = [3, 5, 7, 11, 13, 17, 19, 23]
    full = maximize_eps(pool, bound="1.5315")
    assert full.subset == (3, 5, 7, 11, 13) and full.verdict.ok
    assert Fraction("1.5314") < full.value.lo and full.value.hi <= Fraction("1.5315")
    assert abs(full.value.mid - Fraction("1.5314707863889")) < Fraction(1, 10**12)
    no3 = maximize_eps(pool, exclude=[3], bound="0.9278")
    assert no3.subset == (5, 7, 11, 13) and no3.verdict.ok
    assert abs(no3.value.mid - Fraction("0.9277114115692")) < Fraction(1, 10**12)


def test_r16_threshold():
    assert check_r16(16).ok
    assert check_r16(15).outcome is Outcome.REFUTED
    assert check_r16_direct(17).ok
    assert check_r16_direct(15).outcome is Outcome.REFUTED


def test_r68_threshold():
    assert check_r68(68).ok and check_r68(69).ok
    assert check_r68(67).outcome is Outcome.REFUTED
    assert check_r68(66).outcome is Outcome.REFUTED


def test_final_inequality():
    for r in (6, 7, 50, 1000):
        assert check_final(r).ok


def test_section4_certificates():
    certs = {c.claim_id: c for c in section4_checks()}
    assert set(certs) == {"section4.r16", "section4.r68", "section4.primes", "section4.final"}
    assert all(c.ok for c in certs.values())
    assert certs["section4.r68"].detail["threshold"] == 68
    assert certs["section4.final"].detail["R0"] == 6
