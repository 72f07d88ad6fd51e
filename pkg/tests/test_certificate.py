from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from sgcert.certificate import Certificate, combine, exit_code, interval_payload, payload_interval
from sgcert.certified import CertReal, Outcome, Verdict


@given(st.fractions(), st.fractions(min_value=0))
def test_interval_payload_round_trips(lo, w):
    x = CertReal(lo, lo + w)
    d = interval_payload(x)
    assert payload_interval(d) == x
    assert d["rounding"] == "lo down, hi up"
    assert Fraction(d["lo"]) <= x.lo and x.hi <= Fraction(d["hi"])


def test_certificate_json_round_trip():
    c = Certificate("x.1", Outcome.VERIFIED, {"v": CertReal(Fraction(1, 3), Fraction(1, 2)), "n": 3}, 64, 5)
    back = Certificate.from_dict(__import__("json").loads(c.to_json()))
    assert back == c


def test_equal_maps_to_verified():
    assert Certificate("x", Outcome.EQUAL).outcome is Outcome.VERIFIED


def test_severity_and_exit_codes():
    ok = Certificate("a", Outcome.VERIFIED)
    bad = Certificate("b", Outcome.REFUTED)
    unk = Certificate("c", Outcome.UNDETERMINED)
    assert exit_code([ok]) == 0
    assert exit_code([ok, bad]) == 1
    assert exit_code([bad, unk, ok]) == 2
    assert exit_code([]) == 0


def test_combine_verdicts():
    v = [Verdict(Outcome.VERIFIED, 64), Verdict(Outcome.EQUAL, 0)]
    assert combine(v) is Outcome.VERIFIED
    assert combine(v + [Verdict(Outcome.REFUTED, 64)]) is Outcome.REFUTED
