import json
from fractions import Fraction

import mpmath
import pytest
import sympy

from sgcert.certified import Outcome
from sgcert.corollary import (
    IncompleteCoverageError,
    ManifestError,
    SweepRange,
    check_r,
    dump_manifest,
    load_manifest,
    required_ranges,
    sweep,
    verify_corollary1,
)
from sgcert.sgbound import s_polynomial

MP_DPS = 40

DEFAULT_KEYS = {(23, 1): 8, (19, 1): 3784, (7, 2): 6, (5, 2): 16314, (5, 3): 2,
                (3, 4): 116, (3, 5): 11, (3, 6): 4, (3, 7): 1}


def mp_ratio(r):
    """Oracle f(r)/B(r) via sympy factorization and mpmath (all exponents <= 5 here)."""
    fac = sympy.factorint(r)
    f = mpmath.mpf(r) ** (len(fac) - 1)
    for p, a in fac.items():
        f *= s_polynomial(p, a)
    B = mpmath.mpf(73722) / 10000 * mpmath.power(r, mpmath.log(r, 2) / 4 + mpmath.mpf(15315) / 10000)
    return f / B


def test_default_manifest():
    ranges = load_manifest()
    assert {(rg.p, rg.a): rg.m_max for rg in ranges} == DEFAULT_KEYS
    assert all(rg.coprime for rg in ranges)
    assert sum(rg.expected_count for rg in ranges) == 16743


def test_manifest_round_trip(tmp_path):
    ranges = load_manifest()
    path = tmp_path / "m.json"
    path.write_text(dump_manifest(ranges))
    assert load_manifest(path) == ranges


@pytest.mark.parametrize("text,msg", [
    ("{", "line 1"),
    ('{"ranges": []}', "non-empty"),
    ('{"ranges": [{"p": 5}]}', "ranges[0]"),
    ('{"ranges": [{"p": 5, "a": 0, "m_max": 3}]}', "invalid"),
])
def test_manifest_errors(tmp_path, text, msg):
    path = tmp_path / "bad.json"
    path.write_text(text)
    with pytest.raises(ManifestError, match=msg.replace("[", r"\[").replace("]", r"\]")):
        load_manifest(path)


def test_sweep_range_values():
    rg = SweepRange(5, 2, 12)
    assert rg.cofactors() == [1, 2, 3, 4, 6, 7, 8, 9, 11, 12]
    assert rg.values()[:3] == [25, 50, 75]
    assert rg.expected_count == 10
    assert len(SweepRange(5, 2, 12, coprime=False).values()) == 12


@pytest.mark.parametrize("r", [23 * 8, 19 * 3784, 5**2 * 16314, 3**4 * 116, 43890, 3**7])
def test_check_r_against_oracle(r):
    v, ratio = check_r(r)
    assert v.ok
    if all(a <= 5 for a in sympy.factorint(r).values()):
        want = mp_ratio(r)
        assert mpmath.mpf(ratio.lo.numerator) / ratio.lo.denominator <= want
        assert want <= mpmath.mpf(ratio.hi.numerator) / ratio.hi.denominator


def test_default_sweep():
    c = sweep(load_manifest())
    assert c.ok
    d = c.detail
    assert d["count"] == d["expected_count"] == 16743
    assert d["refuted_count"] == 0 and d["undetermined_count"] == 0
    assert d["argmax_r"] == 43890
    lo, hi = Fraction(d["max_ratio"]["lo"]), Fraction(d["max_ratio"]["hi"])
    assert Fraction("0.138818") < lo <= hi < Fraction("0.138819")


def test_non_coprime_superset():
    ranges = [SweepRange(r.p, r.a, r.m_max, False, r.source) for r in load_manifest()]
    c = sweep(ranges)
    assert c.ok and c.detail["count"] == 20246


def test_lowered_constant_gives_counterexample():
    c = sweep(load_manifest(), const=1)
    assert c.outcome is Outcome.REFUTED
    assert c.detail["counterexamples"] == [43890]


def test_parallel_sweep_matches_serial():
    ranges = [SweepRange(19, 1, 3784), SweepRange(3, 4, 116)]
    a = sweep(ranges).to_dict()
    b = sweep(ranges, jobs=2).to_dict()
    a.pop("elapsed_ms"), b.pop("elapsed_ms")
    assert a == b


def test_required_ranges_match_manifest():
    req = {(rg.p, rg.a): rg.m_max for rg in required_ranges()}
    assert req == DEFAULT_KEYS


def test_corollary_composition():
    c = verify_corollary1()
    assert c.ok
    assert c.detail["unclassified_blanket"] == []
    assert len(c.detail["residual_classes"]) == 3


def test_missing_range_names_interval():
    ranges = [rg for rg in load_manifest() if (rg.p, rg.a) != (5, 2)] + [SweepRange(5, 2, 100)]
    with pytest.raises(IncompleteCoverageError, match=r"p=5, a=2: cofactors m in \(100, 16314\]"):
        verify_corollary1(ranges)


def test_sweep_requires_ranges():
    with pytest.raises(ValueError):
        sweep([])


def test_certificate_json_is_stable():
    ranges = [SweepRange(23, 1, 8)]
    a, b = sweep(ranges).to_dict(), sweep(ranges).to_dict()
    a.pop("elapsed_ms"), b.pop("elapsed_ms")
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)
