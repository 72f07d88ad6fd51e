"""Sweep of the composite bound over the lemmas' exceptional ranges.

For every ``r = m * p**a`` in a sweep range the bound
``f(r) = r**(l-1) * prod S(p_i, a_i)`` is certified against
``B(r) = 7.3722 * r**(log2(r)/4 + 1.5315)``.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction
from importlib import resources
from math import gcd
from pathlib import Path

from .arith import factor_pairs
from .certificate import Certificate, stopwatch
from .certified import DEFAULT_PREC, DEFAULT_PREC_CAP, CertReal, Outcome, Verdict, certify_le
from .lemmas import PAPER_LEMMAS, ExceptionStatus, threshold_cofactor
from .sgbound import BOUND_CONSTANT, EPSILON, EXPONENT_NOTE, Factorization, bound_B, bound_B_expr, f_expr, f_of_r

RESIDUAL_CLASSES = (
    "p in {5, 7, 11, 13, 17} and a = 1",
    "p = 3 and a <= 3",
    "p = 2",
)


class ManifestError(ValueError):
    pass


class IncompleteCoverageError(ValueError):
    """A required exceptional range is not covered by the sweep manifest."""


def factorize(n: int) -> Factorization:
    return Factorization(factor_pairs(n))


@dataclass(frozen=True)
class SweepRange:
    p: int
    a: int
    m_max: int
    coprime: bool = True
    source: str = ""

    def __post_init__(self):
        if self.p < 2 or self.a < 1 or self.m_max < 1:
            raise ManifestError(f"invalid sweep range {self}")

    def cofactors(self) -> list[int]:
        return [m for m in range(1, self.m_max + 1) if not self.coprime or gcd(m, self.p) == 1]

    def values(self) -> list[int]:
        q = self.p**self.a
        return [m * q for m in self.cofactors()]

    @property
    def expected_count(self) -> int:
        return self.m_max - self.m_max // self.p if self.coprime else self.m_max


def _range_from_dict(d: dict, where: str) -> SweepRange:
    try:
        return SweepRange(int(d["p"]), int(d["a"]), int(d["m_max"]), bool(d.get("coprime", True)),
                          str(d.get("source", "")))
    except (KeyError, TypeError, ValueError) as exc:
        raise ManifestError(f"{where}: {exc}") from None


def load_manifest(path: str | Path | None = None) -> list[SweepRange]:
    """Read sweep ranges from a JSON manifest (the packaged default when ``path`` is None)."""
    if path is None:
        text = resources.files("sgcert.data").joinpath("corollary_ranges.json").read_text()
        where = "default manifest"
    else:
        text = Path(path).read_text()
        where = str(path)
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ManifestError(f"{where}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict) or not isinstance(doc.get("ranges"), list) or not doc["ranges"]:
        raise ManifestError(f"{where}: expected an object with a non-empty 'ranges' list")
    return [_range_from_dict(d, f"{where}: ranges[{i}]") for i, d in enumerate(doc["ranges"])]


def dump_manifest(ranges: list[SweepRange]) -> str:
    return json.dumps({"ranges": [asdict(r) for r in ranges]}, indent=2)


def check_r(r: int, prec_cap: int = DEFAULT_PREC_CAP, const=BOUND_CONSTANT, eps=EPSILON) -> tuple[Verdict, CertReal]:
    """Certify ``f(r) <= B(r)``; also returns an enclosure of ``f(r)/B(r)``."""
    fact = factorize(r)
    f = f_of_r(fact)
    b = bound_B(r, DEFAULT_PREC, const, eps)
    ratio = CertReal.lift(f) / b
    f_hi = f if isinstance(f, int) else f.hi
    if f_hi < b.lo:
        return Verdict(Outcome.VERIFIED, DEFAULT_PREC), ratio
    return certify_le(f_expr(fact), bound_B_expr(r, const, eps), prec_cap), ratio


def _sweep_chunk(values: list[int], prec_cap: int, const, eps) -> dict:
    out = {"count": 0, "refuted": [], "undetermined": [], "best": None, "ratio_lo": None, "prec": DEFAULT_PREC}
    for r in values:
        v, ratio = check_r(r, prec_cap, const, eps)
        out["count"] += 1
        out["prec"] = max(out["prec"], v.prec_used)
        if v.outcome is Outcome.REFUTED:
            out["refuted"].append(r)
        elif v.outcome is Outcome.UNDETERMINED:
            out["undetermined"].append({"r": r, "prec": v.prec_used})
        if out["best"] is None or ratio.hi > out["best"][1].hi:
            out["best"] = (r, ratio)
        if out["ratio_lo"] is None or ratio.lo > out["ratio_lo"]:
            out["ratio_lo"] = ratio.lo
    return out


def _merge(parts: list[dict]) -> dict:
    out = {"count": 0, "refuted": [], "undetermined": [], "best": None, "ratio_lo": None, "prec": DEFAULT_PREC}
    for part in parts:
        out["count"] += part["count"]
        out["refuted"] += part["refuted"]
        out["undetermined"] += part["undetermined"]
        out["prec"] = max(out["prec"], part["prec"])
        if part["best"] and (out["best"] is None or part["best"][1].hi > out["best"][1].hi):
            out["best"] = part["best"]
        if part["ratio_lo"] is not None and (out["ratio_lo"] is None or part["ratio_lo"] > out["ratio_lo"]):
            out["ratio_lo"] = part["ratio_lo"]
    return out


def sweep(
    ranges: list[SweepRange],
    prec_cap: int = DEFAULT_PREC_CAP,
    const: Fraction | str = BOUND_CONSTANT,
    eps: Fraction | str = EPSILON,
    jobs: int = 1,
) -> Certificate:
    """Certify ``f(r) <= B(r)`` for every r generated by the ranges."""
    if not ranges:
        raise ValueError("no sweep ranges given")
    const, eps = Fraction(const), Fraction(eps)
    with stopwatch() as ms:
        values = [r for rg in ranges for r in rg.values()]
        if jobs > 1 and len(values) > 1000:
            size = -(-len(values) // (4 * jobs))
            chunks = [values[i : i + size] for i in range(0, len(values), size)]
            with ProcessPoolExecutor(jobs) as pool:
                parts = list(pool.map(_sweep_chunk, chunks, [prec_cap] * len(chunks),
                                      [const] * len(chunks), [eps] * len(chunks)))
        else:
            parts = [_sweep_chunk(values, prec_cap, const, eps)]
        agg = _merge(parts)
    expected = sum(rg.expected_count for rg in ranges)
    argmax, ratio = agg["best"]
    detail = {
        "count": agg["count"],
        "expected_count": expected,
        "ranges": [{"p": rg.p, "a": rg.a, "m_max": rg.m_max, "coprime": rg.coprime,
                    "count": len(rg.cofactors()), "source": rg.source} for rg in ranges],
        "bound": {"constant": const, "epsilon": eps},
        # max_r f/B lies between the largest lower and the largest upper endpoint
        "max_ratio": CertReal(agg["ratio_lo"], ratio.hi),
        "argmax_r": argmax,
        "argmax_factorization": str(factorize(argmax)),
        "refuted_count": len(agg["refuted"]),
        "undetermined_count": len(agg["undetermined"]),
        "notes": [EXPONENT_NOTE],
    }
    if agg["refuted"]:
        detail["counterexamples"] = agg["refuted"][:20]
    if agg["undetermined"]:
        detail["undetermined"] = agg["undetermined"][:20]
    if agg["undetermined"]:
        outcome = Outcome.UNDETERMINED
    elif agg["refuted"]:
        outcome = Outcome.REFUTED
    else:
        outcome = Outcome.VERIFIED
    return Certificate("corollary.sweep", outcome, detail, agg["prec"], ms[0])


def required_ranges(prec_cap: int = DEFAULT_PREC_CAP) -> list[SweepRange]:
    """Exceptional ranges outside the residual classes, recomputed from the thresholds."""
    out = []
    for idx, st in sorted(PAPER_LEMMAS.items()):
        for p in sorted(st.ranges, reverse=True):
            rep = threshold_cofactor(p, st.a, prec_cap)
            if rep.status is ExceptionStatus.FINITE_SET:
                out.append(SweepRange(p, st.a, rep.max_m, True, f"lemma {idx}"))
    a = 6
    while True:
        rep = threshold_cofactor(3, a, prec_cap)
        if rep.status is not ExceptionStatus.FINITE_SET:
            break
        out.append(SweepRange(3, a, rep.max_m, True, "lemma 6"))
        a += 1
    return out


def check_coverage(ranges: list[SweepRange], required: list[SweepRange]) -> None:
    for need in required:
        have = max((rg.m_max for rg in ranges if (rg.p, rg.a) == (need.p, need.a)), default=0)
        if have < need.m_max:
            raise IncompleteCoverageError(
                f"p={need.p}, a={need.a}: cofactors m in ({have}, {need.m_max}] are not swept ({need.source})"
            )


def _in_residual_class(p: int, a: int) -> bool:
    return (p in (5, 7, 11, 13, 17) and a == 1) or (p == 3 and a <= 3) or p == 2


def verify_corollary1(
    ranges: list[SweepRange] | None = None,
    prec_cap: int = DEFAULT_PREC_CAP,
    const: Fraction | str = BOUND_CONSTANT,
    eps: Fraction | str = EPSILON,
    jobs: int = 1,
) -> Certificate:
    """Compose the lemma exception data with the sweep.

    Raises :class:`IncompleteCoverageError` when a required range is missing
    from ``ranges``.
    """
    if ranges is None:
        ranges = load_manifest()
    with stopwatch() as ms:
        required = required_ranges(prec_cap)
        check_coverage(ranges, required)
        blanket = sorted({(p, st.a) for st in PAPER_LEMMAS.values() for p in st.blanket} | {(2, 6)})
        unclassified = [pa for pa in blanket if not _in_residual_class(*pa)]
        swept = sweep(ranges, prec_cap, const, eps, jobs)
    detail = {
        "required_ranges": [{"p": rg.p, "a": rg.a, "m_max": rg.m_max, "source": rg.source} for rg in required],
        "residual_classes": list(RESIDUAL_CLASSES),
        "blanket_exceptions": [list(pa) for pa in blanket],
        "unclassified_blanket": [list(pa) for pa in unclassified],
        "sweep": swept.detail,
    }
    outcome = swept.outcome
    if unclassified and outcome is Outcome.VERIFIED:
        outcome = Outcome.REFUTED
    return Certificate("corollary.1", outcome, detail, swept.prec_used, ms[0])
