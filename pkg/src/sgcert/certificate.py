"""Certificate records shared by the verification suites and the CLI."""

from __future__ import annotations

import json
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable

from .certified import CertReal, Outcome, Verdict, decimal_string

SEVERITY = {Outcome.VERIFIED: 0, Outcome.REFUTED: 1, Outcome.UNDETERMINED: 2}


def interval_payload(x: CertReal | Fraction | int, digits: int = 12) -> dict:
    """Serializable form of an enclosure: directed decimal strings plus the exact endpoints."""
    if not isinstance(x, CertReal):
        x = CertReal.point(x)
    return {
        "lo": decimal_string(x.lo, digits, "down"),
        "hi": decimal_string(x.hi, digits, "up"),
        "rounding": "lo down, hi up",
        "lo_exact": str(x.lo),
        "hi_exact": str(x.hi),
    }


def payload_interval(d: dict) -> CertReal:
    return CertReal(Fraction(d["lo_exact"]), Fraction(d["hi_exact"]))


def _jsonable(x: Any) -> Any:
    if isinstance(x, CertReal):
        return interval_payload(x)
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, Outcome):
        return x.value
    if isinstance(x, Verdict):
        return verdict_payload(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = sorted(x) if isinstance(x, (set, frozenset)) else x
        return [_jsonable(v) for v in items]
    return x


def verdict_payload(v: Verdict) -> dict:
    out: dict = {"outcome": v.outcome.value, "prec_used": v.prec_used}
    if v.witness:
        w = dict(v.witness)
        for side in ("lhs", "rhs"):
            if side in w:
                lo, hi = w[side]
                w[side] = interval_payload(CertReal(lo, hi))
        out["witness"] = _jsonable(w)
    return out


@dataclass
class Certificate:
    claim_id: str
    outcome: Outcome
    detail: dict = field(default_factory=dict)
    prec_used: int = 0
    elapsed_ms: int = 0

    def __post_init__(self):
        self.outcome = Outcome(self.outcome)
        if self.outcome is Outcome.EQUAL:
            self.outcome = Outcome.VERIFIED
        self.detail = _jsonable(self.detail)

    @property
    def ok(self) -> bool:
        return self.outcome is Outcome.VERIFIED

    @property
    def severity(self) -> int:
        return SEVERITY[self.outcome]

    def to_dict(self) -> dict:
        return {
            "claim_id": self.claim_id,
            "outcome": self.outcome.value,
            "prec_used": self.prec_used,
            "elapsed_ms": self.elapsed_ms,
            "detail": self.detail,
        }

    @classmethod
    def from_dict(cls, d: dict) -> Certificate:
        return cls(d["claim_id"], Outcome(d["outcome"]), d["detail"], d["prec_used"], d["elapsed_ms"])

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def combine(verdicts: Iterable[Verdict | Certificate]) -> Outcome:
    """Worst outcome of a collection: any Undetermined, else any Refuted, else Verified."""
    worst = Outcome.VERIFIED
    for v in verdicts:
        o = Outcome.VERIFIED if v.outcome is Outcome.EQUAL else v.outcome
        if SEVERITY[o] > SEVERITY[worst]:
            worst = o
    return worst


def max_prec(verdicts: Iterable[Verdict | Certificate]) -> int:
    return max((v.prec_used for v in verdicts), default=0)


@contextmanager
def stopwatch():
    """Yields a one-element list that receives elapsed milliseconds on exit."""
    box = [0]
    t0 = time.perf_counter()
    try:
        yield box
    finally:
        box[0] = int((time.perf_counter() - t0) * 1000)


def exit_code(certs: Iterable[Certificate]) -> int:
    return max((c.severity for c in certs), default=0)
