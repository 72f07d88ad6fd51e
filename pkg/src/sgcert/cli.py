"""Command-line front end.

Exit codes: 0 all Verified, 1 any Refuted, 2 any Undetermined, 3 usage or IO error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .certificate import Certificate, exit_code, stopwatch
from .certified import DEFAULT_PREC_CAP, Outcome
from .corollary import IncompleteCoverageError, ManifestError, load_manifest, verify_corollary1
from .groups import (
    ENUMERATION_CAP,
    GroupError,
    check_suite,
    check_theorem,
    enumerate_subgroups,
    make_group,
)
from .lemmas import section4_checks, verify_lemma
from .sgbound import constants_certificate

USAGE_ERROR = 3
LEMMA_INDICES = range(0, 7)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(USAGE_ERROR)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--precision-cap", type=int, default=DEFAULT_PREC_CAP, metavar="BITS",
                        help="largest working precision before giving up (default %(default)s)")
    common.add_argument("--jobs", type=int, default=1, metavar="N", help="worker processes")
    common.add_argument("--output", choices=("json", "table"), default="table")
    common.add_argument("--cap", type=int, default=ENUMERATION_CAP, metavar="N",
                        help="subgroup enumeration cap")
    common.add_argument("--manifest", metavar="PATH", help="sweep manifest (JSON)")

    parser = _Parser(prog="sgcert", description="Certify the subgroup-count bound and its lemmas.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("constants", parents=[common], help="C(p), c(p) and series constants")
    lem = sub.add_parser("lemma", parents=[common], help="one lemma's exceptional ranges")
    lem.add_argument("--index", type=int, required=True, choices=LEMMA_INDICES, metavar="K")
    sub.add_parser("corollary", parents=[common], help="sweep the exceptional ranges")
    sub.add_parser("section4", parents=[common], help="scalar threshold checks")
    grp = sub.add_parser("group", parents=[common], help="enumerate subgroups of one group")
    grp.add_argument("--kind", required=True,
                     choices=("cyclic", "dihedral", "dicyclic", "elementary_abelian", "symmetric",
                              "alternating", "quaternion8", "direct_product", "from_file"))
    grp.add_argument("--n", type=int, help="order (cyclic, dihedral, dicyclic) or degree (symmetric, alternating)")
    grp.add_argument("--p", type=int, help="prime for elementary_abelian")
    grp.add_argument("--k", type=int, help="rank for elementary_abelian")
    grp.add_argument("--file", help="Cayley-table file for from_file")
    grp.add_argument("--factors", nargs="+", metavar="KIND:ARGS",
                     help="direct_product factors, e.g. cyclic:4 elementary_abelian:2,3")
    grp.add_argument("--check-theorem", action="store_true", help="certify the count against the bounds")
    all_ = sub.add_parser("all", parents=[common], help="everything, with the group suite up to order 128")
    all_.add_argument("--max-order", type=int, default=128, help="largest group in the suite")
    return parser


# ---------------------------------------------------------------------------
# jobs
# ---------------------------------------------------------------------------


def _need(value, flag: str, kind: str):
    if value is None:
        raise UsageError(f"--kind {kind} needs {flag}")
    return value


def _factor(spec: str):
    kind, _, args = spec.partition(":")
    nums = [int(v) for v in args.split(",") if v] if args else []
    return make_group(kind, *nums)


def group_from_args(ns):
    kind = ns.kind
    if kind in ("cyclic", "dihedral", "dicyclic", "symmetric", "alternating"):
        return make_group(kind, _need(ns.n, "--n", kind))
    if kind == "elementary_abelian":
        return make_group(kind, _need(ns.p, "--p", kind), _need(ns.k, "--k", kind))
    if kind == "quaternion8":
        return make_group(kind)
    if kind == "from_file":
        return make_group(kind, _need(ns.file, "--file", kind))
    factors = _need(ns.factors, "--factors", kind)
    if len(factors) < 2:
        raise UsageError("direct_product needs at least two factors")
    try:
        parts = [_factor(f) for f in factors]
    except ValueError as exc:
        raise UsageError(f"bad factor: {exc}") from None
    g = parts[0]
    for h in parts[1:]:
        g = make_group("direct_product", g, h)
    return g


def group_certificate(g, cap: int, theorem: bool, prec_cap: int) -> Certificate:
    with stopwatch() as ms:
        if theorem:
            chk = check_theorem(g, cap, prec_cap)
        else:
            subs = enumerate_subgroups(g, cap)
    if theorem:
        return chk.certificate(ms[0])
    valid = all(s.verify(g) for s in subs)
    by_order: dict[int, int] = {}
    for s in subs:
        by_order[s.order] = by_order.get(s.order, 0) + 1
    detail = {
        "group": g.name,
        "order": g.order,
        "abelian": g.is_abelian,
        "subgroups": len(subs),
        "complete": subs.complete,
        "by_order": {str(k): v for k, v in sorted(by_order.items())},
        "associativity": g.metadata.get("associativity"),
    }
    if not subs.complete:
        outcome = Outcome.UNDETERMINED
    else:
        outcome = Outcome.VERIFIED if valid else Outcome.REFUTED
    return Certificate(f"group.{g.name}", outcome, detail, 0, ms[0])


def _run_task(task: tuple) -> list[Certificate]:
    name, args = task[0], task[1:]
    if name == "constants":
        return [constants_certificate(*args)]
    if name == "lemma":
        return [verify_lemma(*args)]
    if name == "corollary":
        ranges, prec_cap, jobs = args
        return [verify_corollary1(ranges, prec_cap, jobs=jobs)]
    if name == "section4":
        return section4_checks(*args)
    if name == "groups":
        return check_suite(*args)
    raise ValueError(name)


def tasks_for(ns) -> list[tuple]:
    cap = ns.precision_cap
    if ns.command == "constants":
        return [("constants", cap)]
    if ns.command == "lemma":
        return [("lemma", ns.index, cap)]
    if ns.command == "section4":
        return [("section4", cap)]
    ranges = load_manifest(ns.manifest)
    if ns.command == "corollary":
        return [("corollary", ranges, cap, ns.jobs)]
    # all
    return (
        [("constants", cap), ("section4", cap), ("corollary", ranges, cap, 1), ("groups", ns.max_order, cap)]
        + [("lemma", k, cap) for k in LEMMA_INDICES]
    )


def run_tasks(tasks: list[tuple], jobs: int) -> list[Certificate]:
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(jobs) as pool:
            results = list(pool.map(_run_task, tasks))
    else:
        results = [_run_task(t) for t in tasks]
    certs = [c for batch in results for c in batch]
    return sorted(certs, key=lambda c: c.claim_id)


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------


def _interval(d) -> str:
    if isinstance(d, dict) and "lo" in d:
        return f"[{d['lo']}, {d['hi']}]"
    return str(d)


def _summary(cert: Certificate) -> list[str]:
    d = cert.detail
    cid = cert.claim_id
    if cid == "constants":
        lines = [f"{k} in {_interval(v)}" for k, v in d["enclosures"].items()]
        return lines + [f"{k}: {v}" for k, v in d["checks"].items()]
    if cid.startswith("lemma."):
        lines = []
        for p, rep in (d.get("reports") or {}).items():
            extra = f", max m = {rep['max_m']}" if rep.get("max_m") is not None else ""
            lines.append(f"p={rep['p']} a={rep['a']}: {rep['status']}{extra}")
        for k, v in d.items():
            if k != "reports" and not isinstance(v, (dict, list)):
                lines.append(f"{k}: {v}")
        return lines
    if cid.startswith("corollary"):
        s = d.get("sweep", d)
        return [
            f"r values checked: {s['count']}",
            f"max f(r)/B(r) in {_interval(s['max_ratio'])} at r = {s['argmax_r']} = {s['argmax_factorization']}",
            f"refuted: {s['refuted_count']}, undetermined: {s['undetermined_count']}",
        ] + ([f"counterexamples: {s['counterexamples']}"] if "counterexamples" in s else [])
    if cid.startswith("group."):
        lines = [f"order {d['order']}: {d['subgroups']} subgroups"]
        if "verdicts" in d:
            lines += [
                f"<= f(r) = {_interval(d['f_bound'])}: {d['verdicts']['f']}",
                f"<= r^floor(log2 r) = {d['trivial_bound']}: {d['verdicts']['trivial']}",
                f"<= B(r) in {_interval(d['B'])}: {d['verdicts']['B']}",
            ]
            lines += [f"Sylow {s['p']}: {s['count']} of order {s['order']} (<= {s['index_bound']})" for s in d["sylow"]]
        else:
            lines.append(f"by order: {d['by_order']}")
        return lines
    checks = d.get("checks")
    if isinstance(checks, dict):
        return [f"{k}: {v if not isinstance(v, dict) else v.get('outcome', v)}" for k, v in checks.items()]
    return []


def render_table(certs: list[Certificate]) -> str:
    width = max((len(c.claim_id) for c in certs), default=10)
    out = []
    for c in certs:
        out.append(f"{c.claim_id:<{width}}  {c.outcome.value:<12}  prec {c.prec_used:>4}  {c.elapsed_ms:>6} ms")
        out.extend(f"    {line}" for line in _summary(c))
    return "\n".join(out)


def render_json(certs: list[Certificate]) -> str:
    return "\n".join(c.to_json() for c in certs)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        if ns.precision_cap < 64 or ns.jobs < 1 or ns.cap < 1:
            raise UsageError("--precision-cap must be >= 64, --jobs and --cap >= 1")
        if ns.command == "group":
            certs = [group_certificate(group_from_args(ns), ns.cap, ns.check_theorem, ns.precision_cap)]
        else:
            certs = run_tasks(tasks_for(ns), ns.jobs)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"sgcert: error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (OSError, ManifestError, IncompleteCoverageError, GroupError) as exc:
        print(f"sgcert: error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    print(render_json(certs) if ns.output == "json" else render_table(certs))
    return exit_code(certs)


if __name__ == "__main__":
    sys.exit(main())
