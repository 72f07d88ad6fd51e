"""Small finite groups as Cayley tables, with brute-force subgroup enumeration.

Elements are the indices ``0..n-1``; ``table[i, j]`` is the index of the
product ``x_i * x_j``.  Subgroups are sorted tuples of element indices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd
from pathlib import Path

import numpy as np

from .arith import divisor_count, factor_pairs, is_prime
from .certificate import Certificate, combine, max_prec, stopwatch
from .certified import DEFAULT_PREC_CAP, CertReal, Const, Outcome, Verdict, certify_le
from .sgbound import BOUND_CONSTANT, bound_B, bound_B_expr, f_expr, f_of_r, subgroup_sum, trivial_bound

CONSTRUCTION_CAP = 5000
ENUMERATION_CAP = 10**6
EXHAUSTIVE_ASSOC_LIMIT = 128
ASSOC_SAMPLES = 10**4


class GroupError(ValueError):
    """Invalid group parameters or a table that is not a group."""


class GroupFileError(GroupError):
    def __init__(self, path, line: int, msg: str, column: int | None = None):
        where = f"{path}:{line}" + (f":{column}" if column is not None else "")
        super().__init__(f"{where}: {msg}")
        self.line = line
        self.column = column


class EnumerationRefused(GroupError):
    """The subgroup count provably exceeds the enumeration limit."""


# ---------------------------------------------------------------------------
# the table
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class GroupTable:
    """A validated Cayley table.  Immutable after construction."""

    table: np.ndarray
    name: str = ""
    metadata: dict = field(default_factory=dict)
    identity: int = field(init=False)
    inverse: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        t = np.array(self.table, dtype=np.int64)
        if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
            raise GroupError("table must be a non-empty square array")
        n = t.shape[0]
        if t.min() < 0 or t.max() >= n:
            raise GroupError(f"table entries must lie in 0..{n - 1}")
        ar = np.arange(n)
        # every row and column a permutation (cancellation)
        if not (np.sort(t, axis=1) == ar).all() or not (np.sort(t, axis=0) == ar[:, None]).all():
            raise GroupError("table is not a Latin square")
        ids = [e for e in range(n) if (t[e] == ar).all() and (t[:, e] == ar).all()]
        if not ids:
            raise GroupError("no two-sided identity")
        e = ids[0]
        meta = dict(self.metadata)
        if n <= EXHAUSTIVE_ASSOC_LIMIT:
            # (xy)z == x(yz) for all triples
            left = t[t[:, :, None], ar[None, None, :]]
            right = t[ar[:, None, None], t[None, :, :]]
            bad = np.argwhere(left != right)
            meta["associativity"] = f"exhaustive ({n**3} triples)"
        else:
            rng = np.random.default_rng(0)
            x, y, z = rng.integers(0, n, size=(3, ASSOC_SAMPLES))
            mask = t[t[x, y], z] != t[x, t[y, z]]
            bad = np.stack([x[mask], y[mask], z[mask]], axis=1)
            meta["associativity"] = f"sampled ({ASSOC_SAMPLES} random triples, seed 0)"
        if len(bad):
            x, y, z = (int(v) for v in bad[0])
            raise GroupError(f"not associative: ({x}*{y})*{z} != {x}*({y}*{z})")
        inv = np.argmax(t == e, axis=1)
        t.setflags(write=False)
        inv.setflags(write=False)
        object.__setattr__(self, "table", t)
        object.__setattr__(self, "identity", e)
        object.__setattr__(self, "inverse", inv)
        object.__setattr__(self, "metadata", meta)

    @property
    def order(self) -> int:
        return self.table.shape[0]

    def mul(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    @property
    def is_abelian(self) -> bool:
        return bool((self.table == self.table.T).all())

    def element_order(self, x: int) -> int:
        k, y = 1, x
        while y != self.identity:
            y = int(self.table[y, x])
            k += 1
        return k

    def element_orders(self) -> list[int]:
        return [self.element_order(x) for x in range(self.order)]

    @property
    def exponent(self) -> int:
        out = 1
        for k in set(self.element_orders()):
            out = out * k // gcd(out, k)
        return out

    def center(self) -> list[int]:
        t = self.table
        return [x for x in range(self.order) if (t[x] == t[:, x]).all()]

    def cyclic_subgroup(self, x: int) -> tuple[int, ...]:
        out, y = [self.identity], x
        while y != self.identity:
            out.append(y)
            y = int(self.table[y, x])
        return tuple(sorted(out))

    def __repr__(self) -> str:
        return f"GroupTable({self.name or '?'}, order={self.order})"


# ---------------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------------


def _check_order(n: int, cap: int) -> None:
    if n > cap:
        raise GroupError(f"order {n} exceeds the construction cap {cap}")


def cyclic(n: int, cap: int = CONSTRUCTION_CAP) -> GroupTable:
    if n < 1:
        raise GroupError("cyclic group needs n >= 1")
    _check_order(n, cap)
    ar = np.arange(n)
    return GroupTable((ar[:, None] + ar[None, :]) % n, f"C{n}")


def dihedral(n: int, cap: int = CONSTRUCTION_CAP) -> GroupTable:
    """Dihedral group of order ``n`` (``n`` even); index ``e*m + i`` is ``s**e r**i``."""
    if n < 2 or n % 2:
        raise GroupError("dihedral group needs an even order n >= 2")
    _check_order(n, cap)
    m = n // 2
    i, e = np.arange(n) % m, np.arange(n) // m
    # (s^e r^i)(s^f r^j) = s^(e+f) r^((-1)^f i + j)
    sign = np.where(e == 1, -1, 1)
    ii = (sign[None, :] * i[:, None] + i[None, :]) % m
    ee = (e[:, None] + e[None, :]) % 2
    return GroupTable(ee * m + ii, f"D{n}")


def dicyclic(n: int, cap: int = CONSTRUCTION_CAP) -> GroupTable:
    """Dicyclic group of order ``n = 4m``: ``<a, x | a^(2m), x^2 = a^m, x a x^-1 = a^-1>``."""
    if n < 8 or n % 4:
        raise GroupError("dicyclic group needs an order n = 4m >= 8")
    _check_order(n, cap)
    h, m = n // 2, n // 4
    i, e = np.arange(n) % h, np.arange(n) // h
    # a^i x^e * a^j x^f:  x a^j = a^-j x  and  x^2 = a^m
    sign = np.where(e == 1, -1, 1)
    ii = i[:, None] + sign[:, None] * i[None, :] + m * (e[:, None] & e[None, :])
    ee = (e[:, None] + e[None, :]) % 2
    return GroupTable(ee * h + ii % h, f"Dic{n}")


def quaternion8() -> GroupTable:
    g = dicyclic(8)
    return GroupTable(g.table, "Q8")


def elementary_abelian(p: int, k: int, cap: int = CONSTRUCTION_CAP) -> GroupTable:
    if not is_prime(p) or k < 0:
        raise GroupError("elementary abelian group needs a prime p and k >= 0")
    _check_order(p**k, cap)
    n = p**k
    digits = (np.arange(n)[:, None] // p ** np.arange(k)[None, :]) % p
    s = (digits[:, None, :] + digits[None, :, :]) % p
    return GroupTable((s * p ** np.arange(k)).sum(axis=2), f"{p}^{k}" if k != 1 else f"C{p}")


def _perm_group(perms: list[tuple[int, ...]], name: str) -> GroupTable:
    index = {q: i for i, q in enumerate(perms)}
    # (x * y)(k) = x(y(k)): apply y first
    t = [[index[tuple(x[k] for k in y)] for y in perms] for x in perms]
    return GroupTable(t, name)


def _is_even(q: tuple[int, ...]) -> bool:
    inv = sum(1 for i, j in itertools.combinations(range(len(q)), 2) if q[i] > q[j])
    return inv % 2 == 0


def symmetric(n: int) -> GroupTable:
    if not 1 <= n <= 5:
        raise GroupError("symmetric group supported for 1 <= n <= 5")
    return _perm_group(list(itertools.permutations(range(n))), f"S{n}")


def alternating(n: int) -> GroupTable:
    if not 1 <= n <= 5:
        raise GroupError("alternating group supported for 1 <= n <= 5")
    return _perm_group([q for q in itertools.permutations(range(n)) if _is_even(q)], f"A{n}")


def direct_product(g: GroupTable, h: GroupTable, cap: int = CONSTRUCTION_CAP) -> GroupTable:
    """``(x1, y1)(x2, y2) = (x1 x2, y1 y2)``; pair ``(x, y)`` has index ``x*|h| + y``."""
    m = h.order
    _check_order(g.order * m, cap)
    t = g.table[:, None, :, None] * m + h.table[None, :, None, :]
    return GroupTable(t.reshape(g.order * m, g.order * m), f"{g.name}x{h.name}")


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------


def dumps_group(g: GroupTable) -> str:
    lines = []
    if g.name:
        lines.append(f"name: {g.name}")
    lines.append(f"order: {g.order}")
    lines.append("table:")
    lines.extend(" ".join(str(int(v)) for v in row) for row in g.table)
    return "\n".join(lines) + "\n"


def loads_group(text: str, path: str = "<string>") -> GroupTable:
    """Parse the ``name:`` / ``order:`` / ``table:`` format; '#' starts a comment."""
    name, order, rows = "", None, None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if rows is not None:
            row = []
            col = raw.index(line[0]) + 1
            for tok in line.split():
                col = raw.index(tok, col - 1) + 1
                try:
                    row.append(int(tok))
                except ValueError:
                    raise GroupFileError(path, lineno, f"expected an integer, got {tok!r}", col) from None
                col += len(tok)
            if len(row) != order:
                raise GroupFileError(path, lineno, f"row has {len(row)} entries, expected {order}")
            if len(rows) == order:
                raise GroupFileError(path, lineno, f"more than {order} table rows")
            rows.append(row)
            continue
        key, sep, value = line.partition(":")
        key, value = key.strip().lower(), value.strip()
        if not sep:
            raise GroupFileError(path, lineno, f"expected 'field: value', got {line!r}")
        if key == "name":
            name = value
        elif key == "order":
            try:
                order = int(value)
            except ValueError:
                raise GroupFileError(path, lineno, f"order must be an integer, got {value!r}") from None
            if order < 1:
                raise GroupFileError(path, lineno, "order must be positive")
        elif key == "table":
            if order is None:
                raise GroupFileError(path, lineno, "'order' must precede 'table'")
            if value:
                raise GroupFileError(path, lineno, "table rows start on the next line")
            rows = []
        else:
            raise GroupFileError(path, lineno, f"unknown field {key!r}")
    if order is None or rows is None:
        raise GroupFileError(path, lineno if text else 0, "missing 'order' or 'table'")
    if len(rows) != order:
        raise GroupFileError(path, lineno, f"table has {len(rows)} rows, expected {order}")
    try:
        return GroupTable(rows, name, {"source": str(path)})
    except GroupError as exc:
        raise GroupError(f"{path}: {exc}") from None


def load_group(path: str | Path) -> GroupTable:
    return loads_group(Path(path).read_text(), str(path))


def save_group(g: GroupTable, path: str | Path) -> None:
    Path(path).write_text(dumps_group(g))


KINDS = ("cyclic", "dihedral", "elementary_abelian", "symmetric", "alternating", "quaternion8",
         "dicyclic", "direct_product", "from_file")


def make_group(kind: str, *args, cap: int = CONSTRUCTION_CAP) -> GroupTable:
    """Dispatch on ``kind``; e.g. ``make_group("elementary_abelian", 2, 3)``."""
    builders = {
        "cyclic": lambda n: cyclic(n, cap),
        "dihedral": lambda n: dihedral(n, cap),
        "dicyclic": lambda n: dicyclic(n, cap),
        "elementary_abelian": lambda p, k: elementary_abelian(p, k, cap),
        "symmetric": symmetric,
        "alternating": alternating,
        "quaternion8": quaternion8,
        "direct_product": lambda g, h: direct_product(g, h, cap),
        "from_file": load_group,
    }
    if kind not in builders:
        raise GroupError(f"unknown group kind {kind!r}; expected one of {', '.join(KINDS)}")
    try:
        g = builders[kind](*args)
    except TypeError as exc:
        raise GroupError(f"bad arguments for {kind}: {exc}") from None
    if g.order > cap:
        raise GroupError(f"order {g.order} exceeds the construction cap {cap}")
    return g


# ---------------------------------------------------------------------------
# subgroups
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class Subgroup:
    elements: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def verify(self, g: GroupTable) -> bool:
        """Identity, closure, inverses and Lagrange."""
        el = np.array(self.elements)
        mask = np.zeros(g.order, bool)
        mask[el] = True
        return bool(
            mask[g.identity]
            and mask[g.table[np.ix_(el, el)]].all()
            and mask[g.inverse[el]].all()
            and g.order % len(el) == 0
        )


class SubgroupList(list):
    """A list of subgroups with a ``complete`` flag (False when a cap cut it short)."""

    def __init__(self, items=(), complete: bool = True):
        super().__init__(items)
        self.complete = complete


def subgroup_lower_bound(g: GroupTable) -> int:
    """Cheap lower bound on the subgroup count.

    In an abelian group the elements of order dividing ``p`` form an
    elementary abelian subgroup of rank ``k``, which alone has
    ``sum_j [k, j]_p`` subgroups.
    """
    if g.order == 1:
        return 1
    orders = g.element_orders()
    best = divisor_count(g.order) if g.is_abelian else 1
    if g.is_abelian:
        for p, _ in factor_pairs(g.order):
            size, rank = sum(1 for k in orders if p % k == 0), 0
            while size > 1:
                size //= p
                rank += 1
            best = max(best, subgroup_sum(rank, p))
    return best


def _closure(g: GroupTable, mask: np.ndarray, gens: list[int]) -> np.ndarray:
    """Smallest subgroup containing the subgroup ``mask`` and ``gens``."""
    t = g.table
    out = mask.copy()
    frontier = np.flatnonzero(out)
    gens = np.array(gens)
    while frontier.size:
        prod = t[np.ix_(frontier, gens)].ravel()
        new = np.unique(prod[~out[prod]])
        out[new] = True
        frontier = new
    return out


def enumerate_subgroups(g: GroupTable, cap: int = ENUMERATION_CAP) -> SubgroupList:
    """All subgroups of ``g`` by cyclic extension, sorted by (order, elements).

    Each known subgroup ``H`` is extended to ``<H, x>`` for one ``x`` per
    right coset ``Hx`` outside ``H``, until no new subgroup appears.  Stops
    with ``complete=False`` once more than ``cap`` subgroups are found.
    Raises :class:`EnumerationRefused` when the count provably exceeds
    ``ENUMERATION_CAP``.
    """
    lb = subgroup_lower_bound(g)
    if lb > ENUMERATION_CAP:
        raise EnumerationRefused(f"{g!r} has at least {lb} subgroups (limit {ENUMERATION_CAP})")
    n, t = g.order, g.table
    trivial = np.zeros(n, bool)
    trivial[g.identity] = True
    seen: dict[bytes, tuple[np.ndarray, list[int]]] = {trivial.tobytes(): (trivial, [])}
    queue = [trivial.tobytes()]
    complete = True
    # generators of the same cyclic subgroup give the same extension
    orders = np.array(g.element_orders())
    cyc_gens: dict[int, np.ndarray] = {}
    for x in range(n):
        c = np.array(g.cyclic_subgroup(x))
        cyc_gens[x] = c[orders[c] == len(c)]
    while queue and complete:
        key = queue.pop()
        mask, gens = seen[key]
        hel = np.flatnonzero(mask)
        todo = ~mask
        while todo.any():
            x = int(np.argmax(todo))
            k = _closure(g, mask, gens + [x])
            kk = k.tobytes()
            if kk not in seen:
                seen[kk] = (k, gens + [x])
                queue.append(kk)
                if len(seen) > cap:
                    complete = False
                    break
            # <H, hx> = <H, x> for h in H; also for other generators of <x>
            todo[t[np.ix_(hel, cyc_gens[x])].ravel()] = False
    subs = sorted(Subgroup(tuple(int(v) for v in np.flatnonzero(m))) for m, _ in seen.values())
    subs.sort(key=lambda s: (s.order, s.elements))
    return SubgroupList(subs, complete)


def count_subgroups(g: GroupTable, cap: int = ENUMERATION_CAP) -> int:
    subs = enumerate_subgroups(g, cap)
    if not subs.complete:
        raise GroupError(f"{g!r}: more than {cap} subgroups")
    return len(subs)


# ---------------------------------------------------------------------------
# Sylow census and the theorem check
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SylowCensus:
    p: int
    count: int
    order: int
    index_bound: int

    @property
    def within_index(self) -> bool:
        return self.count <= self.index_bound

    @property
    def congruent(self) -> bool:
        return self.count % self.p == 1

    @property
    def ok(self) -> bool:
        return self.within_index and self.congruent


def sylow_census(g: GroupTable, p: int, subgroups: list[Subgroup] | None = None) -> SylowCensus:
    """Number of Sylow ``p``-subgroups, checked against ``r/p**a`` and ``1 mod p``."""
    if not is_prime(p) or g.order % p:
        raise GroupError(f"{p} is not a prime dividing the order {g.order}")
    q = 1
    while g.order % (q * p) == 0:
        q *= p
    subs = enumerate_subgroups(g) if subgroups is None else subgroups
    count = sum(1 for s in subs if s.order == q)
    return SylowCensus(p, count, q, g.order // q)


@dataclass
class TheoremCheck:
    """Subgroup count of one group against the bounds."""

    name: str
    order: int
    count: int
    f_bound: object
    trivial: int
    B: object
    verdicts: dict[str, Verdict]
    sylow: list[SylowCensus]

    @property
    def outcome(self) -> Outcome:
        out = combine(self.verdicts.values())
        if out is Outcome.VERIFIED and not all(s.ok for s in self.sylow):
            return Outcome.REFUTED
        return out

    def certificate(self, elapsed_ms: int = 0) -> Certificate:
        detail = {
            "group": self.name,
            "order": self.order,
            "subgroups": self.count,
            "f_bound": self.f_bound,
            "trivial_bound": self.trivial,
            "B": self.B,
            "verdicts": {k: v.outcome.value for k, v in self.verdicts.items()},
            "sylow": [{"p": s.p, "count": s.count, "order": s.order, "index_bound": s.index_bound}
                      for s in self.sylow],
        }
        return Certificate(f"group.{self.name}", self.outcome, detail, max_prec(self.verdicts.values()),
                           elapsed_ms)


def check_theorem(g: GroupTable, cap: int = ENUMERATION_CAP, prec_cap: int = DEFAULT_PREC_CAP) -> TheoremCheck:
    """Certify ``count <= f(r)``, ``count <= r**floor(log2 r)`` and ``count <= B(r)``."""
    subs = enumerate_subgroups(g, cap)
    if not subs.complete:
        raise GroupError(f"{g!r}: enumeration stopped at the cap of {cap} subgroups")
    r, count = g.order, len(subs)
    if r == 1:
        # empty factorization: f = 1, trivial bound 1, B(1) = the constant
        f, triv, B = 1, 1, CertReal.point(BOUND_CONSTANT)
        verdicts = {
            "f": certify_le(Const(count), Const(f)),
            "trivial": certify_le(Const(count), Const(triv)),
            "B": certify_le(Const(count), Const(BOUND_CONSTANT)),
        }
        return TheoremCheck(g.name, r, count, f, triv, B, verdicts, [])
    f = f_of_r(r)
    triv = trivial_bound(r)
    B = bound_B(r)
    verdicts = {
        "f": certify_le(Const(count), f_expr(r), prec_cap),
        "trivial": certify_le(Const(count), Const(triv)),
        "B": certify_le(Const(count), bound_B_expr(r), prec_cap),
    }
    sylow = [sylow_census(g, p, subs) for p, _ in factor_pairs(r)]
    return TheoremCheck(g.name, r, count, f, triv, B, verdicts, sylow)


# ---------------------------------------------------------------------------
# the construction suite
# ---------------------------------------------------------------------------


def _c(n):
    return lambda: cyclic(n)


def _prod(*parts):
    def build():
        g = parts[0]()
        for h in parts[1:]:
            g = direct_product(g, h())
        return g

    return build


# every group of order < 16 up to isomorphism (28 groups)
SMALL_GROUPS: dict[str, object] = {
    "C1": _c(1), "C2": _c(2), "C3": _c(3),
    "C4": _c(4), "C2xC2": _prod(_c(2), _c(2)),
    "C5": _c(5),
    "C6": _c(6), "D6": lambda: dihedral(6),
    "C7": _c(7),
    "C8": _c(8), "C4xC2": _prod(_c(4), _c(2)), "C2^3": lambda: elementary_abelian(2, 3),
    "D8": lambda: dihedral(8), "Q8": quaternion8,
    "C9": _c(9), "C3xC3": _prod(_c(3), _c(3)),
    "C10": _c(10), "D10": lambda: dihedral(10),
    "C11": _c(11),
    "C12": _c(12), "C6xC2": _prod(_c(6), _c(2)), "D12": lambda: dihedral(12),
    "A4": lambda: alternating(4), "Dic12": lambda: dicyclic(12),
    "C13": _c(13),
    "C14": _c(14), "D14": lambda: dihedral(14),
    "C15": _c(15),
}

# larger constructions, orders up to 512
LARGE_GROUPS: dict[str, object] = {
    "C16": _c(16), "D16": lambda: dihedral(16), "Dic16": lambda: dicyclic(16), "C2^4": lambda: elementary_abelian(2, 4),
    "S3xC3": _prod(lambda: dihedral(6), _c(3)),
    "S4": lambda: symmetric(4), "Q8xC3": _prod(quaternion8, _c(3)), "D8xC2": _prod(lambda: dihedral(8), _c(2)),
    "C2^5": lambda: elementary_abelian(2, 5), "Q8xC2^2": _prod(quaternion8, lambda: elementary_abelian(2, 2)),
    "A4xC3": _prod(lambda: alternating(4), _c(3)), "C2^6": lambda: elementary_abelian(2, 6),
    "S4xC2": _prod(lambda: symmetric(4), _c(2)), "3^4": lambda: elementary_abelian(3, 4),
    "A5": lambda: alternating(5), "S5": lambda: symmetric(5), "5^3": lambda: elementary_abelian(5, 3),
    "D128": lambda: dihedral(128), "C4^3": _prod(_c(4), _c(4), _c(4)),
    "D8xD8": _prod(lambda: dihedral(8), lambda: dihedral(8)),
    "D6xD6xC2": _prod(lambda: dihedral(6), lambda: dihedral(6), _c(2)),
    "C2xC128": _prod(_c(2), _c(128)), "A5xC2": _prod(lambda: alternating(5), _c(2)),
    "S4xC3^2": _prod(lambda: symmetric(4), _c(3), _c(3)),
    "7^3": lambda: elementary_abelian(7, 3), "Dic360": lambda: dicyclic(360),
    "C512": _c(512), "D512": lambda: dihedral(512), "Dic512": lambda: dicyclic(512),
    "C8xC64": _prod(_c(8), _c(64)),
}


def group_suite(max_order: int = 512) -> dict[str, GroupTable]:
    out = {}
    for name, build in {**SMALL_GROUPS, **LARGE_GROUPS}.items():
        g = build()
        if g.order <= max_order:
            out[name] = GroupTable(g.table, name, g.metadata)
    return out


def check_suite(max_order: int = 512, prec_cap: int = DEFAULT_PREC_CAP) -> list[Certificate]:
    certs = []
    for name, g in group_suite(max_order).items():
        with stopwatch() as ms:
            chk = check_theorem(g, prec_cap=prec_cap)
        certs.append(chk.certificate(ms[0]))
    return certs


__all__ = [
    "GroupTable", "Subgroup", "SubgroupList", "GroupError", "GroupFileError", "EnumerationRefused",
    "make_group", "cyclic", "dihedral", "dicyclic", "quaternion8", "elementary_abelian", "symmetric",
    "alternating", "direct_product", "loads_group", "dumps_group", "load_group", "save_group",
    "enumerate_subgroups", "count_subgroups", "subgroup_lower_bound", "sylow_census", "SylowCensus",
    "check_theorem", "TheoremCheck", "SMALL_GROUPS", "LARGE_GROUPS", "group_suite", "check_suite",
]
