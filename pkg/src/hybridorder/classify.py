"""Order-class membership with certified negative answers."""

from __future__ import annotations

from dataclasses import dataclass, field, fields
from typing import Iterator, Sequence

from .relation import (
    Relation,
    Witness,
    WitnessKind,
    closure_rows,
    is_acyclic,
    is_transitively_antisymmetric,
    iter_bits,
)


def columns(rows: Sequence[int]) -> list[int]:
    n = len(rows)
    cols = [0] * n
    for i, row in enumerate(rows):
        for j in iter_bits(row):
            cols[j] |= 1 << i
    return cols


def iter_interval_violations(rows: Sequence[int], crows: Sequence[int] | None = None) -> Iterator[tuple[int, int, int, int]]:
    """Yield ``(x, y, a, b)`` with xRa, bRy, (b,a) not in the closure, (x,y) not in R.

    Quadruples come out in lexicographic order of ``(x, y, a, b)``.
    """
    n = len(rows)
    if crows is None:
        crows = closure_rows(rows)
    cols = columns(rows)
    ccols = columns(crows)
    full = (1 << n) - 1
    for x in range(n):
        succ_x = rows[x]
        if not succ_x:
            continue
        for y in iter_bits(full & ~succ_x):
            into_y = cols[y]
            if not into_y:
                continue
            for a in iter_bits(succ_x):
                for b in iter_bits(into_y & ~ccols[a]):
                    yield x, y, a, b


def iter_semiorder_violations(rows: Sequence[int]) -> Iterator[tuple[int, int, int, int]]:
    """Yield ``(x, y, z, w)`` with xRy, yRz, w not in {x,y,z}, not xRw, not wRz."""
    n = len(rows)
    cols = columns(rows)
    full = (1 << n) - 1
    for x in range(n):
        for y in iter_bits(rows[x]):
            for z in iter_bits(rows[y]):
                free = full & ~rows[x] & ~cols[z] & ~(1 << x | 1 << y | 1 << z)
                for w in iter_bits(free):
                    yield x, y, z, w


def first_interval_violation(rows, crows=None):
    return next(iter_interval_violations(rows, crows), None)


def first_semiorder_violation(rows):
    return next(iter_semiorder_violations(rows), None)


def interval_violations(r: Relation) -> frozenset[tuple[tuple[str, str], tuple[str, str]]]:
    """The negative-assumption set of ``r`` as label quadruples ``((x, y), (a, b))``."""
    e = r.elements
    return frozenset(
        ((e[x], e[y]), (e[a], e[b])) for x, y, a, b in iter_interval_violations(r.rows)
    )


def semiorder_violations(r: Relation) -> frozenset[tuple[str, str, str, str]]:
    e = r.elements
    return frozenset(
        (e[x], e[y], e[z], e[w]) for x, y, z, w in iter_semiorder_violations(r.rows)
    )


# -- fast predicates on bit rows ---------------------------------------------


def rows_irreflexive(rows) -> bool:
    return not any(row >> i & 1 for i, row in enumerate(rows))


def rows_transitive(rows) -> bool:
    for row in rows:
        acc = 0
        for j in iter_bits(row):
            acc |= rows[j]
        if acc & ~row:
            return False
    return True


def rows_total(rows) -> bool:
    n = len(rows)
    full = (1 << n) - 1
    cols = columns(rows)
    return all((rows[i] | cols[i] | 1 << i) == full for i in range(n))


def rows_strict_linear(rows) -> bool:
    return rows_irreflexive(rows) and rows_transitive(rows) and rows_total(rows)


def rows_interval_order(rows) -> bool:
    """Irreflexive, transitive, and satisfying the Russell-Wiener axiom."""
    if not (rows_irreflexive(rows) and rows_transitive(rows)):
        return False
    return first_interval_violation(rows, rows) is None


def rows_semiorder(rows) -> bool:
    return rows_interval_order(rows) and first_semiorder_violation(rows) is None


@dataclass(frozen=True)
class ClassReport:
    irreflexive: bool
    reflexive: bool
    transitive: bool
    antisymmetric: bool
    asymmetric: bool
    total: bool
    acyclic: bool
    transitively_antisymmetric: bool
    strict_partial_order: bool
    partial_order: bool
    strict_linear_order: bool
    linear_order: bool
    interval_order: bool
    semiorder: bool
    strong_interval_order: bool
    witnesses: dict[str, Witness] = field(default_factory=dict, compare=False)

    FLAGS = (
        "irreflexive", "reflexive", "transitive", "antisymmetric", "asymmetric",
        "total", "acyclic", "transitively_antisymmetric", "strict_partial_order",
        "partial_order", "strict_linear_order", "linear_order", "interval_order",
        "semiorder", "strong_interval_order",
    )

    def flags(self) -> dict[str, bool]:
        return {name: getattr(self, name) for name in self.FLAGS}

    def to_dict(self) -> dict:
        return {
            "flags": self.flags(),
            "witnesses": {k: w.to_dict() for k, w in sorted(self.witnesses.items())},
        }


def classify(r: Relation) -> ClassReport:
    """Evaluate every order class directly from its definition.

    On the empty ground set every universal property holds vacuously, so
    all flags come back true.
    """
    rows = r.rows
    n = r.n
    e = r.elements
    witnesses: dict[str, Witness] = {}

    loop = next((i for i in range(n) if rows[i] >> i & 1), None)
    irreflexive = loop is None
    reflexive = all(rows[i] >> i & 1 for i in range(n))
    transitive = rows_transitive(rows)
    sym = next(
        ((i, j) for i in range(n) for j in iter_bits(rows[i]) if j > i and rows[j] >> i & 1),
        None,
    )
    antisymmetric = sym is None
    asymmetric = antisymmetric and irreflexive
    total = rows_total(rows)
    acyclic, cyc = is_acyclic(r)
    tas, tas_w = is_transitively_antisymmetric(r)

    if loop is not None:
        witnesses["irreflexive"] = Witness(WitnessKind.CYCLE, (e[loop], e[loop]))
    if sym is not None:
        witnesses["antisymmetric"] = Witness(WitnessKind.SYMMETRIC_PAIR, (e[sym[0]], e[sym[1]]))
    if not asymmetric:
        witnesses["asymmetric"] = witnesses.get("antisymmetric") or witnesses["irreflexive"]
    if cyc is not None:
        witnesses["acyclic"] = cyc
    if tas_w is not None:
        witnesses["transitively_antisymmetric"] = tas_w

    spo = irreflexive and transitive
    po = reflexive and transitive and antisymmetric

    crows = closure_rows(rows)
    quad = first_interval_violation(rows, crows)
    if quad is not None:
        x, y, a, b = quad
        witnesses["interval_order"] = Witness(WitnessKind.TWO_PLUS_TWO, (e[x], e[y], e[a], e[b]))
    interval = spo and quad is None

    tri = first_semiorder_violation(rows)
    if tri is not None:
        x, y, z, w = tri
        witnesses["semiorder"] = Witness(WitnessKind.THREE_PLUS_ONE, (e[x], e[y], e[z], e[w]))
    elif quad is not None:
        witnesses["semiorder"] = witnesses["interval_order"]
    semi = interval and tri is None

    strict_rows = [row & ~(1 << i) for i, row in enumerate(rows)]
    strong = reflexive and rows_interval_order(strict_rows)

    return ClassReport(
        irreflexive=irreflexive,
        reflexive=reflexive,
        transitive=transitive,
        antisymmetric=antisymmetric,
        asymmetric=asymmetric,
        total=total,
        acyclic=acyclic,
        transitively_antisymmetric=tas,
        strict_partial_order=spo,
        partial_order=po,
        strict_linear_order=spo and total,
        linear_order=po and total,
        interval_order=interval,
        semiorder=semi,
        strong_interval_order=strong,
        witnesses=witnesses,
    )
