"""Realizers: families of extensions whose intersection is the transitive closure."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .classify import (
    classify,
    rows_interval_order,
    rows_semiorder,
    rows_strict_linear,
)
from .errors import (
    InternalError,
    MemberConstructionFailed,
    NoDecompositionFound,
    PreconditionError,
)
from .extend import (
    Decomposition,
    PartnerClass,
    _require_acyclic,
    _require_transitively_antisymmetric,
    decompose,
    interval_extension,
    linear_extension,
    semiorder_extension,
)
from .relation import Relation, closure_rows, is_extension, iter_bits, reflexive_closure


class MemberClass(str, enum.Enum):
    STRICT_LINEAR = "StrictLinear"
    LINEAR = "Linear"
    INTERVAL_ORDER = "IntervalOrder"
    SEMIORDER = "Semiorder"
    STRONG_INTERVAL = "StrongInterval"
    LINEAR_INTERVAL = "LinearInterval"
    LINEAR_SEMIORDER = "LinearSemiorder"

    @property
    def reflexive(self) -> bool:
        return self in (MemberClass.LINEAR, MemberClass.STRONG_INTERVAL)

    @property
    def hybrid(self) -> bool:
        return self in (MemberClass.LINEAR_INTERVAL, MemberClass.LINEAR_SEMIORDER)


_PARTNER = {
    MemberClass.LINEAR_INTERVAL: PartnerClass.INTERVAL_ORDER,
    MemberClass.LINEAR_SEMIORDER: PartnerClass.SEMIORDER,
}


@dataclass(frozen=True)
class Realizer:
    """A verified family whose intersection equals ``target``.

    ``member_tags[k]`` is true when member ``k`` is itself a (strict)
    linear order.  For hybrid classes ``decompositions[k]`` holds the
    (linear, partner) pair certifying member ``k``.
    """

    target: Relation
    members: tuple[Relation, ...]
    member_class: MemberClass
    member_tags: tuple[bool, ...]
    decompositions: tuple[Decomposition, ...] | None = None

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def nonlinear_count(self) -> int:
        return sum(not t for t in self.member_tags)

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)


def is_linear_member(m: Relation, reflexive: bool = False) -> bool:
    rows = m.rows
    if reflexive:
        rows = [row & ~(1 << i) for i, row in enumerate(rows)]
    return rows_strict_linear(rows)


def member_in_class(m: Relation, cls: MemberClass, decomposition: Decomposition | None = None) -> bool:
    cls = MemberClass(cls)
    rows = m.rows
    if cls is MemberClass.STRICT_LINEAR:
        return rows_strict_linear(rows)
    if cls is MemberClass.INTERVAL_ORDER:
        return rows_interval_order(rows)
    if cls is MemberClass.SEMIORDER:
        return rows_semiorder(rows)
    if cls is MemberClass.LINEAR:
        return classify(m).linear_order
    if cls is MemberClass.STRONG_INTERVAL:
        return classify(m).strong_interval_order
    partner = _PARTNER[cls]
    if decomposition is not None:
        return (
            decomposition.partner_class is partner
            and rows_strict_linear(decomposition.linear_part.rows)
            and member_in_class(decomposition.partner, MemberClass(partner.value))
            and (decomposition.linear_part & decomposition.partner).rows == closure_rows(rows)
        )
    try:
        decompose(m, partner, budget=None)
    except (NoDecompositionFound, PreconditionError):
        return False
    return True


def verify_realizer(
    target: Relation,
    members: Sequence[Relation],
    cls,
    decompositions: Sequence[Decomposition] | None = None,
) -> tuple[bool, str | None]:
    """Check every realizer invariant; report the first failure found.

    Members are checked in order (class membership, then extension of the
    target); after that the intersection is compared with the target.
    """
    cls = MemberClass(cls)
    members = list(members)
    for k, m in enumerate(members):
        target._check(m)
    if not members:
        return False, "empty family"
    for k, m in enumerate(members):
        dec = decompositions[k] if decompositions is not None else None
        if not member_in_class(m, cls, dec):
            return False, f"member {k} is not a {cls.value} order"
        if not is_extension(target, m):
            return False, f"member {k} is not an extension of the target"
    meet = members[0]
    for m in members[1:]:
        meet = meet & m
    e = target.elements
    for i, (got, want) in enumerate(zip(meet.rows, target.rows)):
        extra = got & ~want
        if extra:
            j = next(iter_bits(extra))
            return False, f"intersection contains ({e[i]},{e[j]}) which is not in the target"
        missing = want & ~got
        if missing:
            j = next(iter_bits(missing))
            return False, f"intersection lacks ({e[i]},{e[j]}) from the target"
    return True, None


def incomparable_pairs(crows: Sequence[int]) -> list[tuple[int, int]]:
    """Unordered incomparable pairs ``(a, b)``, ``a < b``, of a strict order."""
    n = len(crows)
    return [
        (a, b)
        for a in range(n)
        for b in range(a + 1, n)
        if not crows[a] >> b & 1 and not crows[b] >> a & 1
    ]


def _target(r: Relation, cls: MemberClass) -> tuple[Relation, Relation]:
    """Return (strict closure used for construction, realizer target)."""
    if cls.reflexive:
        if not all(row >> i & 1 for i, row in enumerate(r.rows)):
            missing = next(r.elements[i] for i, row in enumerate(r.rows) if not row >> i & 1)
            raise PreconditionError(f"input must be reflexive; ({missing},{missing}) is absent")
        _require_transitively_antisymmetric(r)
        strict = Relation.from_rows(r, closure_rows(r.rows)).without_diagonal()
        return strict, reflexive_closure(strict)
    _require_acyclic(r)
    c = Relation.from_rows(r, closure_rows(r.rows))
    return c, c


def realizer(r: Relation, cls, budget: int | None = None) -> Realizer:
    """Pairwise-reversal realizer of the closure of ``r``.

    Members: one extension of the closure, then for each incomparable pair
    ``{a, b}`` an extension containing ``(b, a)`` and one containing
    ``(a, b)``.  Duplicates are dropped and members sorted by their bit rows.
    """
    cls = MemberClass(cls)
    strict, target = _target(r, cls)

    def build(rel: Relation) -> tuple[Relation, Decomposition | None]:
        if cls is MemberClass.STRICT_LINEAR:
            return linear_extension(rel), None
        if cls is MemberClass.LINEAR:
            return reflexive_closure(linear_extension(rel)), None
        if cls is MemberClass.INTERVAL_ORDER:
            return interval_extension(rel), None
        if cls is MemberClass.SEMIORDER:
            return semiorder_extension(rel), None
        if cls is MemberClass.STRONG_INTERVAL:
            return reflexive_closure(interval_extension(rel)), None
        try:
            dec = decompose(rel, _PARTNER[cls], budget=budget)
        except NoDecompositionFound as exc:
            raise MemberConstructionFailed(
                f"no {cls.value} decomposition for {rel!r}", getattr(exc, "witness", None)
            ) from exc
        return dec.linear_part & dec.partner, dec

    built: dict[Relation, Decomposition | None] = {}
    augmented = [strict]
    for a, b in incomparable_pairs(strict.rows):
        augmented.append(strict.with_pairs([(b, a)]))
        augmented.append(strict.with_pairs([(a, b)]))
    for rel in augmented:
        m, dec = build(rel)
        built.setdefault(m, dec)

    members = sorted(built, key=Relation.sort_key)
    decs = tuple(built[m] for m in members) if cls.hybrid else None
    tags = tuple(is_linear_member(m, cls.reflexive) for m in members)
    out = Realizer(target, tuple(members), cls, tags, decs)
    ok, detail = verify_realizer(target, out.members, cls, decs)
    if not ok:
        raise InternalError(f"constructed realizer failed verification: {detail}")
    return out
