"""Extension constructions: linear, interval, strong interval, semiorder,
and linear-interval / linear-semiorder decompositions.

Every public constructor returns a transitively closed relation (or a
pair of them) that has been checked against its advertised class before
it is handed back.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .classify import (
    first_interval_violation,
    first_semiorder_violation,
    iter_interval_violations,
    iter_semiorder_violations,
    rows_interval_order,
    rows_irreflexive,
    rows_semiorder,
    rows_strict_linear,
    rows_transitive,
)
from .errors import (
    CyclicInput,
    InternalError,
    InternalOperatorFailure,
    InternalSaturationCycle,
    NoDecompositionFound,
    SearchBudgetExhausted,
    SymmetricPairError,
)
from .relation import (
    Relation,
    Witness,
    add_closed,
    closure_rows,
    is_acyclic,
    is_extension,
    is_transitively_antisymmetric,
    iter_bits,
    reflexive_closure,
)

DEFAULT_BUDGET = 10**6


class PartnerClass(str, enum.Enum):
    INTERVAL_ORDER = "IntervalOrder"
    SEMIORDER = "Semiorder"


def _require_acyclic(r: Relation) -> None:
    ok, witness = is_acyclic(r)
    if not ok:
        raise CyclicInput(f"relation has a cycle: {' -> '.join(witness.members)}", witness)


def _require_transitively_antisymmetric(r: Relation) -> None:
    ok, witness = is_transitively_antisymmetric(r)
    if not ok:
        x, y = witness.members
        raise SymmetricPairError(f"{x} and {y} are related both ways in the closure", witness)


def _rows_acyclic(rows: Sequence[int]) -> bool:
    return rows_irreflexive(closure_rows(rows))


def topological_order(crows: Sequence[int]) -> list[int]:
    """Emit the first remaining element (in sequence order) with no remaining predecessor."""
    n = len(crows)
    remaining = (1 << n) - 1
    preds = [0] * n
    for i, row in enumerate(crows):
        for j in iter_bits(row):
            preds[j] |= 1 << i
    order = []
    while remaining:
        for x in iter_bits(remaining):
            if not preds[x] & remaining & ~(1 << x):
                break
        else:
            raise InternalError("no source in residual relation")
        order.append(x)
        remaining &= ~(1 << x)
    return order


def chain_rows(order: Sequence[int]) -> tuple[int, ...]:
    """Strict linear order rows for an element sequence."""
    n = len(order)
    rows = [0] * n
    later = 0
    for x in reversed(order):
        rows[x] = later
        later |= 1 << x
    return tuple(rows)


def linear_extension(r: Relation, mode: str = "strict") -> Relation:
    """Szpilrajn-style extension by label-ordered topological sort.

    ``mode="strict"`` needs an acyclic input and returns a strict linear
    order; ``mode="reflexive"`` needs a transitively antisymmetric input and
    returns the reflexive (total, antisymmetric) counterpart.
    """
    if mode == "strict":
        _require_acyclic(r)
        base = closure_rows(r.rows)
    elif mode == "reflexive":
        _require_transitively_antisymmetric(r)
        base = closure_rows([row & ~(1 << i) for i, row in enumerate(r.rows)])
    else:
        raise ValueError(f"unknown mode {mode!r}")
    out = Relation.from_rows(r, chain_rows(topological_order(base)))
    if mode == "reflexive":
        out = reflexive_closure(out)
    return out


# -- interval extension -------------------------------------------------------


@dataclass(frozen=True)
class SaturationTrace:
    rounds: int
    fallback_rounds: int


def saturate_interval(rows: Sequence[int]) -> tuple[tuple[int, ...], SaturationTrace]:
    """Run the all-pairs augmentation to fixpoint and return the closure.

    Each round adds every ``(x, y)`` with ``xRa``, ``bRy`` and ``(b, a)``
    outside the closure.  If a round would create a cycle the round is
    replaced by adding only the first such pair in element order.
    """
    rows = tuple(rows)
    rounds = fallback = 0
    while True:
        crows = closure_rows(rows)
        add = [0] * len(rows)
        first = None
        for x, y, _a, _b in iter_interval_violations(rows, crows):
            if first is None:
                first = (x, y)
            add[x] |= 1 << y
        if first is None:
            break
        rounds += 1
        grown = tuple(row | extra for row, extra in zip(rows, add))
        if not _rows_acyclic(grown):
            fallback += 1
            x, y = first
            grown = tuple(row | (1 << y) if i == x else row for i, row in enumerate(rows))
            if not _rows_acyclic(grown):
                raise InternalSaturationCycle(f"adding ({x}, {y}) created a cycle")
        rows = grown
    return closure_rows(rows), SaturationTrace(rounds, fallback)


def interval_extension(r: Relation) -> Relation:
    _require_acyclic(r)
    rows, _ = saturate_interval(r.rows)
    out = Relation.from_rows(r, rows)
    if not (rows_interval_order(rows) and is_extension(r, out)):
        raise InternalSaturationCycle("saturation fixpoint is not an interval order extension")
    return out


def strong_interval_extension(r: Relation) -> Relation:
    """Reflexive closure of an interval extension of the closure minus the diagonal."""
    _require_transitively_antisymmetric(r)
    strict = Relation.from_rows(r, closure_rows(r.rows)).without_diagonal()
    return reflexive_closure(interval_extension(strict))


# -- semiorder extension ------------------------------------------------------


@dataclass(frozen=True)
class OperatorTrace:
    rounds: int


def saturate_semiorder(rows: Sequence[int]) -> tuple[tuple[int, ...], OperatorTrace]:
    """Apply the 3+1 resolving operator to an interval order until it is empty.

    The operator adds ``(x, w)`` whenever ``xQy``, ``yQz`` and ``w`` is
    related to neither ``x`` (from below) nor ``z`` (from above).  After
    each round the result must still be an interval order.
    """
    rows = tuple(rows)
    rounds = 0
    while True:
        add = [0] * len(rows)
        found = False
        for x, _y, _z, w in iter_semiorder_violations(rows):
            add[x] |= 1 << w
            found = True
        if not found:
            return rows, OperatorTrace(rounds)
        rounds += 1
        rows = tuple(row | extra for row, extra in zip(rows, add))
        if not rows_irreflexive(rows):
            raise InternalOperatorFailure(f"round {rounds} broke irreflexivity")
        if not rows_transitive(rows):
            raise InternalOperatorFailure(f"round {rounds} broke transitivity")
        if first_interval_violation(rows, rows) is not None:
            raise InternalOperatorFailure(f"round {rounds} broke the Russell-Wiener axiom")


def semiorder_extension(r: Relation) -> Relation:
    _require_acyclic(r)
    start, _ = saturate_interval(r.rows)
    rows, _ = saturate_semiorder(start)
    out = Relation.from_rows(r, rows)
    if not (rows_semiorder(rows) and is_extension(r, out)):
        raise InternalOperatorFailure("operator fixpoint is not a semiorder extension")
    return out


# -- linear-interval / linear-semiorder decompositions ------------------------


@dataclass(frozen=True)
class Decomposition:
    """``linear_part`` ∩ ``partner`` equals the closure of the source.

    Only ever constructed after that equality has been checked, so
    ``verified`` is always true.  ``route`` records whether the direct
    reversal construction sufficed (``"literal"``) or the backtracking
    search was needed (``"search"``).
    """

    linear_part: Relation
    partner: Relation
    partner_class: PartnerClass
    verified: bool = True
    route: str = "search"
    nodes: int = 0

    def to_dict(self) -> dict:
        return {
            "partner_class": PartnerClass(self.partner_class).value,
            "route": self.route,
            "nodes": self.nodes,
            "verified": self.verified,
        }


class LiteralConstructionCycle(InternalError):
    """The reversal relation built from a supplied partner is cyclic."""

    def __init__(self, message: str, reversal: Relation, witness: Witness):
        super().__init__(message)
        self.reversal = reversal
        self.witness = witness


def _reversal_rows(crows: Sequence[int], qrows: Sequence[int]) -> list[int]:
    """C ∪ {(v, u) : (u, v) ∈ Q minus C}."""
    out = list(crows)
    for u, (q, c) in enumerate(zip(qrows, crows)):
        for v in iter_bits(q & ~c):
            out[v] |= 1 << u
    return out


def _partner_ok(rows, partner_class: PartnerClass) -> bool:
    if partner_class is PartnerClass.SEMIORDER:
        return rows_semiorder(rows)
    return rows_interval_order(rows)


def _finish(r: Relation, crows, qrows, partner_class, route, nodes) -> Decomposition:
    rev = closure_rows(_reversal_rows(crows, qrows))
    lrows = chain_rows(topological_order(rev))
    meet = tuple(a & b for a, b in zip(lrows, qrows))
    if not (
        rows_strict_linear(lrows)
        and _partner_ok(qrows, partner_class)
        and meet == tuple(crows)
    ):
        raise InternalError("decomposition failed verification")
    return Decomposition(
        linear_part=Relation.from_rows(r, lrows),
        partner=Relation.from_rows(r, qrows),
        partner_class=partner_class,
        verified=True,
        route=route,
        nodes=nodes,
    )


def literal_decomposition(r: Relation, partner: Relation, partner_class=PartnerClass.INTERVAL_ORDER) -> Decomposition:
    """Reverse every pair of ``partner`` outside the closure of ``r`` at once.

    Raises :class:`LiteralConstructionCycle` when the resulting relation is
    cyclic; the attached witness is a cycle in that reversal relation.
    """
    _require_acyclic(r)
    partner_class = PartnerClass(partner_class)
    crows = closure_rows(r.rows)
    qrows = partner.rows
    if not _partner_ok(qrows, partner_class) or not all(c & ~q == 0 for c, q in zip(crows, qrows)):
        raise ValueError("partner must be a class member containing the closure")
    rev = Relation.from_rows(r, _reversal_rows(crows, qrows))
    ok, witness = is_acyclic(rev)
    if not ok:
        raise LiteralConstructionCycle(
            f"reversal relation has a cycle: {' -> '.join(witness.members)}", rev, witness
        )
    return _finish(r, crows, qrows, partner_class, "literal", 0)


def decompose(
    r: Relation,
    partner_class=PartnerClass.INTERVAL_ORDER,
    budget: int | None = DEFAULT_BUDGET,
    seed_partner: Relation | None = None,
) -> Decomposition:
    """Find a strict linear L and a partner Q with L ∩ Q = closure(r).

    The literal reversal construction is tried first, on ``seed_partner``
    if given, else on the canonical extension of ``r``.  When it yields a
    cycle, a depth-first search grows Q from the closure by resolving the
    first forbidden quadruple (2+2, then 3+1 for semiorders) with one of
    the two pairs every class member containing Q must include, pruning
    as soon as the reversal relation becomes cyclic.  The search is
    complete: any valid Q has a branch of subsets of it that the search
    follows.  ``budget=None`` disables the node limit.
    """
    _require_acyclic(r)
    partner_class = PartnerClass(partner_class)
    semi = partner_class is PartnerClass.SEMIORDER
    crows = closure_rows(r.rows)

    if seed_partner is None:
        seed_partner = semiorder_extension(r) if semi else interval_extension(r)
    try:
        return literal_decomposition(r, seed_partner, partner_class)
    except LiteralConstructionCycle:
        pass

    nodes = 0
    dead: set[tuple[int, ...]] = set()

    def search(qrows: tuple[int, ...]):
        nonlocal nodes
        if qrows in dead:
            return None
        nodes += 1
        if budget is not None and nodes > budget:
            raise SearchBudgetExhausted(f"decomposition search exceeded {budget} nodes", nodes)
        if not _rows_acyclic(_reversal_rows(crows, qrows)):
            dead.add(qrows)
            return None
        quad = first_interval_violation(qrows, qrows)
        if quad is not None:
            x, y, a, b = quad
            choices = ((x, y), (b, a))
        elif semi and (tri := first_semiorder_violation(qrows)) is not None:
            x, _y, z, w = tri
            choices = ((x, w), (w, z))
        else:
            return qrows
        for u, v in choices:
            found = search(add_closed(qrows, u, v))
            if found is not None:
                return found
        dead.add(qrows)
        return None

    found = search(tuple(crows))
    if found is None:
        raise NoDecompositionFound(
            f"no {partner_class.value} partner yields a decomposition ({nodes} nodes)", nodes
        )
    return _finish(r, crows, found, partner_class, "search", nodes)


def linear_interval_decompose(r: Relation, budget: int | None = DEFAULT_BUDGET, seed_partner=None) -> Decomposition:
    return decompose(r, PartnerClass.INTERVAL_ORDER, budget, seed_partner)


def linear_semiorder_decompose(r: Relation, budget: int | None = DEFAULT_BUDGET, seed_partner=None) -> Decomposition:
    return decompose(r, PartnerClass.SEMIORDER, budget, seed_partner)
