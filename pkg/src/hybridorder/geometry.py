"""Interval, unit-interval, triangle and box models, and product orders.

All coordinates are :class:`fractions.Fraction`.  Intervals are open and
touching intervals count as ordered: ``x`` precedes ``y`` iff
``right(x) <= left(y)``.
"""

from __future__ import annotations

import enum
import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .classify import classify, rows_strict_linear
from .errors import (
    EmptyFamily,
    InfeasibleSystem,
    InternalError,
    MemberNotLinear,
    NotIntervalOrder,
    NotSemiorder,
    RealizerInvalid,
    SizeLimit,
)
from .extend import PartnerClass, _require_acyclic, decompose, topological_order
from .realize import MemberClass, Realizer, verify_realizer
from .relation import Relation, asymmetric_part, closure_rows, iter_bits, reflexive_closure

PRODUCT_CAP = 4096

Interval = tuple[Fraction, Fraction]


def rational_str(q: Fraction) -> str:
    """Exact ``"p/q"`` form, also for integers."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


class RepKind(str, enum.Enum):
    INTERVAL = "Interval"
    UNIT_INTERVAL = "UnitInterval"
    TRIANGLE = "Triangle"
    UNIT_TRIANGLE = "UnitTriangle"
    BOX = "Box"


@dataclass(frozen=True)
class GeometricRep:
    """Per-element geometry together with the relation it represents.

    ``intervals[k]`` is the sequence of open intervals of element ``k``:
    one interval for the interval and triangle kinds, one per coordinate
    for boxes.  ``apex`` is set for the triangle kinds only.
    """

    kind: RepKind
    relation: Relation
    intervals: tuple[tuple[Interval, ...], ...]
    apex: tuple[Fraction, ...] | None = None

    @property
    def elements(self) -> tuple[str, ...]:
        return self.relation.elements

    def precedes(self, x: int, y: int) -> bool:
        """Geometric precedence of element ``x`` before ``y``."""
        if self.apex is not None and not self.apex[x] < self.apex[y]:
            return False
        return all(bx <= ay for (_, bx), (ay, _) in zip(self.intervals[x], self.intervals[y]))

    def check(self) -> bool:
        """Exact biconditional between geometry and relation over all pairs."""
        for ivs in self.intervals:
            for left, right in ivs:
                if not left < right:
                    return False
                if self.kind in (RepKind.UNIT_INTERVAL, RepKind.UNIT_TRIANGLE) and right - left != 1:
                    return False
        r = self.relation
        n = r.n
        return all(r.has(x, y) == self.precedes(x, y) for x in range(n) for y in range(n))

    def to_dict(self) -> dict:
        out = {
            "kind": RepKind(self.kind).value,
            "elements": list(self.elements),
            "intervals": {
                e: [[rational_str(a), rational_str(b)] for a, b in ivs]
                for e, ivs in zip(self.elements, self.intervals)
            },
        }
        if self.apex is not None:
            out["apex"] = {e: rational_str(a) for e, a in zip(self.elements, self.apex)}
        return out


def _checked(rep: GeometricRep) -> GeometricRep:
    if not rep.check():
        raise InternalError(f"{rep.kind.value} representation failed verification")
    return rep


def _interval_endpoints(rows: Sequence[int]) -> list[Interval]:
    """Down-set rank construction for an interval order given as bit rows."""
    n = len(rows)
    preds = [0] * n
    for i, row in enumerate(rows):
        for j in iter_bits(row):
            preds[j] |= 1 << i
    downsets = sorted(set(preds), key=int.bit_count)
    rank = {d: k for k, d in enumerate(downsets)}
    k = len(downsets)
    out = []
    for x in range(n):
        left = rank[preds[x]]
        right = next((j for j, d in enumerate(downsets) if d >> x & 1), k)
        out.append((Fraction(left), Fraction(right)))
    return out


def interval_representation(q: Relation) -> GeometricRep:
    report = classify(q)
    if not report.interval_order:
        raise NotIntervalOrder("relation is not an interval order", report.witnesses.get("interval_order"))
    ivs = _interval_endpoints(q.rows)
    return _checked(GeometricRep(RepKind.INTERVAL, q, tuple((iv,) for iv in ivs)))


def _unit_offsets(s: Relation) -> list[Fraction]:
    """Left endpoints solving the difference system by Bellman-Ford.

    Precedence ``x < y`` needs ``r_x + 1 <= r_y``; incomparability needs
    ``|r_x - r_y| <= 1 - eps`` with ``eps = 1/(n+1)``.
    """
    n = s.n
    eps = Fraction(1, n + 1)
    edges = []  # (u, v, w): r_v - r_u <= w
    for x in range(n):
        for y in range(n):
            if x == y:
                continue
            if s.has(x, y):
                edges.append((y, x, Fraction(-1)))
            elif not s.has(y, x):
                edges.append((y, x, 1 - eps))
    dist = [Fraction(0)] * n
    for _ in range(n + 1):
        changed = False
        for u, v, w in edges:
            if dist[u] + w < dist[v]:
                dist[v] = dist[u] + w
                changed = True
        if not changed:
            break
    else:
        raise InfeasibleSystem("difference constraints contain a negative cycle")
    low = min(dist, default=Fraction(0))
    return [d - low for d in dist]


def unit_interval_representation(s: Relation) -> GeometricRep:
    report = classify(s)
    if not report.semiorder:
        raise NotSemiorder("relation is not a semiorder", report.witnesses.get("semiorder"))
    offsets = _unit_offsets(s)
    return _checked(GeometricRep(RepKind.UNIT_INTERVAL, s, tuple(((r, r + 1),) for r in offsets)))


def triangle_representation(r: Relation, partner=PartnerClass.INTERVAL_ORDER, budget: int | None = None) -> GeometricRep:
    """Apex order from the linear part, bases from the partner's intervals."""
    partner = PartnerClass(partner)
    _require_acyclic(r)
    dec = decompose(r, partner, budget=budget)
    order = topological_order(dec.linear_part.rows)
    apex = [Fraction(0)] * r.n
    for pos, x in enumerate(order):
        apex[x] = Fraction(pos)
    if partner is PartnerClass.SEMIORDER:
        bases = [((o, o + 1),) for o in _unit_offsets(dec.partner)]
        kind = RepKind.UNIT_TRIANGLE
    else:
        bases = [(iv,) for iv in _interval_endpoints(dec.partner.rows)]
        kind = RepKind.TRIANGLE
    target = Relation.from_rows(r, closure_rows(r.rows))
    return _checked(GeometricRep(kind, target, tuple(bases), tuple(apex)))


def box_embedding(r: Relation, realizer: Realizer | Sequence[Relation]) -> GeometricRep:
    """Box per element: one interval per realizer member."""
    _require_acyclic(r)
    members = list(realizer.members if isinstance(realizer, Realizer) else realizer)
    target = Relation.from_rows(r, closure_rows(r.rows))
    ok, detail = verify_realizer(target, members, MemberClass.INTERVAL_ORDER)
    if not ok:
        raise RealizerInvalid(f"not an interval realizer of the closure: {detail}")
    coords = [_interval_endpoints(m.rows) for m in members]
    boxes = tuple(tuple(c[x] for c in coords) for x in range(r.n))
    return _checked(GeometricRep(RepKind.BOX, target, boxes))


def _strong_interval_tiebreak(rep: GeometricRep, i: int) -> Relation:
    """Coordinate-``i`` order on boxes, ties broken at the first differing coordinate.

    ``x`` precedes ``y`` when its ``i``-th interval lies left of ``y``'s, or
    the ``i``-th intervals coincide and, at the first coordinate ``k`` where
    the boxes differ, ``y``'s interval lies left of ``x``'s.  Identical
    boxes are related both ways only when they belong to the same element.
    """
    n = rep.relation.n
    boxes = rep.intervals
    rows = [0] * n
    for x in range(n):
        for y in range(n):
            bx, by = boxes[x], boxes[y]
            if bx[i][1] <= by[i][0]:
                rows[x] |= 1 << y
            elif bx[i] == by[i]:
                if x == y:
                    rows[x] |= 1 << y
                    continue
                k = next((k for k in range(len(bx)) if bx[k] != by[k]), None)
                if k is not None and by[k][1] <= bx[k][0]:
                    rows[x] |= 1 << y
    return Relation.from_rows(rep.relation, rows)


# -- products ------------------------------------------------------------------


def tuple_label(t: Sequence[str]) -> str:
    return "(" + ",".join(t) + ")"


@functools.lru_cache(maxsize=64)
def _tuple_labels(grounds: tuple[tuple[str, ...], ...]):
    tuples = list(itertools.product(*(range(len(g)) for g in grounds)))
    labels = [tuple_label([g[c] for g, c in zip(grounds, t)]) for t in tuples]
    return tuples, labels


def _tuple_space(family: Sequence[Relation]):
    if not family:
        raise EmptyFamily("product of an empty family")
    size = 1
    for m in family:
        size *= m.n
    if size > PRODUCT_CAP:
        raise SizeLimit(f"tuple space of {size} exceeds the cap of {PRODUCT_CAP}")
    return _tuple_labels(tuple(m.elements for m in family))


def product_relation(family: Sequence[Relation], mode: str = "strict") -> Relation:
    """Strict (all coordinates strictly below) or componentwise (below or equal) product.

    Coordinates use the asymmetric part of each factor; the componentwise
    mode adds the diagonal per coordinate.
    """
    if mode not in ("strict", "componentwise"):
        raise ValueError(f"unknown mode {mode!r}")
    tuples, labels = _tuple_space(family)
    factors = [asymmetric_part(m) for m in family]
    if mode == "componentwise":
        factors = [reflexive_closure(f) for f in factors]
    n_t = len(tuples)
    # above[k][a]: tuples whose k-th coordinate is above a in factor k
    above = []
    for k, f in enumerate(factors):
        masks = [0] * family[k].n
        for t_idx, t in enumerate(tuples):
            c = t[k]
            for a in range(family[k].n):
                if f.rows[a] >> c & 1:
                    masks[a] |= 1 << t_idx
        above.append(masks)
    full = (1 << n_t) - 1
    rows = []
    for t in tuples:
        row = full
        for k, c in enumerate(t):
            row &= above[k][c]
        rows.append(row)
    return Relation.from_rows(labels, rows)


def product_linearization(family: Sequence[Relation], i: int) -> Relation:
    """Reflexive total order on the tuple space, lexicographic tie-break.

    Tuples compare by their ``i``-th coordinate in ``family[i]``; equal
    ``i``-th coordinates are ordered by the first differing coordinate
    ``g``, where ``y`` precedes-or-equals ``x`` in ``family[g]`` makes
    ``x`` come first.
    """
    for k, m in enumerate(family):
        if not rows_strict_linear(m.rows):
            raise MemberNotLinear(f"family member {k} is not a strict linear order")
    tuples, labels = _tuple_space(family)
    if not 0 <= i < len(family):
        raise IndexError(f"coordinate {i} out of range")
    ranks = []
    for m in family:
        rank = [0] * m.n
        for pos, x in enumerate(topological_order(m.rows)):
            rank[x] = pos
        ranks.append(rank)
    # The rule is exactly sorting by (rank_i, -rank_0, -rank_1, ...).
    def key(t):
        return (ranks[i][t[i]],) + tuple(-ranks[k][c] for k, c in enumerate(t))

    order = sorted(range(len(tuples)), key=lambda idx: key(tuples[idx]))
    rows = [0] * len(tuples)
    later = 0
    for idx in reversed(order):
        later |= 1 << idx
        rows[idx] = later
    return Relation.from_rows(labels, rows)


def diagonal_embedding(r: Relation, family: Sequence[Relation]) -> list[str]:
    """Labels of ``(x, ..., x)`` in the product tuple space, per element of ``r``."""
    return [tuple_label([x] * len(family)) for x in r.elements]
