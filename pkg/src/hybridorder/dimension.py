"""Exact order, interval, semiorder and hybrid (p, q) dimensions.

A family of extensions of a strict order ``C`` intersects to ``C`` iff
every ordered incomparable pair ``(a, b)`` of ``C`` is missing from some
member.  Each candidate extension is therefore reduced to the bitmask of
incomparable pairs it omits, and the dimension is a minimum set cover
over those masks, solved exactly by branch and bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .classify import (
    first_interval_violation,
    first_semiorder_violation,
    rows_irreflexive,
    rows_strict_linear,
)
from .errors import InternalError, SizeLimit
from .extend import PartnerClass, _require_acyclic, chain_rows
from .realize import MemberClass, Realizer, verify_realizer
from .relation import Relation, add_closed, closure_rows, iter_bits

ORDER_DIM_CAP = 8
POOL_DIM_CAP = 6
DEFAULT_BUDGET = 10**6

_QUANTITY_CLASS = {
    "dim": MemberClass.STRICT_LINEAR,
    "idim": MemberClass.INTERVAL_ORDER,
    "sdim": MemberClass.SEMIORDER,
    "lidim": MemberClass.INTERVAL_ORDER,
    "lsdim": MemberClass.SEMIORDER,
}


@dataclass(frozen=True)
class DimCertificate:
    quantity: str
    value: int | tuple[int, int]
    witness: Realizer
    exhaustive: bool
    budget_used: int

    def verify(self) -> bool:
        """Re-check the witness and that its shape matches ``value``."""
        w = self.witness
        ok, _ = verify_realizer(w.target, w.members, w.member_class)
        if not ok:
            return False
        linear = [rows_strict_linear(m.rows) for m in w.members]
        if isinstance(self.value, tuple):
            p, q = self.value
            return len(w.members) == p and linear.count(False) == q
        return len(w.members) == self.value


# -- candidate pools ---------------------------------------------------------


def linear_extensions(crows: Sequence[int], limit: int | None = None) -> list[tuple[int, ...]]:
    """All strict linear extensions of a strict order, in lexicographic order."""
    n = len(crows)
    preds = [0] * n
    for i, row in enumerate(crows):
        for j in iter_bits(row):
            preds[j] |= 1 << i
    out: list[tuple[int, ...]] = []
    order: list[int] = []

    def rec(remaining: int) -> None:
        if not remaining:
            out.append(chain_rows(order))
            if limit is not None and len(out) > limit:
                raise SizeLimit(f"more than {limit} linear extensions")
            return
        for x in iter_bits(remaining):
            if not preds[x] & remaining:
                order.append(x)
                rec(remaining & ~(1 << x))
                order.pop()

    rec((1 << n) - 1)
    return out


def partner_pool(crows: Sequence[int], partner: PartnerClass, limit: int | None = None) -> list[tuple[int, ...]]:
    """Class members reached by resolving forbidden patterns from ``crows``.

    Every interval order (semiorder) containing ``crows`` contains one of
    the returned relations, so for cover purposes this pool is as good as
    the full set of extensions.
    """
    semi = PartnerClass(partner) is PartnerClass.SEMIORDER
    seen: set[tuple[int, ...]] = set()
    leaves: dict[tuple[int, ...], None] = {}

    def rec(q: tuple[int, ...]) -> None:
        if q in seen:
            return
        seen.add(q)
        if limit is not None and len(seen) > limit:
            raise SizeLimit(f"more than {limit} pool search nodes")
        if not rows_irreflexive(q):
            return
        quad = first_interval_violation(q, q)
        if quad is not None:
            x, y, a, b = quad
            choices = ((x, y), (b, a))
        elif semi and (tri := first_semiorder_violation(q)) is not None:
            x, _y, z, w = tri
            choices = ((x, w), (w, z))
        else:
            leaves[q] = None
            return
        for u, v in choices:
            rec(add_closed(q, u, v))

    rec(tuple(crows))
    return list(leaves)


# -- exact cover --------------------------------------------------------------


def omitted_mask(rows: Sequence[int], universe: Sequence[tuple[int, int]]) -> int:
    mask = 0
    for k, (a, b) in enumerate(universe):
        if not rows[a] >> b & 1:
            mask |= 1 << k
    return mask


def _prune(masks: list[int]) -> list[int]:
    """Indices of distinct, non-empty, non-dominated masks (first occurrence wins)."""
    first: dict[int, int] = {}
    for i, m in enumerate(masks):
        if m and m not in first:
            first[m] = i
    items = sorted(first.items(), key=lambda kv: (-kv[0].bit_count(), kv[1]))
    if len(items) > 4000:
        return [i for _, i in items]
    kept: list[tuple[int, int]] = []
    for m, i in items:
        if not any(m & ~k == 0 for k, _ in kept):
            kept.append((m, i))
    return [i for _, i in kept]


class _CoverSearch:
    def __init__(self, full: int, pools: list[list[int]], budget: int | None):
        self.full = full
        self.pools = []
        self.by_elem = []
        width = full.bit_length()
        for masks in pools:
            keep = _prune(masks)
            self.pools.append((masks, keep))
            lists = [[] for _ in range(width)]
            for i in keep:
                for e in iter_bits(masks[i]):
                    lists[e].append(i)
            self.by_elem.append(lists)
        self.widest = [max((pm[i].bit_count() for i in keep), default=0) for pm, keep in self.pools]
        self.budget = budget
        self.nodes = 0
        self.failed: set = set()

    def solve(self, caps: Sequence[int]) -> list[tuple[int, int]] | None:
        return self._rec(self.full, tuple(caps))

    def _rec(self, uncovered: int, caps: tuple[int, ...]):
        if not uncovered:
            return []
        if sum(caps) == 0:
            return None
        key = (uncovered, caps)
        if key in self.failed:
            return None
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise SizeLimit(f"cover search exceeded {self.budget} nodes")
        best_e, best_count = -1, None
        for e in iter_bits(uncovered):
            cnt = sum(len(self.by_elem[k][e]) for k in range(len(caps)) if caps[k])
            if best_count is None or cnt < best_count:
                best_e, best_count = e, cnt
                if cnt <= 1:
                    break
        if best_count:
            reach = max(self.widest[k] for k in range(len(caps)) if caps[k])
            if reach * sum(caps) >= uncovered.bit_count():
                for k in range(len(caps)):
                    if not caps[k]:
                        continue
                    masks = self.pools[k][0]
                    next_caps = caps[:k] + (caps[k] - 1,) + caps[k + 1:]
                    for i in self.by_elem[k][best_e]:
                        rest = self._rec(uncovered & ~masks[i], next_caps)
                        if rest is not None:
                            return [(k, i)] + rest
        self.failed.add(key)
        return None


# -- public operations ----------------------------------------------------------


def _prepare(r: Relation, max_n: int) -> tuple[tuple[int, ...], list[tuple[int, int]]]:
    _require_acyclic(r)
    if r.n > max_n:
        raise SizeLimit(f"{r.n} elements exceeds the exhaustive cap of {max_n}")
    crows = closure_rows(r.rows)
    universe = [
        (a, b)
        for a in range(r.n)
        for b in range(r.n)
        if a != b and not crows[a] >> b & 1 and not crows[b] >> a & 1
    ]
    return crows, universe


def _certificate(r, crows, quantity, value, member_rows, nodes) -> DimCertificate:
    target = Relation.from_rows(r, crows)
    members = tuple(sorted({Relation.from_rows(r, m) for m in member_rows}, key=Relation.sort_key))
    cls = _QUANTITY_CLASS[quantity]
    tags = tuple(rows_strict_linear(m.rows) for m in members)
    cert = DimCertificate(quantity, value, Realizer(target, members, cls, tags), True, nodes)
    if not cert.verify():
        raise InternalError(f"{quantity} certificate failed verification")
    return cert


def _scalar_dim(r, quantity, pool_fn, max_n, budget) -> DimCertificate:
    crows, universe = _prepare(r, max_n)
    if not universe:
        base = pool_fn(crows)[0]
        return _certificate(r, crows, quantity, 1, [base], 0)
    pool = pool_fn(crows)
    masks = [omitted_mask(q, universe) for q in pool]
    search = _CoverSearch((1 << len(universe)) - 1, [masks], budget)
    for k in range(1, len(universe) + 2):
        found = search.solve([k])
        if found is not None:
            rows = [pool[i] for _, i in found]
            return _certificate(r, crows, quantity, len(rows), rows, search.nodes)
    raise InternalError("no cover found although the pool realizes the target")


def order_dim(r: Relation, max_n: int = ORDER_DIM_CAP, budget: int | None = DEFAULT_BUDGET) -> DimCertificate:
    """Dushnik-Miller dimension of the transitive closure of ``r``."""
    return _scalar_dim(r, "dim", lambda c: linear_extensions(c, budget), max_n, budget)


def interval_dim(r: Relation, max_n: int = POOL_DIM_CAP, budget: int | None = DEFAULT_BUDGET) -> DimCertificate:
    return _scalar_dim(
        r, "idim", lambda c: partner_pool(c, PartnerClass.INTERVAL_ORDER, budget), max_n, budget
    )


def semiorder_dim(r: Relation, max_n: int = POOL_DIM_CAP, budget: int | None = DEFAULT_BUDGET) -> DimCertificate:
    return _scalar_dim(
        r, "sdim", lambda c: partner_pool(c, PartnerClass.SEMIORDER, budget), max_n, budget
    )


def hybrid_dim(
    r: Relation,
    partner=PartnerClass.INTERVAL_ORDER,
    max_n: int = POOL_DIM_CAP,
    budget: int | None = DEFAULT_BUDGET,
) -> DimCertificate:
    """Lexicographically least ``(p, q)``: p members, q of them non-linear."""
    partner = PartnerClass(partner)
    quantity = "lsdim" if partner is PartnerClass.SEMIORDER else "lidim"
    crows, universe = _prepare(r, max_n)
    linear = linear_extensions(crows, budget)
    if not universe:
        return _certificate(r, crows, quantity, (1, 0), [linear[0]], 0)
    nonlinear = [q for q in partner_pool(crows, partner, budget) if not rows_strict_linear(q)]
    pools = [linear, nonlinear]
    masks = [[omitted_mask(q, universe) for q in pool] for pool in pools]
    search = _CoverSearch((1 << len(universe)) - 1, masks, budget)
    for p in range(1, len(universe) + 2):
        for q in range(p + 1):
            found = search.solve([p - q, q])
            if found is not None:
                rows = [pools[k][i] for k, i in found]
                return _certificate(r, crows, quantity, (p, q), rows, search.nodes)
    raise InternalError("no cover found although linear extensions realize the target")


def dimension(r: Relation, quantity: str, **kwargs) -> DimCertificate:
    """Dispatch on ``dim``, ``idim``, ``sdim``, ``lidim`` or ``lsdim``."""
    if quantity == "dim":
        return order_dim(r, **kwargs)
    if quantity == "idim":
        return interval_dim(r, **kwargs)
    if quantity == "sdim":
        return semiorder_dim(r, **kwargs)
    if quantity == "lidim":
        return hybrid_dim(r, PartnerClass.INTERVAL_ORDER, **kwargs)
    if quantity == "lsdim":
        return hybrid_dim(r, PartnerClass.SEMIORDER, **kwargs)
    raise ValueError(f"unknown quantity {quantity!r}")
