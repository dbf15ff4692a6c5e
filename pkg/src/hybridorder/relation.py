"""Finite binary relations stored as one successor bitmask per element.

Element ``i`` relates to ``j`` iff bit ``j`` of ``rows[i]`` is set.  The
element sequence fixes the tie-break order used by every deterministic
choice in the package.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import DuplicateElement, GroundSetMismatch, UnknownElement


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def closure_rows(rows: Sequence[int]) -> tuple[int, ...]:
    """Warshall closure over bit rows."""
    out = list(rows)
    n = len(out)
    for k in range(n):
        bit = 1 << k
        row_k = out[k]
        for i in range(n):
            if out[i] & bit:
                out[i] |= row_k
    return tuple(out)


def add_closed(rows: Sequence[int], u: int, v: int) -> tuple[int, ...]:
    """Add ``(u, v)`` to a transitive relation and return the closure.

    Everything reaching ``u`` (and ``u`` itself) gains ``v`` and all of
    ``v``'s successors; this is exact because ``rows`` is already closed.
    """
    gain = (1 << v) | rows[v]
    ubit = 1 << u
    return tuple(row | gain if (i == u or row & ubit) else row for i, row in enumerate(rows))


def diagonal_mask(n: int) -> tuple[int, ...]:
    return tuple(1 << i for i in range(n))


class Relation:
    """Immutable finite binary relation on a labelled ground set.

    ``pairs`` are index pairs into ``elements``.  Use :meth:`from_labels`
    to build from label pairs.
    """

    __slots__ = ("_elements", "_rows", "_index")

    def __init__(self, elements: Iterable[str], pairs: Iterable[tuple[int, int]] = ()):
        elements = tuple(elements)
        index: dict[str, int] = {}
        for i, e in enumerate(elements):
            if not isinstance(e, str):
                raise TypeError(f"element labels must be strings, got {e!r}")
            if e in index:
                raise DuplicateElement(f"duplicate element {e!r}")
            index[e] = i
        n = len(elements)
        rows = [0] * n
        for i, j in pairs:
            if not (0 <= i < n and 0 <= j < n):
                raise IndexError(f"pair {(i, j)} out of bounds for {n} elements")
            rows[i] |= 1 << j
        self._elements = elements
        self._rows = tuple(rows)
        self._index = index

    @classmethod
    def from_rows(cls, elements: Sequence[str] | "Relation", rows: Sequence[int]) -> "Relation":
        """Build directly from bit rows, sharing the label index of a template."""
        obj = cls.__new__(cls)
        if isinstance(elements, Relation):
            obj._elements = elements._elements
            obj._index = elements._index
        else:
            tmp = cls(elements)
            obj._elements = tmp._elements
            obj._index = tmp._index
        obj._rows = tuple(rows)
        return obj

    @classmethod
    def from_labels(cls, elements: Iterable[str], pairs: Iterable[tuple[str, str]] = ()) -> "Relation":
        base = cls(elements)
        idx = base._index
        out = []
        for a, b in pairs:
            for label in (a, b):
                if label not in idx:
                    raise UnknownElement(f"unknown element {label!r}")
            out.append((idx[a], idx[b]))
        return cls.from_rows(base, _rows_from_pairs(len(base._elements), out))

    @classmethod
    def diagonal(cls, elements: Iterable[str]) -> "Relation":
        base = cls(elements)
        return cls.from_rows(base, diagonal_mask(base.n))

    # -- accessors ---------------------------------------------------------

    @property
    def elements(self) -> tuple[str, ...]:
        return self._elements

    @property
    def rows(self) -> tuple[int, ...]:
        return self._rows

    @property
    def n(self) -> int:
        return len(self._elements)

    @property
    def pairs(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.iter_pairs())

    @property
    def label_pairs(self) -> frozenset[tuple[str, str]]:
        e = self._elements
        return frozenset((e[i], e[j]) for i, j in self.iter_pairs())

    def iter_pairs(self) -> Iterator[tuple[int, int]]:
        """Pairs in lexicographic index order."""
        for i, row in enumerate(self._rows):
            for j in iter_bits(row):
                yield i, j

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownElement(f"unknown element {label!r}") from None

    def has(self, i: int, j: int) -> bool:
        return bool(self._rows[i] >> j & 1)

    def related(self, a: str, b: str) -> bool:
        return self.has(self.index(a), self.index(b))

    def __contains__(self, pair) -> bool:
        a, b = pair
        if isinstance(a, str):
            return self.related(a, b)
        return self.has(a, b)

    def __len__(self) -> int:
        return sum(row.bit_count() for row in self._rows)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return self.iter_pairs()

    # -- set algebra on a shared ground set ---------------------------------

    def same_ground(self, other: "Relation") -> bool:
        return self._elements == other._elements

    def _check(self, other: "Relation") -> None:
        if not self.same_ground(other):
            raise GroundSetMismatch(f"ground sets differ: {self._elements} vs {other._elements}")

    def __or__(self, other: "Relation") -> "Relation":
        self._check(other)
        return Relation.from_rows(self, [a | b for a, b in zip(self._rows, other._rows)])

    def __and__(self, other: "Relation") -> "Relation":
        self._check(other)
        return Relation.from_rows(self, [a & b for a, b in zip(self._rows, other._rows)])

    def __sub__(self, other: "Relation") -> "Relation":
        self._check(other)
        return Relation.from_rows(self, [a & ~b for a, b in zip(self._rows, other._rows)])

    def __le__(self, other: "Relation") -> bool:
        self._check(other)
        return all(a & ~b == 0 for a, b in zip(self._rows, other._rows))

    def __ge__(self, other: "Relation") -> bool:
        return other <= self

    def __eq__(self, other) -> bool:
        if not isinstance(other, Relation):
            return NotImplemented
        return self._elements == other._elements and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self._elements, self._rows))

    def with_pairs(self, pairs: Iterable[tuple[int, int]]) -> "Relation":
        rows = list(self._rows)
        for i, j in pairs:
            rows[i] |= 1 << j
        return Relation.from_rows(self, rows)

    def without_diagonal(self) -> "Relation":
        return Relation.from_rows(self, [row & ~(1 << i) for i, row in enumerate(self._rows)])

    def converse(self) -> "Relation":
        n = self.n
        rows = [0] * n
        for i, j in self.iter_pairs():
            rows[j] |= 1 << i
        return Relation.from_rows(self, rows)

    def to_matrix(self) -> list[list[bool]]:
        n = self.n
        return [[bool(row >> j & 1) for j in range(n)] for row in self._rows]

    def sort_key(self) -> tuple:
        return self._rows

    def __repr__(self) -> str:
        e = self._elements
        body = ", ".join(f"({e[i]},{e[j]})" for i, j in self.iter_pairs())
        return f"Relation([{', '.join(e)}], {{{body}}})"


def _rows_from_pairs(n: int, pairs: Iterable[tuple[int, int]]) -> list[int]:
    rows = [0] * n
    for i, j in pairs:
        rows[i] |= 1 << j
    return rows


class WitnessKind(str, enum.Enum):
    CYCLE = "Cycle"
    TWO_PLUS_TWO = "TwoPlusTwo"
    THREE_PLUS_ONE = "ThreePlusOne"
    SYMMETRIC_PAIR = "SymmetricPair"


@dataclass(frozen=True)
class Witness:
    """A checkable certificate of a forbidden pattern.

    Member roles by kind:

    * ``Cycle``: a closed walk ``[z0, z1, ..., z0]`` of pairs in the relation.
    * ``SymmetricPair``: ``[x, y]`` with ``x != y`` related both ways in
      the transitive closure.
    * ``TwoPlusTwo``: ``[x, y, a, b]`` with ``xRa``, ``bRy``, ``(b, a)``
      outside the closure and ``(x, y)`` outside the relation.
    * ``ThreePlusOne``: ``[x, y, z, w]`` with ``xRy``, ``yRz``, ``w``
      distinct from the others and neither ``xRw`` nor ``wRz``.
    """

    kind: WitnessKind
    members: tuple[str, ...]

    def verify(self, r: Relation) -> bool:
        try:
            idx = [r.index(m) for m in self.members]
        except UnknownElement:
            return False
        kind = WitnessKind(self.kind)
        if kind is WitnessKind.CYCLE:
            return (
                len(idx) >= 2
                and idx[0] == idx[-1]
                and all(r.has(u, v) for u, v in zip(idx, idx[1:]))
            )
        if kind is WitnessKind.SYMMETRIC_PAIR:
            if len(idx) != 2 or idx[0] == idx[1]:
                return False
            c = closure_rows(r.rows)
            x, y = idx
            return bool(c[x] >> y & 1 and c[y] >> x & 1)
        if kind is WitnessKind.TWO_PLUS_TWO:
            if len(idx) != 4:
                return False
            x, y, a, b = idx
            c = closure_rows(r.rows)
            return r.has(x, a) and r.has(b, y) and not c[b] >> a & 1 and not r.has(x, y)
        if kind is WitnessKind.THREE_PLUS_ONE:
            if len(idx) != 4:
                return False
            x, y, z, w = idx
            return (
                w not in (x, y, z)
                and r.has(x, y)
                and r.has(y, z)
                and not r.has(x, w)
                and not r.has(w, z)
            )
        return False

    def to_dict(self) -> dict:
        return {"kind": WitnessKind(self.kind).value, "members": list(self.members)}


# -- closure and part operators ----------------------------------------------


def transitive_closure(r: Relation) -> Relation:
    return Relation.from_rows(r, closure_rows(r.rows))


def reflexive_closure(r: Relation) -> Relation:
    return Relation.from_rows(r, [row | (1 << i) for i, row in enumerate(r.rows)])


def asymmetric_part(r: Relation) -> Relation:
    """Pairs of ``r`` whose reverse is absent; loops never survive."""
    rows = r.rows
    out = []
    for i, row in enumerate(rows):
        keep = 0
        for j in iter_bits(row):
            if not rows[j] >> i & 1:
                keep |= 1 << j
        out.append(keep)
    return Relation.from_rows(r, out)


def is_acyclic(r: Relation) -> tuple[bool, Witness | None]:
    c = closure_rows(r.rows)
    for x in range(r.n):
        if c[x] >> x & 1:
            return False, Witness(WitnessKind.CYCLE, _shortest_cycle(r, x))
    return True, None


def _shortest_cycle(r: Relation, start: int) -> tuple[str, ...]:
    rows = r.rows
    if rows[start] >> start & 1:
        return (r.elements[start], r.elements[start])
    parent = {start: None}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v in iter_bits(rows[u]):
            if v == start:
                path = [u]
                while parent[path[-1]] is not None:
                    path.append(parent[path[-1]])
                path.reverse()
                return tuple(r.elements[i] for i in path + [start])
            if v not in parent:
                parent[v] = u
                queue.append(v)
    raise AssertionError("start element is not on a cycle")


def is_transitively_antisymmetric(r: Relation) -> tuple[bool, Witness | None]:
    c = closure_rows(r.rows)
    for x in range(r.n):
        for y in iter_bits(c[x] & ~((1 << (x + 1)) - 1)):
            if c[y] >> x & 1:
                return False, Witness(WitnessKind.SYMMETRIC_PAIR, (r.elements[x], r.elements[y]))
    return True, None


def is_extension(base: Relation, cand: Relation) -> bool:
    if not base.same_ground(cand):
        raise GroundSetMismatch(f"ground sets differ: {base.elements} vs {cand.elements}")
    return base <= cand and asymmetric_part(base) <= asymmetric_part(cand)
