"""Reading and writing relations and results.

Two input formats are understood:

* ``json``: ``{"elements": [...], "pairs": [[a, b], ...], "name": ...}``
* ``edgelist``: one ``a b`` pair per line, optional ``#elements: ...``
  header listing the ground set (needed for isolated elements), other
  ``#`` lines are comments.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

from .classify import ClassReport
from .dimension import DimCertificate
from .errors import DuplicateElement, ParseError, UnknownElement, UnsupportedCombination
from .extend import Decomposition
from .geometry import GeometricRep, RepKind, rational_str
from .realize import Realizer
from .relation import Relation, closure_rows, iter_bits

FORMATS_IN = ("json", "edgelist")
FORMATS_OUT = ("json", "dot", "svg", "edgelist")


@dataclass(frozen=True)
class RelationDocument:
    elements: tuple[str, ...]
    pairs: tuple[tuple[str, str], ...]
    name: str | None = None

    def __post_init__(self):
        seen = set()
        for e in self.elements:
            if e in seen:
                raise DuplicateElement(f"duplicate element {e!r}")
            seen.add(e)
        for a, b in self.pairs:
            for label in (a, b):
                if label not in seen:
                    raise UnknownElement(f"pair ({a},{b}) references undeclared element {label!r}")

    def to_relation(self) -> Relation:
        return Relation.from_labels(self.elements, self.pairs)

    @classmethod
    def from_relation(cls, r: Relation, name: str | None = None) -> "RelationDocument":
        e = r.elements
        pairs = tuple((e[i], e[j]) for i in range(r.n) for j in iter_bits(r.rows[i]))
        return cls(r.elements, pairs, name)

    def to_dict(self) -> dict:
        out: dict[str, Any] = {"elements": list(self.elements), "pairs": [list(p) for p in self.pairs]}
        if self.name is not None:
            out["name"] = self.name
        return out


# -- parsing ---------------------------------------------------------------------


def _json_document(text: str) -> RelationDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from exc
    if not isinstance(data, dict):
        raise ParseError("top-level JSON value must be an object")
    elements = data.get("elements")
    pairs = data.get("pairs", [])
    if not isinstance(elements, list) or not all(isinstance(e, str) for e in elements):
        raise ParseError('"elements" must be an array of strings')
    if not isinstance(pairs, list):
        raise ParseError('"pairs" must be an array')
    out = []
    for k, p in enumerate(pairs):
        if not (isinstance(p, list) and len(p) == 2 and all(isinstance(v, str) for v in p)):
            raise ParseError(f"pair {k} must be an array of two strings", position=k)
        out.append((p[0], p[1]))
    name = data.get("name")
    if name is not None and not isinstance(name, str):
        raise ParseError('"name" must be a string')
    return RelationDocument(tuple(elements), tuple(out), name)


def _edgelist_document(text: str) -> RelationDocument:
    elements: list[str] = []
    known: set[str] = set()
    declared = False
    pairs = []

    def note(label: str) -> None:
        if label not in known:
            known.add(label)
            elements.append(label)

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("elements:"):
                if declared or pairs:
                    raise ParseError("#elements: header must come first and only once", lineno)
                declared = True
                labels = body[len("elements:"):].split()
                for label in labels:
                    if label in known:
                        raise DuplicateElement(f"duplicate element {label!r} (line {lineno})")
                    note(label)
            continue
        parts = line.split()
        if len(parts) != 2:
            col = raw.find(parts[2]) + 1 if len(parts) > 2 else len(raw) + 1
            raise ParseError("expected exactly two labels", lineno, col)
        a, b = parts
        for label in (a, b):
            if declared and label not in known:
                raise UnknownElement(f"undeclared element {label!r} (line {lineno})")
            note(label)
        pairs.append((a, b))
    return RelationDocument(tuple(elements), tuple(pairs))


def parse_document(text: str, fmt: str = "json") -> RelationDocument:
    if fmt == "json":
        return _json_document(text)
    if fmt == "edgelist":
        return _edgelist_document(text)
    raise UnsupportedCombination(f"cannot parse format {fmt!r}")


def parse_relation(text: str, fmt: str = "json") -> Relation:
    return parse_document(text, fmt).to_relation()


# -- json ----------------------------------------------------------------------------


def relation_dict(r: Relation) -> dict:
    return RelationDocument.from_relation(r).to_dict()


def _decomposition_dict(d: Decomposition) -> dict:
    out = d.to_dict()
    out["linear_part"] = relation_dict(d.linear_part)
    out["partner"] = relation_dict(d.partner)
    return out


def to_jsonable(value) -> Any:
    """Plain JSON structure for any result type of the package."""
    if isinstance(value, Relation):
        return relation_dict(value)
    if isinstance(value, RelationDocument):
        return value.to_dict()
    if isinstance(value, Decomposition):
        return _decomposition_dict(value)
    if isinstance(value, Realizer):
        out = {
            "target": relation_dict(value.target),
            "member_class": value.member_class.value,
            "size": value.size,
            "nonlinear_count": value.nonlinear_count,
            "members": [relation_dict(m) for m in value.members],
            "linear_tags": list(value.member_tags),
        }
        if value.decompositions is not None:
            out["decompositions"] = [_decomposition_dict(d) for d in value.decompositions]
        return out
    if isinstance(value, DimCertificate):
        v = value.value
        return {
            "quantity": value.quantity,
            "value": list(v) if isinstance(v, tuple) else v,
            "exhaustive": value.exhaustive,
            "budget_used": value.budget_used,
            "witness": to_jsonable(value.witness),
        }
    if isinstance(value, GeometricRep):
        out = value.to_dict()
        out["relation"] = relation_dict(value.relation)
        return out
    if isinstance(value, ClassReport):
        return value.to_dict()
    if hasattr(value, "to_dict"):
        return value.to_dict()
    raise UnsupportedCombination(f"cannot serialize {type(value).__name__} as json")


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


# -- dot ---------------------------------------------------------------------------


def hasse_pairs(r: Relation) -> list[tuple[int, int]]:
    """Covering pairs of the closure, or the raw non-loop pairs if ``r`` is cyclic."""
    c = closure_rows(r.rows)
    n = r.n
    if any(c[i] >> i & 1 for i in range(n)):
        return [(i, j) for i in range(n) for j in iter_bits(r.rows[i]) if i != j]
    out = []
    for i in range(n):
        below = 0
        for k in iter_bits(c[i]):
            below |= c[k]
        out.extend((i, j) for j in iter_bits(c[i] & ~below))
    return out


def _dot_id(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(r: Relation, name: str = "R") -> str:
    lines = [f"digraph {_dot_id(name)} {{", "  rankdir=BT;"]
    for e in r.elements:
        lines.append(f"  {_dot_id(e)};")
    for i, j in hasse_pairs(r):
        lines.append(f"  {_dot_id(r.elements[i])} -> {_dot_id(r.elements[j])};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- svg ------------------------------------------------------------------------------


def _esc(s: str) -> str:
    return s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def to_svg(rep: GeometricRep) -> str:
    """Intervals as stacked segments, triangles between two horizontal lines,
    boxes as one panel of segments per coordinate."""
    scale, margin, row_h = 60.0, 30.0, 22.0
    n = len(rep.elements)
    body: list[str] = []
    if rep.kind in (RepKind.TRIANGLE, RepKind.UNIT_TRIANGLE):
        apex_max = max((float(a) for a in rep.apex), default=0.0)
        base_max = max((float(iv[0][1]) for iv in rep.intervals), default=0.0)
        width = max(apex_max, base_max) * scale + 2 * margin
        top, bottom = margin, margin + 160.0
        height = bottom + margin
        body.append(f'<line x1="0" y1="{top}" x2="{width}" y2="{top}" stroke="black"/>')
        body.append(f'<line x1="0" y1="{bottom}" x2="{width}" y2="{bottom}" stroke="black"/>')
        for e, apex, ((a, b),) in zip(rep.elements, rep.apex, rep.intervals):
            ax = margin + float(apex) * scale
            la, lb = margin + float(a) * scale, margin + float(b) * scale
            body.append(
                f'<polygon points="{ax},{top} {la},{bottom} {lb},{bottom}" '
                f'fill="none" stroke="steelblue"><title>{_esc(e)}</title></polygon>'
            )
            body.append(f'<text x="{ax}" y="{top - 6}" font-size="11" text-anchor="middle">{_esc(e)}</text>')
    else:
        panels = len(rep.intervals[0]) if rep.intervals else 1
        right = max((float(b) for ivs in rep.intervals for _, b in ivs), default=1.0)
        width = right * scale + 2 * margin + 60
        panel_h = n * row_h + margin
        height = panels * panel_h + margin
        for p in range(panels):
            y0 = margin + p * panel_h
            if panels > 1:
                body.append(f'<text x="4" y="{y0 - 8}" font-size="11">coordinate {p}</text>')
            for k, (e, ivs) in enumerate(zip(rep.elements, rep.intervals)):
                a, b = ivs[p]
                y = y0 + k * row_h
                x1, x2 = margin + float(a) * scale, margin + float(b) * scale
                body.append(f'<line x1="{x1}" y1="{y}" x2="{x2}" y2="{y}" stroke="steelblue" stroke-width="4"/>')
                body.append(f'<text x="{x2 + 6}" y="{y + 4}" font-size="11">{_esc(e)}</text>')
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" height="{height:.0f}" '
        f'data-kind="{rep.kind.value}">'
    )
    return "\n".join([head, *body, "</svg>"]) + "\n"


# -- edgelist ---------------------------------------------------------------------------


def to_edgelist(r: Relation) -> str:
    for e in r.elements:
        if not e or any(ch.isspace() for ch in e) or e.startswith("#"):
            raise UnsupportedCombination(f"label {e!r} cannot be written as an edgelist token")
    lines = ["#elements: " + " ".join(r.elements)]
    e = r.elements
    lines.extend(f"{e[i]} {e[j]}" for i in range(r.n) for j in iter_bits(r.rows[i]))
    return "\n".join(lines) + "\n"


def emit(value, fmt: str = "json") -> str:
    if fmt == "json":
        return canonical_json(to_jsonable(value))
    if fmt == "dot" and isinstance(value, Relation):
        return to_dot(value)
    if fmt == "svg" and isinstance(value, GeometricRep):
        return to_svg(value)
    if fmt == "edgelist" and isinstance(value, Relation):
        return to_edgelist(value)
    if fmt not in FORMATS_OUT:
        raise UnsupportedCombination(f"unknown output format {fmt!r}")
    raise UnsupportedCombination(f"cannot emit {type(value).__name__} as {fmt}")


__all__ = [
    "RelationDocument",
    "parse_document",
    "parse_relation",
    "emit",
    "to_jsonable",
    "canonical_json",
    "hasse_pairs",
    "rational_str",
]
