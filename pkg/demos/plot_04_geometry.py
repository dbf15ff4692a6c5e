"""
Intervals, triangles and boxes
==============================

Interval orders are realized by intervals on a line, semiorders by unit
intervals, linear-interval orders by triangles between two parallel
lines, and any order by boxes built from an interval realizer.  SVG
files are written next to this script.
"""

from pathlib import Path

from hybridorder import (
    PartnerClass,
    Relation,
    box_embedding,
    emit,
    interval_dim,
    interval_representation,
    product_linearization,
    product_relation,
    triangle_representation,
    unit_interval_representation,
)

here = Path(__file__).resolve().parent

tpo = Relation.from_labels(["x1", "x2", "x3", "x4"], [("x1", "x2"), ("x2", "x3"), ("x1", "x3")])
rep = interval_representation(tpo)
print("intervals:", {e: tuple(map(str, iv[0])) for e, iv in zip(rep.elements, rep.intervals)})

semi = Relation.from_labels(["x1", "x2", "x3"], [("x1", "x3")])
rep = unit_interval_representation(semi)
print("unit intervals:", {e: tuple(map(str, iv[0])) for e, iv in zip(rep.elements, rep.intervals)})

tpt = Relation.from_labels(["a", "b", "c", "d"], [("a", "b"), ("c", "d")])
tri = triangle_representation(tpt, PartnerClass.INTERVAL_ORDER)
print("apices:", dict(zip(tri.elements, map(str, tri.apex))))
(here / "triangles.svg").write_text(emit(tri, "svg"))

boxes = box_embedding(tpt, interval_dim(tpt).witness)
print("box coordinates:", len(boxes.intervals[0]), "check:", boxes.check())
(here / "boxes.svg").write_text(emit(boxes, "svg"))

# Products of linear orders and their tie-broken linearizations.
up = Relation.from_labels(["p", "q"], [("p", "q")])
down = Relation.from_labels(["p", "q"], [("q", "p")])
print("strict product:", sorted(product_relation([up, down]).label_pairs))
lin = product_linearization([up, down], 0)
order = sorted(lin.elements, key=lambda t: -sum(lin.related(t, u) for u in lin.elements))
print("linearization 0:", " < ".join(order))
