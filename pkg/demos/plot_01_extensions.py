"""
Extending a relation
====================

Start from a small acyclic relation and grow it into a linear order, an
interval order and a semiorder.  Every result is an extension: it keeps
all original pairs and never adds the reverse of one.
"""

from hybridorder import (
    Relation,
    classify,
    interval_extension,
    interval_violations,
    is_extension,
    linear_extension,
    semiorder_extension,
)

# Two disjoint comparable pairs: the smallest relation that is not an
# interval order.
r = Relation.from_labels(["x1", "x2", "x3", "x4"], [("x1", "x2"), ("x3", "x4")])
print("input:", sorted(r.label_pairs))
print("violating quadruples:", sorted(interval_violations(r)))

# A linear extension, ties broken by element order.
lin = linear_extension(r)
print("linear:", sorted(lin.label_pairs))

# Saturating the violations gives an interval order.
q = interval_extension(r)
print("interval:", sorted(q.label_pairs), classify(q).interval_order)

# A 3-chain with a free point is an interval order but not a semiorder;
# the semiorder step places the free point above the bottom of the chain.
r2 = Relation.from_labels(["x1", "x2", "x3", "x4"], [("x1", "x2"), ("x1", "x3"), ("x2", "x3")])
s = semiorder_extension(r2)
print("semiorder:", sorted(s.label_pairs), classify(s).semiorder)

for out in (lin, q):
    assert is_extension(r, out)
assert is_extension(r2, s)
