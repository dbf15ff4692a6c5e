"""
Linear order meets interval order
=================================

Try to write the closure of a relation as ``L & Q`` with ``L`` a linear
order and ``Q`` an interval order (or semiorder).  The direct reversal
construction is tried first; when it produces a cycle, a backtracking
search takes over.  Some acyclic relations have no such split at all.
"""

from hybridorder import (
    NoDecompositionFound,
    PartnerClass,
    Relation,
    decompose,
    interval_dim,
    literal_decomposition,
)
from hybridorder.extend import LiteralConstructionCycle

# The 2+2 splits as c<d<a<b against a three-pair interval order.
tpt = Relation.from_labels(["a", "b", "c", "d"], [("a", "b"), ("c", "d")])
d = decompose(tpt, PartnerClass.INTERVAL_ORDER)
print("route:", d.route)
print("L:", sorted(d.linear_part.label_pairs))
print("Q:", sorted(d.partner.label_pairs))
assert d.linear_part & d.partner == tpt

# Reversing all of Q minus C at once can close a cycle.
c = Relation.from_labels(["1", "2", "3"], [("1", "2")])
q = Relation.from_labels(["1", "2", "3"], [("1", "2"), ("1", "3"), ("3", "2")])
try:
    literal_decomposition(c, q)
except LiteralConstructionCycle as exc:
    print("reversal cycle:", " -> ".join(exc.witness.members))
d = decompose(c, seed_partner=q)
print("search found L:", sorted(d.linear_part.label_pairs), "Q:", sorted(d.partner.label_pairs))

# The standard example on six elements needs three interval orders, but
# any L & Q is an intersection of two, so no split exists.
a, b = ["a1", "a2", "a3"], ["b1", "b2", "b3"]
s3 = Relation.from_labels(a + b, [(a[i], b[j]) for i in range(3) for j in range(3) if i != j])
print("idim(S3) =", interval_dim(s3).value)
try:
    decompose(s3, budget=None)
except NoDecompositionFound as exc:
    print("no decomposition, exhaustive search of", exc.nodes, "nodes")
