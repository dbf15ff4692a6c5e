"""
Realizers and exact dimensions
==============================

A realizer is a family of extensions whose intersection is the closure.
The pairwise construction is always valid but large; the dimension
searches find the smallest family, with a certificate that re-checks.
"""

from hybridorder import MemberClass, PartnerClass, Relation, dimension, realizer

a, b = ["a1", "a2", "a3"], ["b1", "b2", "b3"]
s3 = Relation.from_labels(a + b, [(a[i], b[j]) for i in range(3) for j in range(3) if i != j])
tpt = Relation.from_labels(["a", "b", "c", "d"], [("a", "b"), ("c", "d")])
tpo = Relation.from_labels(["x1", "x2", "x3", "x4"], [("x1", "x2"), ("x2", "x3"), ("x1", "x3")])

for cls in (MemberClass.STRICT_LINEAR, MemberClass.INTERVAL_ORDER, MemberClass.LINEAR_INTERVAL):
    rz = realizer(tpt, cls)
    print(f"{cls.value:>15}: {rz.size} members, {rz.nonlinear_count} non-linear")

print()
print(f"{'':>6} {'dim':>4} {'idim':>5} {'sdim':>5} {'lidim':>7} {'lsdim':>7}")
for name, r in (("2+2", tpt), ("3+1", tpo), ("S3", s3)):
    vals = [dimension(r, q) for q in ("dim", "idim", "sdim", "lidim", "lsdim")]
    for cert in vals:
        assert cert.verify()
    print(f"{name:>6} {vals[0].value:>4} {vals[1].value:>5} {vals[2].value:>5} "
          f"{str(vals[3].value):>7} {str(vals[4].value):>7}")
