import pytest

from hybridorder import (
    CyclicInput,
    MemberClass,
    MemberConstructionFailed,
    PreconditionError,
    Relation,
    SymmetricPairError,
    classify,
    realizer,
    transitive_closure,
    verify_realizer,
)

import oracles
from conftest import as_pairs, rel


def test_antichain_strict_linear(antichain2):
    rz = realizer(antichain2, MemberClass.STRICT_LINEAR)
    assert {m.label_pairs for m in rz.members} == {frozenset({("x1", "x2")}), frozenset({("x2", "x1")})}


def test_interval_order_single_member(three_plus_one):
    ok, detail = verify_realizer(three_plus_one, [three_plus_one], MemberClass.INTERVAL_ORDER)
    assert ok and detail is None


@pytest.mark.parametrize("cls", [c for c in MemberClass if not c.reflexive])
def test_two_plus_two_realizers(two_plus_two, cls):
    rz = realizer(two_plus_two, cls)
    inc = 4  # unordered incomparable pairs of the 2+2
    assert len(rz.members) <= 1 + 2 * inc
    ok, _ = verify_realizer(two_plus_two, rz.members, cls, rz.decompositions)
    assert ok
    assert oracles.intersection([as_pairs(m) for m in rz.members], 4) == as_pairs(two_plus_two)


def test_verify_realizer_failures(chain3, antichain2):
    broken = rel(["x1", "x2", "x3"], [("x1", "x2"), ("x2", "x3")])
    ok, detail = verify_realizer(chain3, [broken], MemberClass.STRICT_LINEAR)
    assert not ok and "member 0" in detail
    single = rel(["x1", "x2"], [("x1", "x2")])
    ok, detail = verify_realizer(antichain2, [single], MemberClass.STRICT_LINEAR)
    assert not ok and "intersection" in detail


def test_reflexive_classes():
    r = rel(["a", "b", "c"], [("a", "a"), ("b", "b"), ("c", "c"), ("a", "b")])
    for cls in (MemberClass.LINEAR, MemberClass.STRONG_INTERVAL):
        rz = realizer(r, cls)
        assert rz.target == r
        for m in rz.members:
            assert classify(m).reflexive
    with pytest.raises(PreconditionError):
        realizer(rel(["a", "b"], [("a", "b")]), MemberClass.LINEAR)
    with pytest.raises(SymmetricPairError):
        realizer(rel(["a", "b"], [("a", "a"), ("b", "b"), ("a", "b"), ("b", "a")]), MemberClass.STRONG_INTERVAL)


def test_cyclic_input():
    with pytest.raises(CyclicInput):
        realizer(rel(["a", "b"], [("a", "b"), ("b", "a")]), MemberClass.INTERVAL_ORDER)


def test_hybrid_member_failure_on_standard_example(s3):
    with pytest.raises(MemberConstructionFailed):
        realizer(s3, MemberClass.LINEAR_INTERVAL)


def test_strict_linear_members_extend_closure():
    rng = oracles.rng_for("realize-linear")
    for _ in range(100):
        n = rng.randint(1, 6)
        r = Relation([str(i) for i in range(n)], oracles.random_acyclic_pairs(n, rng))
        c = as_pairs(transitive_closure(r))
        for m in realizer(r, MemberClass.STRICT_LINEAR).members:
            assert oracles.strict_linear(n, as_pairs(m)) and c <= as_pairs(m)
