import pytest

from hybridorder import (
    DuplicateElement,
    GroundSetMismatch,
    Relation,
    UnknownElement,
    Witness,
    WitnessKind,
    asymmetric_part,
    is_acyclic,
    is_extension,
    is_transitively_antisymmetric,
    reflexive_closure,
    transitive_closure,
)

import oracles
from conftest import as_pairs, rel


def test_construction_and_lookup():
    r = rel(["x1", "x2", "x3"], [("x1", "x2")])
    assert r.n == 3
    assert r.related("x1", "x2")
    assert ("x1", "x2") in r
    assert (1, 0) not in r
    assert r.label_pairs == {("x1", "x2")}
    assert len(r) == 1


def test_duplicate_and_unknown_labels():
    with pytest.raises(DuplicateElement):
        Relation(["a", "a"])
    with pytest.raises(UnknownElement):
        rel(["a"], [("a", "b")])


def test_ground_set_mismatch():
    with pytest.raises(GroundSetMismatch):
        rel(["a", "b"]) | rel(["b", "a"])
    with pytest.raises(GroundSetMismatch):
        is_extension(rel(["a"]), rel(["b"]))


def test_closure_matches_oracle():
    rng = oracles.rng_for("closure")
    for _ in range(200):
        n = rng.randint(0, 7)
        pairs = [(rng.randrange(n), rng.randrange(n)) for _ in range(rng.randint(0, 2 * n))] if n else []
        r = Relation([str(i) for i in range(n)], pairs)
        assert as_pairs(transitive_closure(r)) == oracles.closure(n, pairs)
        assert is_acyclic(r)[0] == oracles.acyclic(n, set(pairs))


def test_reflexive_closure_and_asymmetric_part():
    r = rel(["a", "b", "c"], [("a", "b"), ("b", "a"), ("b", "c"), ("c", "c")])
    assert reflexive_closure(r).label_pairs == r.label_pairs | {("a", "a"), ("b", "b")}
    assert asymmetric_part(r).label_pairs == {("b", "c")}


def test_cycle_witness_verifies():
    r = rel(["a", "b", "c"], [("a", "b"), ("b", "c"), ("c", "a")])
    ok, w = is_acyclic(r)
    assert not ok
    assert w.kind is WitnessKind.CYCLE
    assert w.members[0] == w.members[-1]
    assert w.verify(r)


def test_self_loop_is_a_cycle():
    ok, w = is_acyclic(rel(["a"], [("a", "a")]))
    assert not ok and w.members == ("a", "a")


def test_transitive_antisymmetry():
    assert is_transitively_antisymmetric(rel(["a", "b"], [("a", "a"), ("a", "b")]))[0]
    r = rel(["a", "b", "c"], [("a", "b"), ("b", "c"), ("c", "a")])
    ok, w = is_transitively_antisymmetric(r)
    assert not ok
    assert w.kind is WitnessKind.SYMMETRIC_PAIR and w.verify(r)


def test_extension_definition():
    base = rel(["a", "b"], [("a", "b")])
    assert is_extension(base, base)
    # adding the reverse destroys the strict pair
    assert not is_extension(base, rel(["a", "b"], [("a", "b"), ("b", "a")]))
    assert not is_extension(base, rel(["a", "b"]))


def test_witness_rejects_bad_members():
    r = rel(["a", "b"], [("a", "b")])
    assert not Witness(WitnessKind.CYCLE, ("a", "b", "a")).verify(r)
    assert not Witness(WitnessKind.CYCLE, ("a", "z", "a")).verify(r)
