import itertools

import pytest

from hybridorder import Relation, WitnessKind, classify, interval_violations, semiorder_violations

import oracles
from conftest import rel


def test_two_plus_two_report(two_plus_two):
    rep = classify(two_plus_two)
    assert rep.strict_partial_order and not rep.interval_order and not rep.semiorder
    w = rep.witnesses["interval_order"]
    assert w.kind is WitnessKind.TWO_PLUS_TWO and w.verify(two_plus_two)


def test_three_plus_one_report(three_plus_one):
    rep = classify(three_plus_one)
    assert rep.interval_order and not rep.semiorder
    w = rep.witnesses["semiorder"]
    assert w.kind is WitnessKind.THREE_PLUS_ONE and w.verify(three_plus_one)


def test_chain_is_everything_strict(chain3):
    rep = classify(chain3)
    assert rep.strict_linear_order and rep.semiorder and rep.interval_order
    assert not rep.linear_order and not rep.reflexive


def test_empty_ground_set_all_true():
    rep = classify(Relation([]))
    assert all(rep.flags().values())


def test_strong_interval():
    r = rel(["a", "b"], [("a", "a"), ("b", "b"), ("a", "b")])
    rep = classify(r)
    assert rep.strong_interval_order and rep.linear_order and rep.partial_order


def test_violation_set_of_two_plus_two():
    r = rel(["x1", "x2", "x3", "x4"], [("x1", "x2"), ("x3", "x4")])
    got = interval_violations(r)
    assert (("x1", "x4"), ("x2", "x3")) in got
    assert (("x3", "x2"), ("x4", "x1")) in got
    assert len(got) == 2


def test_semiorder_violation_form(three_plus_one):
    assert ("x1", "x2", "x3", "x4") in semiorder_violations(three_plus_one)


@pytest.mark.parametrize("n", [0, 1, 2, 3, 4])
def test_flags_match_oracle_on_all_small_relations(n):
    cells = [(i, j) for i in range(n) for j in range(n)]
    rng = oracles.rng_for("classify", n)
    subsets = itertools.product((0, 1), repeat=len(cells)) if n <= 3 else (
        [rng.random() < 0.4 for _ in cells] for _ in range(1500)
    )
    for bits in subsets:
        pairs = {c for c, b in zip(cells, bits) if b}
        r = Relation([str(i) for i in range(n)], pairs)
        rep = classify(r)
        assert rep.transitive == oracles.transitive(n, pairs)
        assert rep.acyclic == oracles.acyclic(n, pairs)
        assert rep.strict_partial_order == oracles.strict_order(n, pairs)
        assert rep.strict_linear_order == oracles.strict_linear(n, pairs)
        assert rep.interval_order == oracles.interval_order(n, pairs)
        assert rep.semiorder == oracles.semiorder(n, pairs)
        for name, w in rep.witnesses.items():
            assert w.verify(r), name
