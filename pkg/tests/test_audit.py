import pytest

from hybridorder import classify
from hybridorder.audit import THEOREMS, random_acyclic, reverify, run_audit

import oracles


def test_generator_is_acyclic_and_seeded():
    a = [random_acyclic(6, oracles.rng_for("gen")) for _ in range(3)]
    b = [random_acyclic(6, oracles.rng_for("gen")) for _ in range(3)]
    assert a == b
    for r in a:
        assert classify(r).acyclic


@pytest.mark.parametrize("theorem", THEOREMS)
def test_every_theorem_runs(theorem):
    rep = run_audit(theorem, 5, 10, 3)
    assert len(rep.verdicts) == 10
    assert rep.to_dict()["theorem"] == theorem


def test_reproducible():
    assert run_audit("4.9", 5, 30, 11).to_dict() == run_audit("4.9", 5, 30, 11).to_dict()


def test_counterexample_reverifies():
    rep = run_audit("3.9", 6, 20, 0)
    assert rep.failed
    for c in rep.counterexamples:
        assert reverify("3.9", c["relation"])


def test_unknown_theorem():
    with pytest.raises(ValueError):
        run_audit("9.9", 3, 1, 0)
