import itertools

import pytest

from hybridorder import (
    CyclicInput,
    NoDecompositionFound,
    PartnerClass,
    Relation,
    SearchBudgetExhausted,
    SymmetricPairError,
    classify,
    decompose,
    interval_extension,
    is_extension,
    linear_extension,
    linear_interval_decompose,
    linear_semiorder_decompose,
    literal_decomposition,
    semiorder_extension,
    strong_interval_extension,
    transitive_closure,
)
from hybridorder.extend import LiteralConstructionCycle, saturate_interval, saturate_semiorder

import oracles
from conftest import as_pairs, rel, standard_example

X4 = ["x1", "x2", "x3", "x4"]


def test_linear_extension_examples(chain3):
    assert linear_extension(chain3) == chain3
    assert linear_extension(rel(["x1", "x2"])).label_pairs == {("x1", "x2")}
    with pytest.raises(CyclicInput) as exc:
        linear_extension(rel(["x1", "x2"], [("x1", "x2"), ("x2", "x1")]))
    assert exc.value.witness.verify(rel(["x1", "x2"], [("x1", "x2"), ("x2", "x1")]))


def test_reflexive_linear_extension():
    r = rel(["a", "b"], [("a", "a"), ("b", "a")])
    out = linear_extension(r, "reflexive")
    assert classify(out).linear_order and is_extension(r, out)
    with pytest.raises(SymmetricPairError):
        linear_extension(rel(["a", "b"], [("a", "b"), ("b", "a")]), "reflexive")


def test_interval_extension_of_two_plus_two():
    r = rel(X4, [("x1", "x2"), ("x3", "x4")])
    assert interval_extension(r).label_pairs == {("x1", "x2"), ("x3", "x4"), ("x1", "x4"), ("x3", "x2")}


def test_interval_extension_fixes_interval_orders(three_plus_one):
    assert interval_extension(three_plus_one) == three_plus_one


def test_strong_interval_extension_examples():
    r = rel(["x1", "x2"], [("x1", "x1"), ("x1", "x2")])
    assert strong_interval_extension(r).label_pairs == {("x1", "x1"), ("x2", "x2"), ("x1", "x2")}
    loops = rel(X4, [("x1", "x2"), ("x3", "x4")] + [(x, x) for x in X4])
    out = strong_interval_extension(loops)
    expect = interval_extension(rel(X4, [("x1", "x2"), ("x3", "x4")])).label_pairs | {(x, x) for x in X4}
    assert out.label_pairs == expect
    with pytest.raises(SymmetricPairError):
        strong_interval_extension(rel(["x1", "x2"], [("x1", "x2"), ("x2", "x1")]))


def test_semiorder_extension_examples():
    r2 = rel(X4, [("x1", "x2"), ("x1", "x3"), ("x2", "x3")])
    assert semiorder_extension(r2).label_pairs == {("x1", "x2"), ("x1", "x3"), ("x2", "x3"), ("x1", "x4")}
    # another semiorder extension of the same relation is accepted by the checks
    alt = rel(X4, [("x1", "x2"), ("x1", "x3"), ("x2", "x3"), ("x4", "x3")])
    assert is_extension(r2, alt) and classify(alt).semiorder
    chain = rel(["a", "b"], [("a", "b")])
    assert semiorder_extension(chain) == chain


def test_saturation_fallback_fixture():
    # smallest input found where adding a whole round at once closes a cycle
    r = Relation.from_labels(
        [f"x{i}" for i in range(1, 7)],
        [("x1", "x3"), ("x1", "x4"), ("x4", "x3"), ("x5", "x2"), ("x6", "x2"), ("x6", "x5")],
    )
    rows, trace = saturate_interval(r.rows)
    assert trace.fallback_rounds >= 1
    out = interval_extension(r)
    assert classify(out).interval_order and is_extension(r, out)


def test_saturation_rounds_bounded():
    rng = oracles.rng_for("rounds")
    for _ in range(200):
        n = rng.randint(1, 7)
        r = Relation([str(i) for i in range(n)], oracles.random_acyclic_pairs(n, rng))
        _, trace = saturate_interval(r.rows)
        assert trace.rounds <= n * n
        _, ops = saturate_semiorder(interval_extension(r).rows)


def test_decompose_two_plus_two(two_plus_two):
    for partner in PartnerClass:
        d = decompose(two_plus_two, partner)
        order = [x for x in sorted(two_plus_two.elements, key=lambda e: -sum(d.linear_part.related(e, f) for f in "abcd"))]
        assert order == ["c", "d", "a", "b"]
        assert d.partner.label_pairs == {("a", "b"), ("c", "d"), ("a", "d")}
        assert d.linear_part & d.partner == two_plus_two
        assert d.verified


def test_decompose_linear_input(chain3):
    d = linear_interval_decompose(chain3)
    assert d.linear_part == chain3 and d.partner == chain3
    d = linear_semiorder_decompose(chain3)
    assert d.linear_part == chain3 and d.partner == chain3


def test_decompose_cyclic():
    with pytest.raises(CyclicInput):
        linear_interval_decompose(rel(["a", "b"], [("a", "b"), ("b", "a")]))
    with pytest.raises(CyclicInput):
        linear_semiorder_decompose(rel(["a", "b"], [("a", "b"), ("b", "a")]))


def test_literal_construction_regression():
    c = rel(["1", "2", "3"], [("1", "2")])
    q = rel(["1", "2", "3"], [("1", "2"), ("1", "3"), ("3", "2")])
    with pytest.raises(LiteralConstructionCycle) as exc:
        literal_decomposition(c, q)
    w = exc.value.witness
    assert w.verify(exc.value.reversal)
    assert set(w.members) == {"1", "2", "3"}
    d = decompose(c, seed_partner=q)
    assert d.route == "search"
    assert d.linear_part & d.partner == c
    assert classify(d.linear_part).strict_linear_order and classify(d.partner).interval_order


def test_standard_example_has_no_decomposition(s3):
    for partner in PartnerClass:
        with pytest.raises(NoDecompositionFound) as exc:
            decompose(s3, partner, budget=None)
        assert exc.value.exhaustive


def _brute_decomposable(n, c):
    """Try every linear extension L and every Q with C <= Q <= C + reversed(L - C)."""
    for perm in itertools.permutations(range(n)):
        lin = frozenset((perm[i], perm[j]) for i in range(n) for j in range(i + 1, n))
        if not c <= lin:
            continue
        flips = [(b, a) for a, b in lin if (a, b) not in c]
        for mask in range(1 << len(flips)):
            q = frozenset(c) | {flips[k] for k in range(len(flips)) if mask >> k & 1}
            if oracles.interval_order(n, q) and oracles.intersection([lin, q], n) == c:
                return True
    return False


def test_seven_element_counterexample_against_brute_force():
    labels = [f"x{i}" for i in range(1, 8)]
    pairs = [("x1", "x3"), ("x1", "x5"), ("x2", "x3"), ("x2", "x6"), ("x4", "x5"), ("x4", "x6"), ("x7", "x5"), ("x7", "x6")]
    r = rel(labels, pairs)
    with pytest.raises(NoDecompositionFound):
        linear_interval_decompose(r, budget=None)
    c = oracles.closure(7, {(int(a[1]) - 1, int(b[1]) - 1) for a, b in pairs})
    assert not _brute_decomposable(7, c)


def test_search_agrees_with_brute_force_small():
    rng = oracles.rng_for("decompose-brute")
    for _ in range(60):
        n = rng.randint(2, 5)
        pairs = oracles.random_acyclic_pairs(n, rng)
        r = Relation([str(i) for i in range(n)], pairs)
        c = oracles.closure(n, pairs)
        try:
            d = linear_interval_decompose(r, budget=None)
            found = True
            assert as_pairs(d.linear_part & d.partner) == c
        except NoDecompositionFound:
            found = False
        assert found == _brute_decomposable(n, c)


def test_budget_exhaustion():
    # a tiny budget cannot settle the standard example
    with pytest.raises(SearchBudgetExhausted):
        decompose(standard_example(4), budget=1)


def test_extensions_property_random():
    rng = oracles.rng_for("extend-prop")
    for _ in range(200):
        n = rng.randint(1, 7)
        r = Relation([str(i) for i in range(n)], oracles.random_acyclic_pairs(n, rng))
        assert classify(linear_extension(r)).strict_linear_order
        assert classify(interval_extension(r)).interval_order
        assert classify(semiorder_extension(r)).semiorder
        for op in (linear_extension, interval_extension, semiorder_extension):
            assert is_extension(r, op(r))
            assert oracles.is_extension(set(r.iter_pairs()), as_pairs(op(r)))
        assert transitive_closure(r) <= semiorder_extension(r)
