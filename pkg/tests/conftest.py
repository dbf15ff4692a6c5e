import pytest

from hybridorder import Relation

ACCEPTANCE = {}


def record(criterion, ok, detail):
    ACCEPTANCE[criterion] = (ok, detail)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {k}: {detail}")


def rel(elements, pairs=()):
    return Relation.from_labels(elements, pairs)


@pytest.fixture
def two_plus_two():
    return rel(["a", "b", "c", "d"], [("a", "b"), ("c", "d")])


@pytest.fixture
def chain3():
    return rel(["x1", "x2", "x3"], [("x1", "x2"), ("x2", "x3"), ("x1", "x3")])


@pytest.fixture
def antichain2():
    return rel(["x1", "x2"])


@pytest.fixture
def three_plus_one():
    return rel(["x1", "x2", "x3", "x4"], [("x1", "x2"), ("x2", "x3"), ("x1", "x3")])


def standard_example(k=3):
    a = [f"a{i}" for i in range(1, k + 1)]
    b = [f"b{i}" for i in range(1, k + 1)]
    return rel(a + b, [(a[i], b[j]) for i in range(k) for j in range(k) if i != j])


@pytest.fixture
def s3():
    return standard_example(3)


def as_pairs(r):
    return frozenset(r.iter_pairs())
