"""Randomized audits of the extension, decomposition, realizer and embedding claims.

Every instance is a seeded random acyclic relation.  A claim failure is
recorded as a counterexample only after it is reproduced on the relation
re-read from its serialized form.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from .classify import classify
from .dimension import interval_dim, order_dim
from .errors import MemberConstructionFailed, NoDecompositionFound
from .extend import PartnerClass, decompose, interval_extension, semiorder_extension
from .geometry import (
    _strong_interval_tiebreak,
    box_embedding,
    diagonal_embedding,
    product_linearization,
    product_relation,
)
from .io import RelationDocument
from .realize import MemberClass, realizer
from .relation import Relation, closure_rows, is_extension

THEOREMS = ("3.5", "3.7", "3.8", "3.9", "4.1", "4.5", "4.9", "4.10", "4.11", "4.13")


def random_acyclic(n: int, rng: random.Random) -> Relation:
    """Forward pairs of a random permutation, each kept with probability 1/2."""
    perm = list(range(n))
    rng.shuffle(perm)
    pairs = [(perm[i], perm[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5]
    return Relation([f"x{k + 1}" for k in range(n)], pairs)


# Each check returns None when the claim holds, else a short reason.


def _check_extension(op, flag):
    def check(r: Relation):
        q = op(r)
        if not is_extension(r, q):
            return "output is not an extension"
        if not getattr(classify(q), flag):
            return f"output is not {flag}"
        return None

    return check


def _check_decompose(partner: PartnerClass):
    def check(r: Relation):
        try:
            decompose(r, partner, budget=None)
        except NoDecompositionFound as exc:
            return f"exhaustive search found no decomposition ({exc.nodes} nodes)"
        return None

    return check


def _check_realizer(cls: MemberClass):
    def check(r: Relation):
        try:
            realizer(r, cls)
        except MemberConstructionFailed as exc:
            return str(exc)
        return None

    return check


def _check_product(r: Relation):
    cert = order_dim(r)
    family = list(cert.witness.members)
    c = closure_rows(r.rows)
    strict = product_relation(family, "strict")
    image = [strict.index(t) for t in diagonal_embedding(r, family)]
    for x in range(r.n):
        for y in range(r.n):
            if bool(c[x] >> y & 1) != strict.has(image[x], image[y]):
                return "diagonal embedding does not preserve dominance"
    lins = [product_linearization(family, i) for i in range(len(family))]
    for lin in lins:
        if not classify(lin).linear_order:
            return "tie-break linearization is not a linear order"
        if not strict <= lin:
            return "tie-break linearization misses part of the strict product"
    meet = lins[0]
    for lin in lins[1:]:
        meet = meet & lin
    for x in range(r.n):
        for y in range(r.n):
            if x != y and bool(c[x] >> y & 1) != meet.has(image[x], image[y]):
                return "linearizations do not embed the closure"
    return None


def _check_boxes(r: Relation):
    cert = interval_dim(r)
    rep = box_embedding(r, cert.witness)
    if len(rep.intervals[0] if rep.intervals else ()) != cert.value and r.n:
        return "box coordinate count differs from idim"
    orders = [_strong_interval_tiebreak(rep, i) for i in range(cert.value)]
    for o in orders:
        if not classify(o).strong_interval_order:
            return "tie-break order is not a strong interval order"
    meet = orders[0]
    for o in orders[1:]:
        meet = meet & o
    if meet.without_diagonal() != rep.relation:
        return "tie-break orders do not embed the closure"
    return None


CHECKS: dict[str, Callable[[Relation], str | None]] = {
    "3.5": _check_extension(interval_extension, "interval_order"),
    "3.7": _check_decompose(PartnerClass.INTERVAL_ORDER),
    "3.8": _check_extension(semiorder_extension, "semiorder"),
    "3.9": _check_decompose(PartnerClass.SEMIORDER),
    "4.1": _check_realizer(MemberClass.INTERVAL_ORDER),
    "4.5": _check_realizer(MemberClass.STRICT_LINEAR),
    "4.9": _check_realizer(MemberClass.LINEAR_INTERVAL),
    "4.10": _check_realizer(MemberClass.LINEAR_SEMIORDER),
    "4.11": _check_product,
    "4.13": _check_boxes,
}


@dataclass
class AuditReport:
    theorem: str
    n: int
    count: int
    seed: int
    verdicts: list[str] = field(default_factory=list)
    counterexamples: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return self.verdicts.count("pass")

    @property
    def failed(self) -> bool:
        return bool(self.counterexamples)

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "n": self.n,
            "count": self.count,
            "seed": self.seed,
            "passed": self.passed,
            "verdicts": list(self.verdicts),
            "counterexamples": list(self.counterexamples),
        }


def reverify(theorem: str, document: dict) -> bool:
    """True when the claim still fails on the re-read relation."""
    doc = RelationDocument(
        tuple(document["elements"]), tuple(tuple(p) for p in document["pairs"]), document.get("name")
    )
    return CHECKS[theorem](doc.to_relation()) is not None


def run_audit(theorem: str, n: int, count: int, seed: int) -> AuditReport:
    if theorem not in CHECKS:
        raise ValueError(f"unknown theorem {theorem!r}; expected one of {', '.join(THEOREMS)}")
    rng = random.Random(seed)
    report = AuditReport(theorem, n, count, seed)
    check = CHECKS[theorem]
    for k in range(count):
        r = random_acyclic(n, rng)
        reason = check(r)
        if reason is None:
            report.verdicts.append("pass")
            continue
        doc = RelationDocument.from_relation(r, name=f"instance-{k}").to_dict()
        if not reverify(theorem, doc):
            raise AssertionError(f"instance {k} failure did not reproduce after re-reading")
        report.verdicts.append("counterexample")
        report.counterexamples.append({"instance": k, "reason": reason, "relation": doc})
    return report
