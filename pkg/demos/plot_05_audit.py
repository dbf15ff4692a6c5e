"""
Auditing the claims on random instances
=======================================

Each audit draws seeded random acyclic relations and checks one claim.
Failures are kept only if they reproduce after a serialization round
trip, so a reported counterexample is always genuine.
"""

from hybridorder.audit import THEOREMS, run_audit

for theorem in THEOREMS:
    rep = run_audit(theorem, 6, 60, seed=0)
    print(f"{theorem:>5}: {rep.passed}/{rep.count} pass, {len(rep.counterexamples)} counterexamples")
    for c in rep.counterexamples[:1]:
        print("       instance", c["instance"], "pairs", c["relation"]["pairs"])
