"""Enumerate small semigroups and probe all pairs for power-semigroup
isomorphisms.

Non-isomorphic carriers with isomorphic power semigroups have never been
found at these orders; the probe exists to keep checking rather than to
assume. A hit would be the most valuable possible output of this script.

Run:  python demos/catalog_probe.py
"""

import json

from powersemi import (enumerate_semigroups, global_iso_probe,
                       singleton_characterization_check)

print("=" * 72)
print("Catalog sizes (one representative per isomorphism class)")
print("=" * 72)
for n in (1, 2, 3, 4):
    entries = enumerate_semigroups(n)
    commutative = sum(1 for e in entries if e.semigroup.commutative)
    groups = sum(1 for e in entries if e.semigroup.is_cancellative_semigroup())
    print(f"order {n}: {len(entries):4d} classes "
          f"({commutative} commutative, {groups} groups)")

print()
print("=" * 72)
print("Pairwise power-semigroup probe")
print("=" * 72)
for n in (2, 3, 4):
    report = global_iso_probe(n)
    print(json.dumps({k: v for k, v in report.items()}, indent=2))
    assert report["counterexamples"] == [], "a finding! preserve this output"

print()
print("=" * 72)
print("Classifier agreement sweep (the executable characterization)")
print("=" * 72)
report = singleton_characterization_check(4, seed=0)
print(json.dumps(report, indent=2))
