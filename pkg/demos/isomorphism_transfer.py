"""Isomorphism search, and moving isomorphisms between carrier and power level.

Run:  python demos/isomorphism_transfer.py
"""

from powersemi import (Morphism, all_isomorphisms, build_power_semigroup,
                       describe_fingerprint_mismatch, find_isomorphism,
                       fingerprint, full_family, lift_isomorphism,
                       restrict_isomorphism)
from powersemi import zoo

z3 = zoo.cyclic_group(3)
z4 = zoo.cyclic_group(4)
klein = zoo.klein_four()

print("=" * 72)
print("Deciding isomorphism")
print("=" * 72)
verdict = find_isomorphism(z4, klein)
reason = describe_fingerprint_mismatch(fingerprint(z4), fingerprint(klein))
print(f"Z4 vs Klein four-group: isomorphic={verdict is not None} ({reason})")
verdict = find_isomorphism(zoo.left_zero(2), zoo.right_zero(2))
print(f"left-zero vs right-zero, order 2: isomorphic={verdict is not None}")

print()
print("=" * 72)
print("Lifting the negation automorphism of Z3 to P(Z3)")
print("=" * 72)
negation = Morphism(z3, z3, [0, 2, 1])
lifted = lift_isomorphism(negation)
print("subset image of every element of P(Z3):")
for mask in range(1, 8):
    image = lifted.mapping[mask - 1] + 1
    src = {x for x in range(3) if mask >> x & 1}
    dst = {x for x in range(3) if image >> x & 1}
    print(f"  {sorted(src)} -> {sorted(dst)}")

print()
print("=" * 72)
print("Every automorphism of P(Z3) restricts to the carrier")
print("=" * 72)
power = build_power_semigroup(z3)
family = full_family(z3)
autos = list(all_isomorphisms(power, power))
print(f"P(Z3) has {len(autos)} automorphisms; Z3 itself has 2. The extra")
print("ones fix every singleton and translate the two-element subsets:")
for auto in autos:
    small = restrict_isomorphism(auto, family, family)
    doubleton_image = auto.mapping[2] + 1  # image of {0,1}, mask 3
    dst = sorted(x for x in range(3) if doubleton_image >> x & 1)
    print(f"  restriction {list(small.mapping)}   {{0,1}} -> {dst}")

print()
print("round trip: restrict(lift(negation)) == negation:",
      restrict_isomorphism(lifted, family, family) == negation)
