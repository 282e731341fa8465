"""Classifying cancellative members of subset families, two ways.

The brute-force route checks injectivity of the multiplication maps; the
singleton rule reads the answer off the carrier. For downward-complete
families over commutative carriers the two must coincide, and any
non-singleton member comes with an explicit two-set witness showing why
it fails.

Run:  python demos/cancellative_classification.py
"""

from powersemi import (SubsetFamily, cancellative_elements_bruteforce,
                       full_family, mask_of, singleton_cancellative_elements,
                       witness_noncancellative, PreconditionViolated)
from powersemi import zoo


def show(name, family):
    brute = sorted(m.mask for m in cancellative_elements_bruteforce(family))
    rule = sorted(m.mask for m in singleton_cancellative_elements(family))
    marker = "AGREE" if brute == rule else "*** DISAGREE ***"
    print(f"{name:<28} bruteforce={brute} rule={rule}  {marker}")


print("=" * 72)
print("Classifier agreement on downward-complete families")
print("=" * 72)
show("P(Z3)", full_family(zoo.cyclic_group(3)))
show("P(Z4)", full_family(zoo.cyclic_group(4)))
show("P(min-chain of length 2)", full_family(zoo.min_chain(2)))
show("P(null semigroup, n=2)", full_family(zoo.null_semigroup(2)))

print()
print("=" * 72)
print("Witness construction: why non-singletons always fail")
print("=" * 72)
for carrier, name, subset in (
        (zoo.min_chain(2), "min-chain", {0, 1}),
        (zoo.cyclic_group(3), "Z3", {0, 1}),
        (zoo.cyclic_group(4), "Z4", {0, 1, 3})):
    family = full_family(carrier)
    witness = witness_noncancellative(mask_of(subset), family)
    print(f"{name}, A={sorted(subset)}: {witness.case_tag} gives "
          f"lhs={sorted(witness.lhs.elements())}, "
          f"rhs={sorted(witness.rhs.elements())}; "
          f"A*lhs == A*rhs = {sorted((witness.multiplier * witness.lhs).elements())}")

print()
print("=" * 72)
print("Observation: a subsemigroup with all singletons, not subset-closed")
print("=" * 72)
z3 = zoo.cyclic_group(3)
family = SubsetFamily(z3, [1, 2, 4, 7])  # singletons plus the full set
print(f"members: {family.masks}, subsemigroup={family.is_subsemigroup}, "
      f"downward_complete={family.is_downward_complete}")
brute = sorted(m.mask for m in cancellative_elements_bruteforce(family))
print(f"brute-force cancellative members: {brute}")
try:
    singleton_cancellative_elements(family)
except PreconditionViolated as exc:
    print(f"singleton rule refuses it: {exc}")
print("On this example the brute-force answer happens to be exactly the")
print("singletons of cancellative carrier elements, but outside the")
print("downward-complete hypothesis that is an observation, not a theorem.")
