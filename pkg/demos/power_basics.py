"""Tour of setwise products and materialized power semigroups.

Run:  python demos/power_basics.py
"""

from powersemi import (SubsetElement, build_power_semigroup, format_table,
                       full_family, family_report)
from powersemi import zoo

print("=" * 64)
print("Setwise products over Z3 (addition mod 3)")
print("=" * 64)

z3 = zoo.cyclic_group(3)
x = SubsetElement.from_elements(z3, [0, 1])
y = SubsetElement.from_elements(z3, [0, 2])
print(f"{x} * {y} = {x * y}")
print(f"identity singleton acts trivially: {{0}} * {y} = "
      f"{SubsetElement.from_elements(z3, [0]) * y}")

print()
print("=" * 64)
print("The power semigroup of Z2 has 3 elements; the full subset absorbs")
print("=" * 64)

z2 = zoo.cyclic_group(2)
power = build_power_semigroup(z2)
print(f"order: {power.order}, commutative: {power.commutative}, "
      f"identity element index: {power.identity}")
print("Cayley table (element k is the subset with mask k+1):")
print(format_table(power))

print("=" * 64)
print("Every carrier element embeds as its singleton")
print("=" * 64)
for a in range(z3.order):
    for b in range(z3.order):
        lhs = SubsetElement(z3, 1 << a) * SubsetElement(z3, 1 << b)
        print(f"  {{{a}}} * {{{b}}} = {lhs}  (carrier: {a}+{b} = "
              f"{z3.rows[a][b]} mod 3)")

print()
print("=" * 64)
print("The family of all non-empty subsets is downward complete")
print("=" * 64)
print(family_report(full_family(z3)))
