"""Classify the cancellative members of a subset family, two ways.

The brute-force route checks injectivity of multiplication maps directly
and is the oracle of record. The singleton rule predicts the answer for a
downward-complete family over a commutative carrier without touching any
non-singleton product: exactly the singletons {u} with u cancellative in
the carrier. For every non-singleton member an explicit witness of
non-cancellativity can be constructed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .errors import PreconditionViolated
from .power import SubsetElement, bits, mask_product

CASE1 = "Case1"
CASE2 = "Case2"
BRUTE_FORCE = "BruteForce"


@dataclass(frozen=True)
class CancellationWitness:
    """Distinct sets lhs != rhs that a multiplier cannot tell apart.

    multiplier * lhs == multiplier * rhs certifies that the multiplier is
    not (left) cancellative in any family containing all three sets. The
    finite case stores SubsetElement values; the additive case stores
    frozensets of non-negative integers.
    """

    multiplier: Any
    lhs: Any
    rhs: Any
    case_tag: str

    def report(self):
        def encode(value):
            if isinstance(value, SubsetElement):
                return value.mask
            return sorted(value)

        return {
            "case": self.case_tag,
            "multiplier": encode(self.multiplier),
            "lhs": encode(self.lhs),
            "rhs": encode(self.rhs),
        }


def is_cancellative_in(member, family, side="both"):
    """Brute-force cancellativity of one member inside a product-closed family.

    Left cancellative means X -> member*X is injective on the family;
    right swaps the factors; "both" requires the two.
    """
    mask = member.mask if isinstance(member, SubsetElement) else int(member)
    S = family.semigroup
    if side in ("left", "both"):
        images = {mask_product(S, mask, x) for x in family.masks}
        if len(images) != len(family.masks):
            return False
    if side in ("right", "both"):
        images = {mask_product(S, x, mask) for x in family.masks}
        if len(images) != len(family.masks):
            return False
    return True


def cancellative_elements_bruteforce(family):
    """All members that are cancellative inside the family; the oracle route."""
    if not family.is_subsemigroup:
        raise PreconditionViolated("family is not closed under products")
    return {SubsetElement(family.semigroup, m) for m in family.masks
            if is_cancellative_in(m, family)}


def singleton_cancellative_elements(family):
    """Predicted cancellative members: singletons of carrier-cancellative elements.

    Valid only for a downward-complete family over a commutative carrier;
    anything else is rejected. No product of non-singleton members is
    inspected, which is the entire point of the rule.
    """
    S = family.semigroup
    if not S.commutative:
        raise PreconditionViolated("NotCommutative: carrier must be commutative")
    if not family.is_downward_complete:
        raise PreconditionViolated(
            "NotDownwardComplete: family must be downward complete")
    return {SubsetElement(S, 1 << u) for u in range(S.order)
            if S.is_cancellative(u)}


def witness_noncancellative(subset, family):
    """Deterministic non-cancellativity witness for a member with >= 2 elements.

    Requires a commutative carrier and a downward-complete family
    containing the subset, which guarantees both returned sets are
    members. Writing A for the subset, the construction scans ordered
    pairs (a, b) of distinct elements of A in ascending order:

    * if some pair has a*a == a*b, the witness is (A, A, A minus {a});
    * otherwise a, b are the two smallest elements of A and the witness
      is (A, A*A, A*A minus {a*b}); b*b then always survives in the rhs.

    Either way multiplier * lhs == multiplier * rhs on both sides, which
    is re-checked before returning.
    """
    S = family.semigroup
    if not S.commutative:
        raise PreconditionViolated("NotCommutative: carrier must be commutative")
    if not family.is_downward_complete:
        raise PreconditionViolated(
            "NotDownwardComplete: family must be downward complete")
    amask = subset.mask if isinstance(subset, SubsetElement) else int(subset)
    if amask.bit_count() < 2:
        raise PreconditionViolated("subset must have at least two elements")
    if amask not in family:
        raise PreconditionViolated("subset is not a member of the family")

    rows = S.rows
    elems = list(bits(amask))
    hit = None
    for a in elems:
        for b in elems:
            if a != b and rows[a][a] == rows[a][b]:
                hit = (a, b)
                break
        if hit:
            break

    if hit is not None:
        a, _ = hit
        lhs_mask = amask
        rhs_mask = amask & ~(1 << a)
        tag = CASE1
    else:
        a, b = elems[0], elems[1]
        square = mask_product(S, amask, amask)
        lhs_mask = square
        rhs_mask = square & ~(1 << rows[a][b])
        tag = CASE2
        # b*b != a*b here, otherwise the pair (b, a) would have hit above.
        assert rhs_mask >> rows[b][b] & 1

    assert lhs_mask != rhs_mask
    assert mask_product(S, amask, lhs_mask) == mask_product(S, amask, rhs_mask)
    assert mask_product(S, lhs_mask, amask) == mask_product(S, rhs_mask, amask)
    return CancellationWitness(
        SubsetElement(S, amask),
        SubsetElement(S, lhs_mask),
        SubsetElement(S, rhs_mask),
        tag,
    )


def find_witness_bruteforce(member, family):
    """Scan the family for any pair the member maps to the same left product.

    Independent of the constructive route; returns None when the member
    is left cancellative in the family.
    """
    mask = member.mask if isinstance(member, SubsetElement) else int(member)
    S = family.semigroup
    seen = {}
    for x in family.masks:
        p = mask_product(S, mask, x)
        if p in seen:
            return CancellationWitness(
                SubsetElement(S, mask),
                SubsetElement(S, seen[p]),
                SubsetElement(S, x),
                BRUTE_FORCE,
            )
        seen[p] = x
    return None


def verify_witness(witness, family=None):
    """Re-check a finite-carrier witness from scratch.

    Confirms lhs != rhs, equal left products, and membership of both
    sides whenever a downward-complete family containing the multiplier
    is supplied.
    """
    mult, lhs, rhs = witness.multiplier, witness.lhs, witness.rhs
    S = mult.semigroup
    if lhs.mask == rhs.mask:
        return False
    if mask_product(S, mult.mask, lhs.mask) != mask_product(S, mult.mask, rhs.mask):
        return False
    if family is not None and family.is_downward_complete \
            and mult.mask in family:
        if lhs.mask not in family or rhs.mask not in family:
            return False
    return True
