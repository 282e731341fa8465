"""Setwise products of non-empty subsets, and families of such subsets.

Subsets of a carrier {0, ..., n-1} are bit masks: bit i set means element
i belongs to the subset. The full power semigroup of S lists all non-zero
masks in ascending order, so element k corresponds to mask k + 1.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass

from .errors import (AmbientMismatch, IndexOutOfRange, OrderCapExceeded,
                     PreconditionViolated)
from .semigroups import FiniteSemigroup

# Full materialization of the power semigroup is allowed for carriers up
# to this order by default (31 elements, 961 products).
POWER_CAP = 5


def bits(mask):
    """Yield the set bit positions of a mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(elements):
    out = 0
    for x in elements:
        out |= 1 << x
    return out


def submasks(mask):
    """Yield every non-empty submask of mask, including mask itself."""
    sub = mask
    while sub:
        yield sub
        sub = (sub - 1) & mask


def mask_product(semigroup, xmask, ymask):
    """Mask of {x*y : x in X, y in Y} for masks X, Y over the semigroup."""
    rows = semigroup.rows
    out = 0
    xm = xmask
    while xm:
        xlow = xm & -xm
        row = rows[xlow.bit_length() - 1]
        xm ^= xlow
        ym = ymask
        while ym:
            ylow = ym & -ym
            out |= 1 << row[ylow.bit_length() - 1]
            ym ^= ylow
    return out


class SubsetElement:
    """A non-empty subset of one ambient semigroup's carrier."""

    __slots__ = ("semigroup", "mask")

    def __init__(self, semigroup, mask):
        mask = int(mask)
        if mask <= 0 or mask >= (1 << semigroup.order):
            raise IndexOutOfRange(
                f"mask {mask} is not a non-empty subset of a carrier "
                f"of order {semigroup.order}")
        self.semigroup = semigroup
        self.mask = mask

    @classmethod
    def from_elements(cls, semigroup, elements):
        return cls(semigroup, mask_of(elements))

    def elements(self):
        return tuple(bits(self.mask))

    def __contains__(self, x):
        return bool(self.mask >> x & 1)

    def __len__(self):
        return self.mask.bit_count()

    def __mul__(self, other):
        return setwise_product(self, other)

    def __eq__(self, other):
        return (isinstance(other, SubsetElement)
                and self.mask == other.mask
                and self.semigroup == other.semigroup)

    def __hash__(self):
        return hash((self.mask, self.semigroup))

    def __repr__(self):
        return f"SubsetElement({{{', '.join(map(str, self.elements()))}}})"


def setwise_product(x, y):
    """The subset {a*b : a in x, b in y}; both over the same ambient."""
    if x.semigroup != y.semigroup:
        raise AmbientMismatch("operands live over different ambient semigroups")
    return SubsetElement(x.semigroup, mask_product(x.semigroup, x.mask, y.mask))


def build_power_semigroup(semigroup, cap=POWER_CAP):
    """Materialize the semigroup of all non-empty subsets of the carrier.

    The result has order 2**n - 1; its element k is the subset with mask
    k + 1, so the singleton {i} sits at index 2**i - 1. Construction
    re-validates associativity of the setwise product mechanically.
    """
    n = semigroup.order
    if n > cap:
        raise OrderCapExceeded(
            f"carrier order {n} exceeds the materialization cap {cap}")
    m = (1 << n) - 1
    table = [[mask_product(semigroup, a, b) - 1 for b in range(1, m + 1)]
             for a in range(1, m + 1)]
    return FiniteSemigroup(table)


@dataclass(frozen=True)
class CompletenessCertificate:
    """Outcome of a downward-completeness check.

    When ok is False, failed names the broken condition ("closure",
    "coverage", or "subsets") and witness carries the offending data:
    a pair of member masks and their product for closure, a missing
    carrier element for coverage, or a member and its missing subset.
    """

    ok: bool
    failed: str | None = None
    witness: tuple | None = None

    def __bool__(self):
        return self.ok


class SubsetFamily:
    """A deduplicated family of non-empty subsets over one ambient.

    Masks are kept sorted; membership is answered by binary search.
    Closure and downward-completeness flags are computed once at
    construction, after which instances are immutable.
    """

    __slots__ = ("semigroup", "masks", "is_subsemigroup",
                 "is_downward_complete", "_materialized")

    def __init__(self, semigroup, masks):
        full = 1 << semigroup.order
        cleaned = sorted({int(m) for m in masks})
        if not cleaned:
            raise IndexOutOfRange("a subset family must be non-empty")
        if cleaned[0] <= 0 or cleaned[-1] >= full:
            bad = cleaned[0] if cleaned[0] <= 0 else cleaned[-1]
            raise IndexOutOfRange(
                f"mask {bad} is not a non-empty subset of the carrier")
        self.semigroup = semigroup
        self.masks = cleaned
        self.is_subsemigroup = self._closure_witness() is None
        cert = downward_completeness(self)
        self.is_downward_complete = cert.ok
        self._materialized = None

    def _closure_witness(self):
        for a in self.masks:
            for b in self.masks:
                p = mask_product(self.semigroup, a, b)
                if p not in self:
                    return a, b, p
        return None

    def __contains__(self, mask):
        if isinstance(mask, SubsetElement):
            mask = mask.mask
        i = bisect_left(self.masks, mask)
        return i < len(self.masks) and self.masks[i] == mask

    def index(self, mask):
        i = bisect_left(self.masks, mask)
        if i == len(self.masks) or self.masks[i] != mask:
            raise IndexOutOfRange(f"mask {mask} is not a member")
        return i

    def members(self):
        return [SubsetElement(self.semigroup, m) for m in self.masks]

    def __iter__(self):
        return iter(self.masks)

    def __len__(self):
        return len(self.masks)

    def __eq__(self, other):
        return (isinstance(other, SubsetFamily)
                and self.semigroup == other.semigroup
                and self.masks == other.masks)

    def __hash__(self):
        return hash((self.semigroup, tuple(self.masks)))

    def __repr__(self):
        return (f"SubsetFamily(order={self.semigroup.order}, "
                f"members={len(self.masks)})")

    def as_semigroup(self):
        """Materialize the family as an abstract semigroup.

        Element i of the result is the i-th smallest member mask. Only
        product-closed families can be materialized.
        """
        if not self.is_subsemigroup:
            raise PreconditionViolated("family is not closed under products")
        if self._materialized is None:
            table = [[self.index(mask_product(self.semigroup, a, b))
                      for b in self.masks] for a in self.masks]
            self._materialized = FiniteSemigroup(table)
        return self._materialized


def downward_completeness(family):
    """Certificate-producing downward-completeness check.

    Requires closure under setwise products, coverage of every carrier
    element by some member, and closure under non-empty subsets of
    members.
    """
    witness = family._closure_witness()
    if witness is not None:
        return CompletenessCertificate(False, "closure", witness)
    covered = 0
    for m in family.masks:
        covered |= m
    if covered != (1 << family.semigroup.order) - 1:
        missing = next(x for x in range(family.semigroup.order)
                       if not covered >> x & 1)
        return CompletenessCertificate(False, "coverage", (missing,))
    for m in family.masks:
        for sub in submasks(m):
            if sub not in family:
                return CompletenessCertificate(False, "subsets", (m, sub))
    return CompletenessCertificate(True)


def is_downward_complete(family):
    return downward_completeness(family).ok


def full_family(semigroup, cap=POWER_CAP):
    """The family of all non-empty subsets of the carrier."""
    n = semigroup.order
    if n > cap:
        raise OrderCapExceeded(
            f"carrier order {n} exceeds the materialization cap {cap}")
    return SubsetFamily(semigroup, range(1, 1 << n))


def singleton_family(semigroup):
    """The family of all one-element subsets, the minimum downward-complete one."""
    return SubsetFamily(semigroup, (1 << x for x in range(semigroup.order)))


def downward_complete_closure(semigroup, generators=()):
    """Least downward-complete subsemigroup containing the generators.

    Iterates from all singletons plus the generators, closing under
    non-empty subsets of members and under setwise products until a
    fixpoint is reached. Idempotent and monotone in the generator set.
    """
    members = {1 << x for x in range(semigroup.order)}
    for g in generators:
        mask = g.mask if isinstance(g, SubsetElement) else int(g)
        if mask <= 0 or mask >= (1 << semigroup.order):
            raise IndexOutOfRange(f"generator mask {mask} outside the carrier")
        members.add(mask)
    changed = True
    while changed:
        changed = False
        for m in list(members):
            for sub in submasks(m):
                if sub not in members:
                    members.add(sub)
                    changed = True
        snapshot = list(members)
        for a in snapshot:
            for b in snapshot:
                p = mask_product(semigroup, a, b)
                if p not in members:
                    members.add(p)
                    changed = True
    return SubsetFamily(semigroup, members)


def congruence_family(congruence):
    """All non-empty subsets of each congruence class, as one family."""
    masks = []
    for cls in congruence.classes:
        masks.extend(submasks(mask_of(cls)))
    return SubsetFamily(congruence.semigroup, masks)


def family_report(family):
    """JSON-ready summary of a family."""
    return {
        "ambient_order": family.semigroup.order,
        "members": list(family.masks),
        "downward_complete": family.is_downward_complete,
        "subsemigroup": family.is_subsemigroup,
    }
