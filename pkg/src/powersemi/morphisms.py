"""Homomorphisms between finite semigroups, isomorphism search, and the
transfer of isomorphisms to and from power semigroups."""

from __future__ import annotations

from itertools import permutations, product
from typing import NamedTuple

import numpy as np

from .errors import PreconditionViolated, TheoremViolation
from .power import POWER_CAP, bits, build_power_semigroup


class Morphism:
    """An element map between two finite semigroups with verified flags.

    The homomorphism property is checked exhaustively at construction;
    nothing is assumed. mapping[x] is the image of source element x.
    """

    __slots__ = ("source", "target", "mapping", "is_homomorphism",
                 "is_injective", "is_surjective")

    def __init__(self, source, target, mapping):
        mapping = tuple(int(v) for v in mapping)
        if len(mapping) != source.order:
            raise PreconditionViolated(
                f"map has {len(mapping)} entries for a source of order "
                f"{source.order}")
        if any(not 0 <= v < target.order for v in mapping):
            raise PreconditionViolated("map image outside the target carrier")
        self.source = source
        self.target = target
        self.mapping = mapping
        m = np.array(mapping, dtype=np.int64)
        self.is_homomorphism = bool(np.array_equal(
            m[source.table], target.table[np.ix_(m, m)]))
        self.is_injective = len(set(mapping)) == source.order
        self.is_surjective = set(mapping) == set(range(target.order))

    @property
    def is_isomorphism(self):
        return self.is_homomorphism and self.is_injective and self.is_surjective

    def __call__(self, x):
        return self.mapping[x]

    def inverse(self):
        if not self.is_isomorphism:
            raise PreconditionViolated("only isomorphisms can be inverted")
        inv = [0] * self.target.order
        for x, y in enumerate(self.mapping):
            inv[y] = x
        return Morphism(self.target, self.source, inv)

    def __eq__(self, other):
        return (isinstance(other, Morphism)
                and self.source == other.source
                and self.target == other.target
                and self.mapping == other.mapping)

    def __hash__(self):
        return hash((self.source, self.target, self.mapping))

    def __repr__(self):
        return f"Morphism({list(self.mapping)})"


class IsoFingerprint(NamedTuple):
    """Cheap isomorphism invariants used to prune the search.

    profiles is the sorted multiset of per-element invariants; equal
    fingerprints are necessary (never sufficient) for isomorphism.
    """

    order: int
    commutative: bool
    has_identity: bool
    idempotent_count: int
    profiles: tuple


def element_profiles(semigroup):
    """Per-element invariant: idempotency, cycle index/period, image sizes,
    and how many elements the element commutes with."""
    n = semigroup.order
    rows = semigroup.rows
    profiles = []
    for x in range(n):
        row = rows[x]
        col = [rows[y][x] for y in range(n)]
        commuting = sum(1 for y in range(n) if row[y] == rows[y][x])
        index, period = semigroup.index_and_period(x)
        profiles.append((row[x] == x, index, period,
                         len(set(row)), len(set(col)), commuting))
    return tuple(profiles)


def fingerprint(semigroup):
    """Isomorphism-invariant fingerprint, cached on the instance."""
    if semigroup._fingerprint is None:
        profiles = element_profiles(semigroup)
        semigroup._fingerprint = IsoFingerprint(
            semigroup.order,
            semigroup.commutative,
            semigroup.identity is not None,
            len(semigroup.idempotents()),
            tuple(sorted(profiles)),
        )
    return semigroup._fingerprint


def describe_fingerprint_mismatch(fp_a, fp_b):
    """Human-readable reason two fingerprints differ, or None if equal."""
    if fp_a == fp_b:
        return None
    if fp_a.order != fp_b.order:
        return f"order {fp_a.order} != {fp_b.order}"
    if fp_a.commutative != fp_b.commutative:
        return "only one side is commutative"
    if fp_a.has_identity != fp_b.has_identity:
        return "only one side has an identity"
    if fp_a.idempotent_count != fp_b.idempotent_count:
        return (f"idempotent counts {fp_a.idempotent_count} != "
                f"{fp_b.idempotent_count}")
    return "per-element invariant multisets differ"


def _mapping_search(source, target):
    """Yield every isomorphism source -> target as a raw mapping tuple.

    Backtracking over invariant classes: source elements are assigned in
    order of ascending candidate-class size (ties broken by invariant then
    index), candidates scanned in ascending index order, and every
    tentative assignment is closed under products before recursing, so a
    single choice usually forces most of the map.
    """
    if fingerprint(source) != fingerprint(target):
        return
    n = source.order
    s_prof = element_profiles(source)
    t_prof = element_profiles(target)
    candidates = {x: [y for y in range(n) if t_prof[y] == s_prof[x]]
                  for x in range(n)}
    order = sorted(range(n),
                   key=lambda x: (len(candidates[x]), s_prof[x], x))
    s_rows = source.rows
    t_rows = target.rows
    mapping = [-1] * n
    used = [False] * n
    assigned = []

    def assign(x, y, trail):
        stack = [(x, y)]
        while stack:
            a, b = stack.pop()
            cur = mapping[a]
            if cur == b:
                continue
            if cur != -1 or used[b] or s_prof[a] != t_prof[b]:
                return False
            mapping[a] = b
            used[b] = True
            trail.append(a)
            assigned.append(a)
            for c in assigned:
                d = mapping[c]
                p, q = s_rows[a][c], t_rows[b][d]
                if mapping[p] == -1:
                    stack.append((p, q))
                elif mapping[p] != q:
                    return False
                p, q = s_rows[c][a], t_rows[d][b]
                if mapping[p] == -1:
                    stack.append((p, q))
                elif mapping[p] != q:
                    return False
        return True

    def undo(trail):
        for a in reversed(trail):
            used[mapping[a]] = False
            mapping[a] = -1
            assigned.pop()

    def backtrack(pos):
        while pos < n and mapping[order[pos]] != -1:
            pos += 1
        if pos == n:
            yield tuple(mapping)
            return
        x = order[pos]
        for y in candidates[x]:
            if used[y]:
                continue
            trail = []
            if assign(x, y, trail):
                yield from backtrack(pos + 1)
            undo(trail)

    yield from backtrack(0)


def find_isomorphism(source, target):
    """A verified isomorphism if one exists, else a definitive None.

    The negative fast path is a fingerprint mismatch; the positive path
    re-verifies the found map exhaustively before returning it.
    """
    for mapping in _mapping_search(source, target):
        morphism = Morphism(source, target, mapping)
        assert morphism.is_isomorphism
        return morphism
    return None


def all_isomorphisms(source, target):
    """Every isomorphism source -> target, each re-verified exhaustively."""
    for mapping in _mapping_search(source, target):
        morphism = Morphism(source, target, mapping)
        assert morphism.is_isomorphism
        yield morphism


def isomorphic_bruteforce(source, target):
    """Decide isomorphism by testing every bijection at once.

    Independent of the pruned search; usable up to order ~8. Returns the
    first isomorphism as a tuple, or None.
    """
    n = source.order
    if n != target.order:
        return None
    perms = np.array(list(permutations(range(n))), dtype=np.int64)
    lhs = perms[:, source.table]
    rhs = target.table[perms[:, :, None], perms[:, None, :]]
    hits = np.nonzero((lhs == rhs).all(axis=(1, 2)))[0]
    if hits.size == 0:
        return None
    return tuple(int(v) for v in perms[hits[0]])


def all_automorphisms_bruteforce(semigroup):
    """Every automorphism by scanning all permutations; oracle for tiny orders."""
    n = semigroup.order
    perms = np.array(list(permutations(range(n))), dtype=np.int64)
    lhs = perms[:, semigroup.table]
    rhs = semigroup.table[perms[:, :, None], perms[:, None, :]]
    hits = np.nonzero((lhs == rhs).all(axis=(1, 2)))[0]
    return [tuple(int(v) for v in perms[h]) for h in hits]


def homomorphisms(source, target, surjective_only=False):
    """Exhaustively enumerate homomorphisms; feasible only at tiny orders."""
    target_range = set(range(target.order))
    for mapping in product(range(target.order), repeat=source.order):
        if surjective_only and set(mapping) != target_range:
            continue
        morphism = Morphism(source, target, mapping)
        if morphism.is_homomorphism:
            yield morphism


def lift_isomorphism(morphism, cap=POWER_CAP):
    """Lift a carrier isomorphism to the two full power semigroups.

    The lifted map sends the subset with mask m to its elementwise image,
    preserving cardinality. The result is re-verified; a failure would be
    a mathematical surprise, not a usage error.
    """
    if not morphism.is_isomorphism:
        raise PreconditionViolated("map is not a verified isomorphism")
    power_source = build_power_semigroup(morphism.source, cap)
    power_target = build_power_semigroup(morphism.target, cap)
    n = morphism.source.order
    lifted = []
    for mask in range(1, 1 << n):
        image = 0
        for x in bits(mask):
            image |= 1 << morphism.mapping[x]
        lifted.append(image - 1)
    big = Morphism(power_source, power_target, lifted)
    if not big.is_isomorphism:
        raise TheoremViolation("lift of an isomorphism failed verification")
    return big


def restrict_isomorphism(morphism, source_family, target_family):
    """Restrict a family-level isomorphism to the two carriers.

    Hypotheses: both families downward complete, both carriers
    cancellative, at least one commutative, and the morphism acting
    between the families' materializations. Under them every singleton
    must map to a singleton; the implementation verifies this element by
    element instead of trusting it, raising TheoremViolation on any
    failure. The restriction x -> y with morphism({x}) = {y} is returned
    as a verified isomorphism.
    """
    if not morphism.is_isomorphism:
        raise PreconditionViolated("map is not a verified isomorphism")
    if not source_family.is_downward_complete:
        raise PreconditionViolated("source family is not downward complete")
    if not target_family.is_downward_complete:
        raise PreconditionViolated("target family is not downward complete")
    H = source_family.semigroup
    K = target_family.semigroup
    if not H.is_cancellative_semigroup():
        raise PreconditionViolated("source carrier is not cancellative")
    if not K.is_cancellative_semigroup():
        raise PreconditionViolated("target carrier is not cancellative")
    if not (H.commutative or K.commutative):
        raise PreconditionViolated("neither carrier is commutative")
    if morphism.source != source_family.as_semigroup() \
            or morphism.target != target_family.as_semigroup():
        raise PreconditionViolated(
            "map does not act between the materialized families")

    restricted = []
    for x in range(H.order):
        image_mask = target_family.masks[
            morphism.mapping[source_family.index(1 << x)]]
        if image_mask.bit_count() != 1:
            raise TheoremViolation(
                f"singleton {{{x}}} maps to the non-singleton mask {image_mask}")
        restricted.append(image_mask.bit_length() - 1)
    small = Morphism(H, K, restricted)
    if not small.is_isomorphism:
        raise TheoremViolation("singleton restriction is not an isomorphism")
    return small


def verify_commutativity_transfer(morphism, source_family, target_family):
    """Directly check that the target carrier inherits commutativity.

    Requires a commutative source carrier and a verified isomorphism
    between two downward-complete families. The return value is the
    target carrier's actual commutativity flag; False would be a theorem
    violation for the caller to report.
    """
    if not morphism.is_isomorphism:
        raise PreconditionViolated("map is not a verified isomorphism")
    if not source_family.is_downward_complete:
        raise PreconditionViolated("source family is not downward complete")
    if not target_family.is_downward_complete:
        raise PreconditionViolated("target family is not downward complete")
    if not source_family.semigroup.commutative:
        raise PreconditionViolated("source carrier is not commutative")
    if morphism.source != source_family.as_semigroup() \
            or morphism.target != target_family.as_semigroup():
        raise PreconditionViolated(
            "map does not act between the materialized families")
    return target_family.semigroup.commutative


def cancellative_preservation_check(morphism):
    """True iff every element and its image share left/right cancellativity.

    Always true for an isomorphism; the check recomputes both status
    vectors instead of assuming the statement.
    """
    if not morphism.is_isomorphism:
        raise PreconditionViolated("map is not a verified isomorphism")
    source, target = morphism.source, morphism.target
    for a in range(source.order):
        b = morphism.mapping[a]
        if source.is_left_cancellative(a) != target.is_left_cancellative(b):
            return False
        if source.is_right_cancellative(a) != target.is_right_cancellative(b):
            return False
    return True
