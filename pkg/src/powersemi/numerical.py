"""Submonoids of (N, +) with finite complement, and sumset arithmetic
inside them.

These are the additive carriers: infinite, cancellative, commutative.
Finite member sets play the role the bit-mask subsets play over finite
carriers, so the non-cancellativity witness construction carries over
verbatim, always through its second case (a + a = a + b forces a = b, so
the first case can never fire here).
"""

from __future__ import annotations

import random
from math import gcd

from .cancellation import CASE2, CancellationWitness
from .errors import NonMemberInput, PreconditionViolated


class NumericalMonoid:
    """The additive monoid generated by positive integers with gcd 1.

    Membership is solved by dynamic programming up to a horizon of
    min(gens) * max(gens) + min(gens), comfortably past the largest gap;
    a closing run of min(gens) consecutive members is verified before the
    largest gap is declared final. gaps lists every non-member and
    frobenius is the largest one (-1 when there are no gaps at all).
    """

    __slots__ = ("generators", "gaps", "frobenius", "_member", "_horizon")

    def __init__(self, generators):
        gens = sorted({int(g) for g in generators})
        if not gens or gens[0] < 1:
            raise ValueError("generators must be positive integers")
        g = 0
        for x in gens:
            g = gcd(g, x)
        if g != 1:
            raise ValueError(
                f"generators {gens} have gcd {g}; the complement in N "
                "would be infinite")
        self.generators = tuple(gens)
        smallest, largest = gens[0], gens[-1]
        horizon = smallest * largest + smallest + 1
        member = [False] * horizon
        member[0] = True
        for x in range(1, horizon):
            member[x] = any(x >= g and member[x - g] for g in gens)
        if not all(member[horizon - smallest:]):
            raise AssertionError(
                "membership table did not close with a full run of "
                f"{smallest} consecutive members; horizon too small")
        self.gaps = tuple(x for x in range(horizon) if not member[x])
        self.frobenius = self.gaps[-1] if self.gaps else -1
        self._member = member
        self._horizon = horizon

    def __contains__(self, x):
        if x < 0:
            return False
        if x >= self._horizon:
            return True
        return self._member[x]

    def membership(self, x):
        """True iff the non-negative integer x belongs to the monoid."""
        if x < 0:
            raise ValueError("membership is defined on non-negative integers")
        return x in self

    def _validate_members(self, xs, label):
        out = frozenset(int(v) for v in xs)
        if not out:
            raise NonMemberInput(f"{label} must be a non-empty set")
        for v in out:
            if v < 0 or v not in self:
                raise NonMemberInput(f"{v} is not a member of the monoid")
        return out

    def sumset(self, xs, ys):
        """The sumset {x + y : x in xs, y in ys}; members stay members."""
        xs = self._validate_members(xs, "first summand set")
        ys = self._validate_members(ys, "second summand set")
        return frozenset(x + y for x in xs for y in ys)

    def witness_noncancellative(self, subset):
        """Two distinct member sets the given set adds to the same sumset.

        With a, b the two smallest elements of the subset A, the witness
        is (A, A+A, (A+A) minus {a+b}); the equality A + lhs == A + rhs
        is re-verified before returning.
        """
        a_set = self._validate_members(subset, "subset")
        if len(a_set) < 2:
            raise PreconditionViolated("subset must have at least two elements")
        a, b = sorted(a_set)[:2]
        lhs = self.sumset(a_set, a_set)
        rhs = lhs - {a + b}
        assert b + b in rhs  # 2b == a + b would force a == b
        assert self.sumset(a_set, lhs) == self.sumset(a_set, rhs)
        return CancellationWitness(a_set, lhs, rhs, CASE2)

    def __eq__(self, other):
        return isinstance(other, NumericalMonoid) and self.gaps == other.gaps

    def __hash__(self):
        return hash(self.gaps)

    def __repr__(self):
        gens = ", ".join(map(str, self.generators))
        return f"NumericalMonoid(<{gens}>)"


def nm_equal(first, second):
    """Equality of numerical monoids, decided by comparing gap sets.

    Equality is the right notion: for these monoids isomorphic and equal
    coincide, so this doubles as the isomorphism decision procedure.
    """
    return first.gaps == second.gaps


def random_monoid(rng, max_generator=40, max_count=4):
    """A random numerical monoid; resamples until the gcd is 1."""
    while True:
        count = rng.randint(2, max_count)
        gens = rng.sample(range(2, max_generator), count)
        g = 0
        for x in gens:
            g = gcd(g, x)
        if g == 1:
            return NumericalMonoid(gens)


def random_member_set(rng, monoid, size, bound=120):
    """A random set of `size` distinct members below the bound."""
    members = [x for x in range(bound) if x in monoid]
    return frozenset(rng.sample(members, size))


def equality_campaign(trials=100, seed=0, max_generator=40):
    """Check the gap-set equality rule against pointwise membership.

    Per trial two monoids are drawn (sometimes deliberately equal via a
    redundant extra generator) and the rule's verdict is compared with
    membership agreement over both horizons. Mismatches are reported,
    never expected.
    """
    rng = random.Random(seed)
    mismatches = []
    equal_cases = 0
    for trial in range(trials):
        first = random_monoid(rng, max_generator)
        if rng.random() < 0.4:
            # Same monoid presented by a redundant generating set.
            extra = first.generators[0] + first.generators[-1]
            second = NumericalMonoid(first.generators + (extra,))
        else:
            second = random_monoid(rng, max_generator)
        bound = max(first._horizon, second._horizon)
        pointwise = all((x in first) == (x in second) for x in range(bound))
        if nm_equal(first, second) != pointwise:
            mismatches.append({
                "trial": trial,
                "first": list(first.generators),
                "second": list(second.generators),
            })
        if pointwise:
            equal_cases += 1
    return {
        "trials": trials,
        "seed": seed,
        "equal_cases": equal_cases,
        "mismatches": mismatches,
    }


def witness_campaign(trials=1000, seed=0, max_generator=30):
    """Construct and re-verify witnesses on random (monoid, set) instances."""
    rng = random.Random(seed)
    failures = []
    for trial in range(trials):
        monoid = random_monoid(rng, max_generator)
        subset = random_member_set(rng, monoid, rng.randint(2, 5))
        witness = monoid.witness_noncancellative(subset)
        ok = (witness.lhs != witness.rhs
              and witness.case_tag == CASE2
              and monoid.sumset(subset, witness.lhs)
              == monoid.sumset(subset, witness.rhs)
              and all(v in monoid for v in witness.lhs | witness.rhs))
        if not ok:
            failures.append({
                "trial": trial,
                "generators": list(monoid.generators),
                "subset": sorted(subset),
            })
    return {"trials": trials, "seed": seed, "failures": failures}
