"""Word sets over the free semigroup of non-empty words.

Words are non-empty tuples of letter indices and multiply by
concatenation. This is the standard non-commutative cancellative carrier,
and it behaves very differently from the commutative ones: sets of
single-letter words are cancellative in the power semigroup despite not
being singletons, because words factor uniquely into letters.
"""

from __future__ import annotations

import random

from .errors import PreconditionViolated


def _check_word_set(words, label):
    out = frozenset(tuple(w) for w in words)
    if not out:
        raise PreconditionViolated(f"{label} must be a non-empty set of words")
    for w in out:
        if len(w) == 0:
            raise PreconditionViolated("words must be non-empty")
        if any(not isinstance(a, int) or a < 0 for a in w):
            raise PreconditionViolated("letters must be non-negative integers")
    return out


def word_product(xs, ys):
    """All concatenations x + y with x in xs and y in ys, deduplicated."""
    xs = _check_word_set(xs, "left factor")
    ys = _check_word_set(ys, "right factor")
    return frozenset(x + y for x in xs for y in ys)


def letters_cancellation_consistent(letters, ys1, ys2, side="left"):
    """Check that a set of single-letter words separates word sets.

    For side "left" this returns (X * ys1 == X * ys2) == (ys1 == ys2)
    where X is the set of one-letter words over the given letters; "right"
    multiplies on the other side and "both" requires the two. The result
    should always be True; a False return would be a finding, not a bug
    in the caller.
    """
    letters = frozenset(letters)
    if not letters or any(not isinstance(a, int) or a < 0 for a in letters):
        raise PreconditionViolated(
            "letters must be a non-empty set of non-negative integers")
    x_words = {(a,) for a in letters}
    sets_equal = frozenset(map(tuple, ys1)) == frozenset(map(tuple, ys2))
    consistent = True
    if side in ("left", "both"):
        products_equal = word_product(x_words, ys1) == word_product(x_words, ys2)
        consistent = consistent and products_equal == sets_equal
    if side in ("right", "both"):
        products_equal = word_product(ys1, x_words) == word_product(ys2, x_words)
        consistent = consistent and products_equal == sets_equal
    return consistent


def leading_letter_disjoint(letters, ys1, ys2):
    """Check that distinct leading letters yield disjoint product sets.

    For every pair a != b of the given letters, {a}*ys1 and {b}*ys2 must
    not intersect; unique factorization of words guarantees it, and this
    computes the intersections explicitly rather than appealing to that.
    """
    letters = sorted(set(letters))
    ys1 = _check_word_set(ys1, "first word set")
    ys2 = _check_word_set(ys2, "second word set")
    for a in letters:
        left = {(a,) + w for w in ys1}
        for b in letters:
            if a == b:
                continue
            right = {(b,) + w for w in ys2}
            if left & right:
                return False
    return True


def random_word(rng, alphabet, max_len):
    return tuple(rng.randrange(alphabet) for _ in range(rng.randint(1, max_len)))


def cancellativity_campaign(alphabet=4, trials=10000, seed=0,
                            max_word_len=6, max_set_size=8):
    """Randomized search for a cancellation failure; none is expected.

    Each trial draws a letter set X and word sets Y1, Y2 (Y2 is forced
    equal to Y1 in a fraction of trials so both branches of the
    consistency check are exercised), then asserts both the separation
    property and the leading-letter disjointness on that trial's data.
    """
    rng = random.Random(seed)
    violations = []
    disjointness_failures = []
    equal_set_trials = 0
    for trial in range(trials):
        size = rng.randint(2, alphabet)
        letters = frozenset(rng.sample(range(size), rng.randint(1, size)))
        ys1 = frozenset(random_word(rng, size, max_word_len)
                        for _ in range(rng.randint(1, max_set_size)))
        if rng.random() < 0.25:
            ys2 = ys1
        else:
            ys2 = frozenset(random_word(rng, size, max_word_len)
                            for _ in range(rng.randint(1, max_set_size)))
        if ys1 == ys2:
            equal_set_trials += 1
        record = {
            "trial": trial,
            "letters": sorted(letters),
            "ys1": sorted(map(list, ys1)),
            "ys2": sorted(map(list, ys2)),
        }
        if not letters_cancellation_consistent(letters, ys1, ys2, side="both"):
            violations.append(record)
        if not leading_letter_disjoint(letters, ys1, ys2):
            disjointness_failures.append(record)
    return {
        "alphabet": alphabet,
        "trials": trials,
        "seed": seed,
        "max_word_len": max_word_len,
        "max_set_size": max_set_size,
        "equal_set_trials": equal_set_trials,
        "violations": violations,
        "disjointness_failures": disjointness_failures,
    }
