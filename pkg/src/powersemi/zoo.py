"""Small stock semigroups used by the tests, demos, and docs."""

from .semigroups import FiniteSemigroup


def cyclic_group(n):
    """Integers mod n under addition."""
    return FiniteSemigroup([[(i + j) % n for j in range(n)] for i in range(n)])


def klein_four():
    """The non-cyclic group of order 4 (bitwise xor on {0,1,2,3})."""
    return FiniteSemigroup([[i ^ j for j in range(4)] for i in range(4)])


def null_semigroup(n):
    """Every product equals 0."""
    return FiniteSemigroup([[0] * n for _ in range(n)])


def left_zero(n):
    """x * y = x."""
    return FiniteSemigroup([[i] * n for i in range(n)])


def right_zero(n):
    """x * y = y."""
    return FiniteSemigroup([list(range(n)) for _ in range(n)])


def min_chain(n):
    """The chain 0 < 1 < ... < n-1 as a meet semilattice, x * y = min(x, y)."""
    return FiniteSemigroup([[min(i, j) for j in range(n)] for i in range(n)])
