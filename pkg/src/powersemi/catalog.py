"""Enumerate all semigroups of a small order up to isomorphism, and run
pairwise experiments over the resulting catalog."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations
from multiprocessing import Pool

from .cancellation import (cancellative_elements_bruteforce,
                           singleton_cancellative_elements)
from .errors import OrderUnsupported
from .morphisms import (IsoFingerprint, Morphism, find_isomorphism,
                        fingerprint)
from .power import (POWER_CAP, build_power_semigroup, congruence_family,
                    downward_complete_closure, full_family)
from .semigroups import FiniteSemigroup, all_congruences

ENUM_MAX = 5
# Lexicographic-minimality symmetry breaking costs n! relabelings per
# completed table; worth it only up to this order.
MINIMALITY_MAX = 4


@dataclass
class CatalogEntry:
    """One representative semigroup with cached search invariants."""

    semigroup: FiniteSemigroup
    canonical_id: tuple
    fingerprint: IsoFingerprint
    _power: FiniteSemigroup | None = field(default=None, repr=False)
    _power_fp: IsoFingerprint | None = field(default=None, repr=False)

    def power_semigroup(self, cap=POWER_CAP):
        if self._power is None:
            self._power = build_power_semigroup(self.semigroup, cap)
        return self._power

    def power_fingerprint(self, cap=POWER_CAP):
        if self._power_fp is None:
            self._power_fp = fingerprint(self.power_semigroup(cap))
        return self._power_fp


def associative_tables(n):
    """Depth-first fill of Cayley-table cells, row-major, pruning any
    partial table as soon as a fully determined triple fails associativity.

    Yields every associative table of order n as a list of rows.
    """
    t = [[-1] * n for _ in range(n)]

    def consistent(i, j):
        v = t[i][j]
        row_i, row_j, row_v = t[i], t[j], t[v]
        for c in range(n):
            # triple (i, j, c)
            jc = row_j[c]
            if jc != -1:
                a_side, b_side = row_v[c], row_i[jc]
                if a_side != -1 and b_side != -1 and a_side != b_side:
                    return False
        for a in range(n):
            # triple (a, i, j)
            ai = t[a][i]
            if ai != -1:
                b_side = t[a][v]
                if b_side != -1:
                    a_side = t[ai][j]
                    if a_side != -1 and a_side != b_side:
                        return False
        for a in range(n):
            row_a = t[a]
            for b in range(n):
                # triple (a, b, j) whose outer product cell is (i, j)
                if row_a[b] == i:
                    bj = t[b][j]
                    if bj != -1:
                        rhs = row_a[bj]
                        if rhs != -1 and rhs != v:
                            return False
        for b in range(n):
            row_b = t[b]
            ib = t[i][b]
            for c in range(n):
                # triple (i, b, c) whose inner product cell is (i, j)
                if row_b[c] == j and ib != -1:
                    lhs = t[ib][c]
                    if lhs != -1 and lhs != v:
                        return False
        return True

    total = n * n

    def fill(k):
        if k == total:
            yield [row.copy() for row in t]
            return
        i, j = divmod(k, n)
        for v in range(n):
            t[i][j] = v
            if consistent(i, j):
                yield from fill(k + 1)
        t[i][j] = -1

    yield from fill(0)


def _relabeled(table, perm, inv, n):
    return tuple(perm[table[inv[i]][inv[j]]]
                 for i in range(n) for j in range(n))


def _orbit_minimal(args):
    """True iff no relabeling of the table is lexicographically smaller."""
    table, n = args
    flat = tuple(v for row in table for v in row)
    for perm in permutations(range(n)):
        inv = [0] * n
        for i, p in enumerate(perm):
            inv[p] = i
        for idx in range(n * n):
            i, j = divmod(idx, n)
            v = perm[table[inv[i]][inv[j]]]
            if v < flat[idx]:
                return False
            if v > flat[idx]:
                break
    return True


def _dedup_by_search(tables):
    """Keep one table per isomorphism class via fingerprint buckets plus
    explicit searches inside each bucket."""
    buckets = {}
    kept = []
    for table in tables:
        sgr = FiniteSemigroup(table)
        fp = fingerprint(sgr)
        bucket = buckets.setdefault(fp, [])
        if not any(find_isomorphism(sgr, other) for other in bucket):
            bucket.append(sgr)
            kept.append(table)
    return kept


@lru_cache(maxsize=None)
def _enumerate_cached(n, up_to_isomorphism, long_running):
    if not 1 <= n <= ENUM_MAX:
        raise OrderUnsupported(f"order {n} outside the supported range "
                               f"[1, {ENUM_MAX}]")
    if n == ENUM_MAX and not long_running:
        raise OrderUnsupported(
            f"order {ENUM_MAX} runs for a while; pass long_running=True "
            "(CLI: --long-running) to opt in")
    tables = associative_tables(n)
    if up_to_isomorphism:
        if n <= MINIMALITY_MAX:
            tables = [t for t in tables if _orbit_minimal((t, n))]
        else:
            tables = _dedup_by_search(tables)
    tables = sorted(tables)
    entries = []
    for idx, table in enumerate(tables):
        sgr = FiniteSemigroup(table)
        entries.append(CatalogEntry(sgr, (n, idx), fingerprint(sgr)))
    if up_to_isomorphism:
        _verify_pairwise_distinct(entries)
    return tuple(entries)


def _verify_pairwise_distinct(entries):
    buckets = {}
    for entry in entries:
        buckets.setdefault(entry.fingerprint, []).append(entry)
    for bucket in buckets.values():
        for a, b in combinations(bucket, 2):
            found = find_isomorphism(a.semigroup, b.semigroup)
            if found is not None:
                raise AssertionError(
                    f"catalog entries {a.canonical_id} and {b.canonical_id} "
                    "are isomorphic; enumeration is broken")


def enumerate_semigroups(n, up_to_isomorphism=True, long_running=False,
                         jobs=1):
    """All semigroups of order n, one per isomorphism class by default.

    Up to order 4 a representative is the lexicographically minimal table
    of its relabeling orbit; at order 5 minimality is replaced by
    fingerprint bucketing plus explicit isomorphism tests. Entries are
    sorted by their table encoding, and pairwise non-isomorphism of the
    output is re-verified during construction. jobs > 1 parallelizes the
    minimality filter.
    """
    if jobs > 1 and up_to_isomorphism and 1 <= n <= MINIMALITY_MAX:
        tables = list(associative_tables(n))
        with Pool(jobs) as pool:
            keep = pool.map(_orbit_minimal, [(t, n) for t in tables])
        kept = sorted(t for t, k in zip(tables, keep) if k)
        entries = []
        for idx, table in enumerate(kept):
            sgr = FiniteSemigroup(table)
            entries.append(CatalogEntry(sgr, (n, idx), fingerprint(sgr)))
        _verify_pairwise_distinct(entries)
        return entries
    return list(_enumerate_cached(n, up_to_isomorphism, long_running))


def _probe_pair(payload):
    i, j, table_a, table_b = payload
    found = find_isomorphism(FiniteSemigroup(table_a), FiniteSemigroup(table_b))
    return i, j, None if found is None else found.mapping


def global_iso_probe(n, jobs=1, long_running=False, cap=POWER_CAP,
                     entries=None, timer=time.perf_counter):
    """Compare the power semigroups of every pair of distinct catalog classes.

    The catalog entries are pairwise non-isomorphic by construction, so a
    pair with isomorphic power semigroups would be a counterexample worth
    preserving verbatim: the report carries the full map, re-verified
    exhaustively, and the CLI turns any finding into exit code 1.
    """
    start = timer()
    if entries is None:
        entries = enumerate_semigroups(n, True, long_running)
    powers = [entry.power_semigroup(cap) for entry in entries]
    total_pairs = len(entries) * (len(entries) - 1) // 2
    buckets = {}
    for idx, entry in enumerate(entries):
        buckets.setdefault(entry.power_fingerprint(cap), []).append(idx)
    survivors = sorted((i, j) for bucket in buckets.values()
                       for i, j in combinations(bucket, 2))
    results = []
    if jobs > 1 and survivors:
        payloads = [(i, j, powers[i].rows, powers[j].rows)
                    for i, j in survivors]
        with Pool(jobs) as pool:
            results = pool.map(_probe_pair, payloads)
    else:
        for i, j in survivors:
            mapping = find_isomorphism(powers[i], powers[j])
            results.append((i, j, None if mapping is None else mapping.mapping))
    counterexamples = []
    for i, j, mapping in results:
        if mapping is None:
            continue
        verified = Morphism(powers[i], powers[j], mapping)
        if not verified.is_isomorphism:
            raise AssertionError("probe produced a map that fails re-verification")
        counterexamples.append({
            "left": list(entries[i].canonical_id),
            "right": list(entries[j].canonical_id),
            "left_table": entries[i].semigroup.rows,
            "right_table": entries[j].semigroup.rows,
            "power_map": list(mapping),
        })
    elapsed_ms = int(round((timer() - start) * 1000))
    return {
        "order": n,
        "classes": len(entries),
        "pairs_checked": total_pairs,
        "counterexamples": counterexamples,
        "pruned_by_fingerprint": total_pairs - len(survivors),
        "elapsed_ms": elapsed_ms,
    }


def singleton_characterization_check(n, seed=0, closures_per_semigroup=3,
                                     long_running=False, cap=POWER_CAP):
    """Exhaustive agreement check of the two cancellativity classifiers.

    For every commutative catalogued semigroup of order <= n, the
    brute-force classification of its full power semigroup, of every
    congruence family, and of a seeded sample of downward-complete
    closures must coincide with the singleton rule. Violations are
    reported, never expected.
    """
    rng = random.Random(seed)
    violations = []
    commutative_count = 0
    families_checked = 0
    for order in range(1, n + 1):
        for entry in enumerate_semigroups(order, True, long_running):
            sgr = entry.semigroup
            if not sgr.commutative:
                continue
            commutative_count += 1
            families = [full_family(sgr, cap)]
            families.extend(congruence_family(c) for c in all_congruences(sgr))
            for _ in range(closures_per_semigroup):
                count = rng.randint(0, 2)
                gens = [rng.randrange(1, 1 << order) for _ in range(count)]
                families.append(downward_complete_closure(sgr, gens))
            for family in families:
                families_checked += 1
                brute = {m.mask for m in cancellative_elements_bruteforce(family)}
                rule = {m.mask for m in singleton_cancellative_elements(family)}
                if brute != rule:
                    violations.append({
                        "entry": list(entry.canonical_id),
                        "family": list(family.masks),
                        "bruteforce": sorted(brute),
                        "singleton_rule": sorted(rule),
                    })
    return {
        "order": n,
        "seed": seed,
        "commutative_semigroups": commutative_count,
        "families_checked": families_checked,
        "violations": violations,
    }
