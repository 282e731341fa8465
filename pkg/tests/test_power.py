import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from powersemi import (AmbientMismatch, OrderCapExceeded, SubsetElement,
                       SubsetFamily, build_power_semigroup,
                       congruence_from_partition, congruence_family,
                       downward_complete_closure, downward_completeness,
                       family_report, full_family, is_downward_complete,
                       mask_of, setwise_product, singleton_family)
from powersemi import zoo


def int_set_product(rows, xs, ys):
    """Oracle: setwise product computed on plain integer sets."""
    return {rows[x][y] for x in xs for y in ys}


def as_set(subset):
    return set(subset.elements())


def test_products_match_integer_set_oracle_on_z3():
    z3 = zoo.cyclic_group(3)
    x = SubsetElement.from_elements(z3, [0, 1])
    y = SubsetElement.from_elements(z3, [0, 2])
    assert as_set(x * y) == int_set_product(z3.rows, {0, 1}, {0, 2}) == {0, 1, 2}


def test_group_subset_closed_under_full_product():
    z2 = zoo.cyclic_group(2)
    full = SubsetElement.from_elements(z2, [0, 1])
    assert as_set(full * full) == {0, 1}


def test_identity_singleton_is_neutral():
    for sgr in (zoo.cyclic_group(3), zoo.cyclic_group(4), zoo.klein_four()):
        e = SubsetElement.from_elements(sgr, [sgr.identity])
        for mask in range(1, 1 << sgr.order):
            x = SubsetElement(sgr, mask)
            assert (e * x).mask == mask
            assert (x * e).mask == mask


def test_ambient_mismatch_rejected():
    a = SubsetElement.from_elements(zoo.cyclic_group(2), [0])
    b = SubsetElement.from_elements(zoo.cyclic_group(3), [0])
    with pytest.raises(AmbientMismatch):
        setwise_product(a, b)


def test_empty_subset_rejected():
    with pytest.raises(Exception):
        SubsetElement(zoo.cyclic_group(2), 0)


@pytest.mark.parametrize("n,expected", [(1, 1), (2, 3), (3, 7), (4, 15), (5, 31)])
def test_power_semigroup_order(n, expected):
    sgr = zoo.null_semigroup(n)
    assert build_power_semigroup(sgr).order == expected


def test_power_table_of_z2_against_direct_oracle():
    z2 = zoo.cyclic_group(2)
    power = build_power_semigroup(z2)
    masks = list(range(1, 4))
    elements_of = {m: {x for x in range(2) if m >> x & 1} for m in masks}
    for a in masks:
        for b in masks:
            expected = mask_of(int_set_product(z2.rows, elements_of[a],
                                               elements_of[b]))
            assert power.rows[a - 1][b - 1] == expected - 1
    # the full subset absorbs everything
    for a in masks:
        assert power.rows[2][a - 1] == 2
        assert power.rows[a - 1][2] == 2


def test_materialization_cap():
    big = zoo.null_semigroup(6)
    with pytest.raises(OrderCapExceeded):
        build_power_semigroup(big)
    assert build_power_semigroup(big, cap=6).order == 63


def test_singleton_embedding_preserves_products(catalog):
    for order, entries in catalog.items():
        for entry in entries:
            sgr = entry.semigroup
            for x in range(sgr.order):
                for y in range(sgr.order):
                    singleton_x = SubsetElement(sgr, 1 << x)
                    singleton_y = SubsetElement(sgr, 1 << y)
                    assert (singleton_x * singleton_y).mask == 1 << sgr.rows[x][y]


def test_power_commutative_iff_carrier_commutative(catalog):
    for entries in catalog.values():
        for entry in entries:
            power = build_power_semigroup(entry.semigroup)
            assert power.commutative == entry.semigroup.commutative


def test_singleton_family_is_minimal_downward_complete():
    z3 = zoo.cyclic_group(3)
    fam = singleton_family(z3)
    assert fam.is_downward_complete and fam.is_subsemigroup
    assert fam.masks == [1, 2, 4]
    assert downward_complete_closure(z3).masks == fam.masks


def test_full_family_is_downward_complete(catalog):
    for entries in catalog.values():
        for entry in entries:
            assert full_family(entry.semigroup).is_downward_complete


def test_parity_family_on_z4():
    z4 = zoo.cyclic_group(4)
    cong = congruence_from_partition(z4, [0, 1, 0, 1])
    fam = congruence_family(cong)
    assert len(fam) == 6
    assert set(fam.masks) == {mask_of(s) for s in
                              ({0}, {2}, {0, 2}, {1}, {3}, {1, 3})}
    # oracle: all 36 products stay inside the family
    sets = [set(SubsetElement(z4, m).elements()) for m in fam.masks]
    for xs in sets:
        for ys in sets:
            assert mask_of(int_set_product(z4.rows, xs, ys)) in fam
    assert fam.is_downward_complete


def test_congruence_family_identity_and_full():
    z3 = zoo.cyclic_group(3)
    identity = congruence_from_partition(z3, [0, 1, 2])
    assert congruence_family(identity).masks == [1, 2, 4]
    glob = congruence_from_partition(z3, [0, 0, 0])
    assert congruence_family(glob).masks == list(range(1, 8))


def test_completeness_certificate_names_the_failure():
    z4 = zoo.cyclic_group(4)
    # singletons plus {0,1}: the product {0,1}+{0,1} = {0,1,2} escapes
    leaky = SubsetFamily(z4, [1, 2, 4, 8, 0b0011])
    cert = downward_completeness(leaky)
    assert not cert and cert.failed == "closure"
    a, b, p = cert.witness
    sets = {m: {x for x in range(4) if m >> x & 1} for m in (a, b)}
    assert mask_of(int_set_product(z4.rows, sets[a], sets[b])) == p
    assert p not in leaky
    # closed but not covering the carrier
    only_zero = SubsetFamily(zoo.min_chain(2), [1])
    cert = downward_completeness(only_zero)
    assert not cert and cert.failed == "coverage" and cert.witness == (1,)
    # closed and covering but missing a subset of a member
    missing = SubsetFamily(zoo.null_semigroup(2), [1, 3])
    cert = downward_completeness(missing)
    assert not cert and cert.failed == "subsets" and cert.witness == (3, 2)
    # all three conditions hold for the full family
    assert downward_completeness(SubsetFamily(zoo.cyclic_group(2), [1, 2, 3])).ok


def test_closure_of_full_mask_on_z2():
    z2 = zoo.cyclic_group(2)
    fam = downward_complete_closure(z2, [0b11])
    assert fam.masks == [1, 2, 3]


def test_closure_of_parity_generators_matches_congruence_family():
    z4 = zoo.cyclic_group(4)
    fam = downward_complete_closure(z4, [mask_of({0, 2}), mask_of({1, 3})])
    cong = congruence_from_partition(z4, [0, 1, 0, 1])
    assert fam.masks == congruence_family(cong).masks


def test_closures_always_downward_complete_and_idempotent():
    z4 = zoo.cyclic_group(4)
    for gens in ([], [0b1010], [0b1111], [0b0110, 0b1001]):
        fam = downward_complete_closure(z4, gens)
        assert is_downward_complete(fam)
        again = downward_complete_closure(z4, fam.masks)
        assert again.masks == fam.masks


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(min_value=1, max_value=15), max_size=3),
       st.lists(st.integers(min_value=1, max_value=15), max_size=3))
def test_closure_monotone_in_generators(gens_a, gens_b):
    z4 = zoo.cyclic_group(4)
    small = downward_complete_closure(z4, gens_a)
    large = downward_complete_closure(z4, gens_a + gens_b)
    assert set(small.masks) <= set(large.masks)


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=1, max_value=15),
       st.integers(min_value=1, max_value=15))
def test_setwise_product_commutes_over_commutative_carrier(a, b):
    z4 = zoo.cyclic_group(4)
    x, y = SubsetElement(z4, a), SubsetElement(z4, b)
    assert (x * y).mask == (y * x).mask


def test_family_report_schema():
    fam = full_family(zoo.cyclic_group(2))
    report = family_report(fam)
    assert report == {"ambient_order": 2, "members": [1, 2, 3],
                      "downward_complete": True, "subsemigroup": True}


def test_family_membership_and_indexing():
    fam = full_family(zoo.cyclic_group(3))
    assert 5 in fam and fam.index(5) == 4
    assert 8 not in fam


def test_as_semigroup_matches_build_power_semigroup():
    z3 = zoo.cyclic_group(3)
    assert full_family(z3).as_semigroup() == build_power_semigroup(z3)
