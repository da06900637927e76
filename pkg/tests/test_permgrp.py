"""Permutation groups: BSGS vs brute force, induced actions, genus
arithmetic, and small-group subgroup surveys."""

import random

import pytest

from m22verify.permgrp import (
    CycleType,
    FiniteGroupTable,
    PermGroup,
    PermGrpError,
    Permutation,
    RHGenusError,
    affine_group_8,
    all_subgroups_small,
    brute_force_order,
    bsgs_order,
    centralizer_order,
    conjugacy_class_size,
    decomposition_plausible,
    induced_kset_action,
    parity,
    parse_permutation,
    rh_genus,
    stabilizer_orbit_lengths,
)


def random_perm(n, rng):
    images = list(range(n))
    rng.shuffle(images)
    return Permutation(images)


# ---------------------------------------------------------------------------
# permutations and cycle types
# ---------------------------------------------------------------------------

def test_parse_permutation_cycle_notation():
    p = parse_permutation("(0 1 2)(3 4)", degree=6)
    assert list(p.images) == [1, 2, 0, 4, 3, 5]
    assert p.cycle_type() == CycleType((3, 2, 1))


def test_parity_matches_cycle_structure():
    rng = random.Random(31)
    for _ in range(40):
        p = random_perm(8, rng)
        transpositions = sum(l - 1 for l in p.cycle_type().parts)
        assert parity(p) == ("even" if transpositions % 2 == 0 else "odd")


def test_cycle_type_canonical_permutation():
    ct = CycleType((5, 4, 1, 1, 2))
    assert ct.parts == (5, 4, 2, 1, 1)
    assert ct.canonical_permutation().cycle_type() == ct


# ---------------------------------------------------------------------------
# BSGS order vs exhaustive enumeration
# ---------------------------------------------------------------------------

def test_bsgs_vs_brute_force_random_groups():
    rng = random.Random(37)
    tried = 0
    while tried < 30:
        n = rng.randint(3, 7)
        gens = [random_perm(n, rng) for _ in range(rng.randint(1, 2))]
        brute = brute_force_order(gens, cap=10**6)
        if brute > 5000:
            continue
        tried += 1
        assert bsgs_order(PermGroup(gens, n)) == brute


def test_bsgs_known_orders():
    s5 = PermGroup([parse_permutation("(0 1)", 5),
                    parse_permutation("(0 1 2 3 4)", 5)], 5)
    assert bsgs_order(s5) == 120
    a5 = PermGroup([parse_permutation("(0 1 2)", 5),
                    parse_permutation("(0 1 2 3 4)", 5)], 5)
    assert bsgs_order(a5) == 60


def test_stabilizer_and_orbits():
    s5 = PermGroup([parse_permutation("(0 1)", 5),
                    parse_permutation("(0 1 2 3 4)", 5)], 5)
    assert s5.is_transitive()
    assert stabilizer_orbit_lengths(s5, 0) == [1, 4]


def test_centralizer_and_class_size_consistency():
    s5 = PermGroup([parse_permutation("(0 1)", 5),
                    parse_permutation("(0 1 2 3 4)", 5)], 5)
    rng = random.Random(41)
    for _ in range(5):
        x = random_perm(5, rng)
        c = centralizer_order(s5, x)
        k = conjugacy_class_size(s5, x)
        assert c * k == 120


# ---------------------------------------------------------------------------
# induced action on k-subsets
# ---------------------------------------------------------------------------

def test_induced_kset_action_degree_and_order():
    import math
    rng = random.Random(43)
    for _ in range(20):
        n, k = rng.randint(4, 8), rng.randint(2, 3)
        p = random_perm(n, rng)
        q = induced_kset_action(p, k)
        assert q.degree == math.comb(n, k)
        # the induced permutation has the same order
        order = 1
        r = p
        while not r.is_identity():
            r = r * p
            order += 1
        s = q
        qorder = 1
        while not s.is_identity():
            s = s * q
            qorder += 1
        assert qorder == order or order % qorder == 0


def test_induced_kset_action_is_homomorphism():
    rng = random.Random(47)
    for _ in range(20):
        a, b = random_perm(6, rng), random_perm(6, rng)
        assert (induced_kset_action(a, 2) * induced_kset_action(b, 2)).key \
            == induced_kset_action(a * b, 2).key


# ---------------------------------------------------------------------------
# Riemann-Hurwitz genus
# ---------------------------------------------------------------------------

def test_rh_genus_of_branch_triple():
    types = [CycleType((12, 6, 4)),
             CycleType((5, 5, 5, 5, 1, 1)),
             CycleType([2] * 7 + [1] * 8)]
    assert sum(22 - t.cycle_count for t in types) == 42
    assert rh_genus(22, types) == 0


def test_rh_genus_rejects_odd_characteristic():
    with pytest.raises(RHGenusError):
        rh_genus(4, [CycleType((2, 1, 1))])


# ---------------------------------------------------------------------------
# small-group tables and subgroup surveys
# ---------------------------------------------------------------------------

def s4():
    return PermGroup([parse_permutation("(0 1)", 4),
                      parse_permutation("(0 1 2 3)", 4)], 4)


def test_subgroup_survey_of_s4():
    classes = all_subgroups_small(s4())
    assert sum(c.class_size for c in classes) == 30  # subgroups of S4
    assert len(classes) == 11                        # conjugacy classes
    names = sorted(c.structure_name() for c in classes)
    for expected in ("C1", "C2", "C3", "C4", "S3", "A4", "S4"):
        assert expected in names


def test_decomposition_plausibility_at_3():
    by_name = {}
    for cls in all_subgroups_small(s4()):
        by_name.setdefault(cls.structure_name(), cls)
    assert decomposition_plausible(by_name["C3"], 3)
    assert decomposition_plausible(by_name["S3"], 3)
    assert not decomposition_plausible(by_name["A4"], 3)
    assert not decomposition_plausible(by_name["S4"], 3)


def test_affine_group_8():
    g8 = affine_group_8()
    assert g8.degree == 8
    assert g8.order() == 1344
    assert g8.is_transitive()
    stab = g8.stabilizer(0)
    assert stab.order() == 168
