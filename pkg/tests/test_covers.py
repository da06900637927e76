"""Group data loading, SLP evaluation, cover homomorphism checks, and
splitting machinery on the vendored data."""

import os
import random
import shutil

import pytest

import m22verify
from m22verify.covers import (
    CoversError,
    WordTable,
    evaluate_slp,
    load_group,
    order6_survey,
    parse_slp,
    slp_from_word,
    splits,
    lift_subgroup,
    _splits_exhaustive,
    _splits_mod2,
)
from m22verify.permgrp import PermGroup, Permutation, parse_permutation

DATA = os.path.join(os.path.dirname(m22verify.__file__), "data", "groups")


@pytest.fixture(scope="module")
def m22():
    return load_group(os.path.join(DATA, "m22"))


@pytest.fixture(scope="module")
def double_cover():
    return load_group(os.path.join(DATA, "2m22"))


# ---------------------------------------------------------------------------
# straight-line programs
# ---------------------------------------------------------------------------

def test_slp_round_trip():
    gens = [parse_permutation("(0 1 2 3 4)", 5),
            parse_permutation("(0 1)", 5)]
    rng = random.Random(53)
    for _ in range(30):
        seq = tuple(rng.choice((1, -1, 2, -2)) for _ in range(rng.randint(1, 12)))
        direct = Permutation.identity(5)
        for s in seq:
            g = gens[abs(s) - 1]
            direct = direct * (g if s > 0 else g.inverse())
        word = parse_slp(slp_from_word(seq))
        assert evaluate_slp(word, gens) == direct


def test_parse_slp_rejects_garbage():
    with pytest.raises(CoversError):
        parse_slp("nonsense line\n")


# ---------------------------------------------------------------------------
# data loading and certification
# ---------------------------------------------------------------------------

def test_load_m22(m22):
    assert m22.order == 443520
    assert m22.degree == 22
    assert m22.group.is_transitive()


def test_load_double_cover(double_cover):
    assert double_cover.c == 2
    assert double_cover.order == 2 * 443520
    assert double_cover.quotient.order == 443520
    assert double_cover.z.order() == 2


def test_corrupt_generator_file_rejected(m22, tmp_path):
    src = os.path.join(DATA, "m22")
    dst = tmp_path / "m22"
    shutil.copytree(src, dst)
    gens_file = None
    for name in os.listdir(dst):
        if name.endswith((".gens", ".txt")) or "gen" in name:
            gens_file = dst / name
    assert gens_file is not None, os.listdir(dst)
    text = gens_file.read_text()
    # swap the first two point labels in the permutation data
    lines = text.splitlines()
    for i, line in enumerate(lines):
        toks = line.split()
        if len(toks) > 3 and all(t.isdigit() for t in toks[:4]):
            toks[0], toks[1] = toks[1], toks[0]
            lines[i] = " ".join(toks)
            break
    gens_file.write_text("\n".join(lines) + "\n")
    with pytest.raises(CoversError):
        load_group(str(dst))


# ---------------------------------------------------------------------------
# the cover homomorphism
# ---------------------------------------------------------------------------

def quotient_part(cover, diag_elt):
    d = cover.cover_degree
    images = [diag_elt(d + p) - d for p in range(cover.quotient.degree)]
    return Permutation(images)


def test_functorial_correspondence(double_cover):
    """100 random words evaluated on the diagonal generators project to
    their evaluation on the quotient generators."""
    cover = double_cover
    qgens = cover.quotient.gens
    rng = random.Random(59)
    n = len(cover.diag_gens)
    for _ in range(100):
        seq = tuple(rng.choice([i for i in range(-n, n + 1) if i])
                    for _ in range(rng.randint(1, 10)))
        word = parse_slp(slp_from_word(seq))
        diag = evaluate_slp(word, cover.diag_gens)
        q = evaluate_slp(word, qgens)
        assert quotient_part(cover, diag) == q


def test_kernel_projects_to_identity(double_cover):
    assert quotient_part(double_cover, double_cover.z_diag).is_identity()


# ---------------------------------------------------------------------------
# subgroup lifting and splitting
# ---------------------------------------------------------------------------

def small_subgroup_word(cover, order_cap, rng):
    """A random word generating a small cyclic subgroup of the quotient."""
    n = len(cover.diag_gens)
    while True:
        seq = tuple(rng.choice([i for i in range(-n, n + 1) if i])
                    for _ in range(rng.randint(2, 8)))
        q = evaluate_slp(parse_slp(slp_from_word(seq)), cover.quotient.gens)
        if 1 < q.order() <= order_cap:
            return seq


def test_lift_subgroup_sizes(double_cover):
    rng = random.Random(61)
    seq = small_subgroup_word(double_cover, 8, rng)
    q = evaluate_slp(parse_slp(slp_from_word(seq)), double_cover.quotient.gens)
    elements, u = lift_subgroup(double_cover, [parse_slp(slp_from_word(seq))])
    assert u == q.order()
    assert len(elements) == u * double_cover.c


def test_lift_subgroup_rejects_wrong_order(double_cover):
    rng = random.Random(67)
    seq = small_subgroup_word(double_cover, 8, rng)
    with pytest.raises(CoversError):
        lift_subgroup(double_cover, [parse_slp(slp_from_word(seq))], u=10**4 + 1)


def test_splits_conjugation_invariant(double_cover):
    rng = random.Random(71)
    n = len(double_cover.diag_gens)
    for _ in range(3):
        seq = small_subgroup_word(double_cover, 12, rng)
        base = splits(double_cover, [parse_slp(slp_from_word(seq))])
        conj = tuple(rng.choice([i for i in range(-n, n + 1) if i])
                     for _ in range(rng.randint(1, 6)))
        inv = tuple(-s for s in reversed(conj))
        conj_seq = inv + seq + conj
        assert splits(double_cover, [parse_slp(slp_from_word(conj_seq))]) == base


def test_mod2_shortcut_matches_exhaustive(double_cover):
    rng = random.Random(73)
    for _ in range(3):
        seq = small_subgroup_word(double_cover, 10, rng)
        elements, u = lift_subgroup(double_cover, [parse_slp(slp_from_word(seq))])
        assert _splits_mod2(double_cover, elements, u) \
            == _splits_exhaustive(double_cover, elements, u)


def test_trivial_subgroup_splits(double_cover):
    assert splits(double_cover, []) is True


# ---------------------------------------------------------------------------
# word tables and the order-6 survey
# ---------------------------------------------------------------------------

def s5():
    return PermGroup([parse_permutation("(0 1 2 3 4)", 5),
                      parse_permutation("(0 1)", 5)], 5)


def test_word_table_words_evaluate_back():
    G = s5()
    wt = WordTable(G.generators)
    assert wt.size == 120
    rng = random.Random(79)
    for _ in range(20):
        g = G.random_element(rng)
        if g.is_identity():
            continue  # the identity has the empty word
        assert evaluate_slp(parse_slp(slp_from_word(wt.word_of(g))), G.generators) == g


def test_order6_survey_on_s5_deterministic():
    G = s5()
    wt = WordTable(G.generators)
    a = order6_survey(G, wt)
    b = order6_survey(G, wt)
    assert [e["name"] for e in a] == [e["name"] for e in b]
    for ea, eb in zip(a, b):
        assert [g.key for g in ea["generators"]] \
            == [g.key for g in eb["generators"]]
    names = [e["name"] for e in a]
    assert "C6" in names and "S3" in names


def test_order6_survey_conjugation_closed():
    """Conjugating any representative lands in some returned orbit: the
    conjugate subgroup has the same structure name and element orders."""
    G = s5()
    rng = random.Random(83)
    reps = order6_survey(G)
    for entry in reps:
        v = G.random_element(rng)
        conj = [v.inverse() * g * v for g in entry["generators"]]
        sub = PermGroup(conj, G.degree)
        assert sub.order() == 6
