"""Point counting on the 4-subset resolvent: genus/bound arithmetic and
kernel-vs-oracle agreement at small field sizes."""

import math

import pytest

from m22verify.elkies import (
    ElkiesError,
    ExclusionConfig,
    brute_force_count,
    count_quartic_points,
    exclusion_verdict,
    hasse_weil_bound,
    hypothetical_genus,
)
from m22verify.exactpoly import poly_f
from m22verify.permgrp import CycleType

BRANCH_TYPES = [
    CycleType((12, 6, 4)),
    CycleType((5, 5, 5, 5, 1, 1)),
    CycleType([2] * 7 + [1] * 8),
]


def test_hypothetical_genus_is_712():
    assert hypothetical_genus(22, 4, BRANCH_TYPES) == 712


def test_hasse_weil_bound_value():
    assert hasse_weil_bound(2160553, 712) == 4253666


def test_hasse_weil_bound_is_exact_ceiling():
    for lam, g in ((101, 3), (1009, 10), (10007, 712)):
        b = hasse_weil_bound(lam, g)
        # b - lam - 1 is the ceiling of 2 g sqrt(lam)
        r = b - lam - 1
        assert (r - 1) ** 2 < 4 * g * g * lam <= r * r


def test_hasse_weil_bound_rejects_composite():
    with pytest.raises(ElkiesError):
        hasse_weil_bound(100, 5)


def test_exclusion_verdict_branches():
    assert exclusion_verdict(11, 10).verdict == "CONTRADICTION"
    assert exclusion_verdict(10, 10).verdict == "INCONCLUSIVE"
    assert exclusion_verdict(3, 10).verdict == "INCONCLUSIVE"


def test_count_matches_brute_force_small():
    F = poly_f()
    for lam in (101, 251):
        cfg = ExclusionConfig(lam, k=4, threads=1)
        res = count_quartic_points(F, cfg)
        brute = brute_force_count(F, cfg)
        assert res.count == brute, lam


def test_count_independent_of_shard_size():
    F = poly_f()
    results = []
    for shard in (8, 64, 1 << 15):
        cfg = ExclusionConfig(101, k=4, threads=1, shard_size=shard)
        results.append(count_quartic_points(F, cfg))
    assert len({r.count for r in results}) == 1
    assert len({tuple(r.skipped_t0) for r in results}) == 1


def test_checkpoint_resume(tmp_path):
    F = poly_f()
    ck = str(tmp_path / "ck.txt")
    cfg = ExclusionConfig(101, k=4, threads=1, shard_size=16, checkpoint=ck)
    first = count_quartic_points(F, cfg)
    # a second run must reuse the checkpoint and agree
    cfg2 = ExclusionConfig(101, k=4, threads=1, shard_size=16, checkpoint=ck)
    second = count_quartic_points(F, cfg2)
    assert first.count == second.count
    assert first.skipped_t0 == second.skipped_t0
