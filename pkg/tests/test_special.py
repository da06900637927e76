"""Specialization analysis: integral models, ramification verdicts,
branch data, and the degree-8 factor checks."""

from fractions import Fraction

import pytest

from m22verify.exactpoly import IntPoly, RatPoly, poly_f, poly_g, t_of_s
from m22verify.special import (
    SpecialError,
    branch_and_inertia,
    decomposition_at_3,
    gtilde_checks,
    integral_model,
    msub_square_check,
    ramification_verdict,
    sline_branch_points,
)


# ---------------------------------------------------------------------------
# integral models
# ---------------------------------------------------------------------------

def test_integral_model_minimal_scale():
    # 4X^2 - 1 at denominators: h(X) = X^2 - 1/4 scales by 2
    F = RatPoly((Fraction(-1, 4), 0, 1))
    model = integral_model(F, None)
    assert model.scale == 2
    assert model.h == IntPoly((-1, 0, 1))


def test_integral_model_integer_input_unchanged():
    F = RatPoly((3, -2, 1))
    model = integral_model(F, None)
    assert model.scale == 1
    assert model.h == IntPoly((3, -2, 1))


def test_integral_model_of_family_specializations():
    g = poly_g()
    m35 = integral_model(g, Fraction(35))
    assert m35.h.degree == 22
    assert m35.scale == 1
    m11 = integral_model(g, Fraction(1, 11**5))
    assert m11.h.degree == 22
    assert m11.scale == 2


# ---------------------------------------------------------------------------
# ramification verdicts (known local behavior as controls)
# ---------------------------------------------------------------------------

def verdict_of(coeffs, p):
    model = integral_model(RatPoly(coeffs), None)
    return ramification_verdict(model, p)


def test_unramified_squarefree_reduction():
    v = verdict_of((1, 1, 1), 5)  # x^2 + x + 1 stays squarefree mod 5
    assert v.verdict == "UNRAMIFIED"
    assert v.method == "squarefree"


def test_ramified_quadratic():
    v = verdict_of((-3, 0, 1), 3)  # Q(sqrt 3) ramifies at 3
    assert v.verdict == "RAMIFIED"
    assert v.e_pattern


def test_unramified_despite_repeated_reduction():
    # x^2 + 25 generates Q(i): unramified at 5 even though the reduction
    # mod 5 is a square
    v = verdict_of((25, 0, 1), 5)
    assert v.verdict == "UNRAMIFIED"
    assert v.method in ("dedekind", "newton-ore")


def test_ramified_eisenstein():
    v = verdict_of((5, 0, 1), 5)  # x^2 + 5 ramifies at 5
    assert v.verdict == "RAMIFIED"


def test_family_specialization_verdicts():
    g = poly_g()
    cases = [
        (Fraction(35), 7),
        (Fraction(1, 11**5), 11),
        (Fraction(1, 25), 5),
    ]
    for s0, p in cases:
        model = integral_model(g, s0)
        v = ramification_verdict(model, p)
        assert v.verdict == "UNRAMIFIED", (s0, p, v.verdict, v.method)


def test_sline_branch_points_avoid_specializations():
    pts = sline_branch_points()
    assert Fraction(0) in pts
    for s0 in (Fraction(35), Fraction(1, 11**5), Fraction(1, 25)):
        assert s0 not in pts


# ---------------------------------------------------------------------------
# branch data of the degree-22 family
# ---------------------------------------------------------------------------

@pytest.fixture(scope="module")
def branch_points():
    return branch_and_inertia(poly_f())


def test_branch_point_count_and_types(branch_points):
    assert len(branch_points) == 3
    types = {(b.point is None, b.cycle_type.parts) for b in branch_points}
    assert (True, (12, 6, 4)) in types
    assert (False, (5, 5, 5, 5, 1, 1)) in types
    assert (False, (2,) * 7 + (1,) * 8) in types


def test_branch_rh_sum(branch_points):
    assert sum(22 - b.cycle_type.cycle_count for b in branch_points) == 42


def test_finite_branch_points_match_substitution(branch_points):
    """The finite branch points are t = 0 and t = t(0) (the image of the
    s-line branch point under the substitution)."""
    finite = sorted(b.point for b in branch_points if b.point is not None)
    t0 = t_of_s()(0)
    assert finite == sorted([Fraction(0), t0])


def test_branch_parities(branch_points):
    """The three inertia types have parities (odd, even, odd): their
    product can lie in an index-2 overgroup without the cover descending."""
    from m22verify.permgrp import cycle_type_parity
    by_parts = {b.cycle_type.parts: cycle_type_parity(b.cycle_type)
                for b in branch_points}
    assert by_parts[(12, 6, 4)] == "odd"
    assert by_parts[(5, 5, 5, 5, 1, 1)] == "even"
    assert by_parts[(2,) * 7 + (1,) * 8] == "odd"


# ---------------------------------------------------------------------------
# even-subgroup certificate
# ---------------------------------------------------------------------------

def test_msub_square_with_default_substitution():
    assert msub_square_check() is True


def test_msub_not_square_with_identity_substitution():
    assert msub_square_check(RatPoly((0, 1))) is False


def test_msub_rejects_constant_substitution():
    with pytest.raises(SpecialError):
        msub_square_check(RatPoly.const(3))


# ---------------------------------------------------------------------------
# the degree-8 factor
# ---------------------------------------------------------------------------

@pytest.fixture(scope="module")
def gtilde_report():
    return gtilde_checks(min_samples=200, seed=0)


def test_gtilde_divides(gtilde_report):
    assert gtilde_report.divides is True


def test_gtilde_census_refutes_projective_groups(gtilde_report):
    assert "projective-168" in gtilde_report.refuted
    assert "projective-336" in gtilde_report.refuted
    # containing groups can never be refuted by observed cycle types
    assert "symmetric-8" in gtilde_report.unrefuted


def test_gtilde_checks_deterministic():
    a = gtilde_checks(min_samples=100, seed=3)
    b = gtilde_checks(min_samples=100, seed=3)
    assert a.census == b.census
    assert a.refuted == b.refuted


def test_decomposition_at_3_filter_sets():
    r = decomposition_at_3()
    assert r.orbit_filtered == ["A4", "C3", "S3", "S4"]
    assert r.final == ["C3", "S3"]
    assert any(f.fixed_point for f in r.fragments)
    assert any(f.divisor == 3 for f in r.fragments)
