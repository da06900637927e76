"""Exact polynomial arithmetic: unit tests and algebraic property suites."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from m22verify.exactpoly import (
    BiPoly,
    ExactPolyError,
    IntPoly,
    RatPoly,
    discriminant,
    discriminant_x,
    divide_exact,
    dump_bipoly,
    dump_ratpoly,
    intpoly_gcd,
    is_square,
    load_bipoly,
    load_ratpoly,
    padic_valuation,
    poly_f,
    poly_g,
    poly_gtilde,
    rational_roots,
    resultant,
    squarefree_decomposition,
    t_of_s,
)


# ---------------------------------------------------------------------------
# basic ring operations
# ---------------------------------------------------------------------------

def test_intpoly_normalization_and_degree():
    assert IntPoly((1, 2, 0, 0)).degree == 1
    assert IntPoly(()).degree == -1
    assert IntPoly(()).is_zero()
    with pytest.raises(ExactPolyError):
        IntPoly(()).lc()


def test_intpoly_arithmetic_identities():
    rng = random.Random(1)
    for _ in range(50):
        a = IntPoly([rng.randint(-9, 9) for _ in range(rng.randint(0, 6))])
        b = IntPoly([rng.randint(-9, 9) for _ in range(rng.randint(0, 6))])
        c = IntPoly([rng.randint(-9, 9) for _ in range(rng.randint(0, 6))])
        assert (a + b) * c == a * c + b * c
        assert a * b == b * a
        if not b.is_zero():
            assert (a * b).exact_div(b) == a


def test_compose_evaluates_consistently():
    rng = random.Random(2)
    for _ in range(25):
        a = IntPoly([rng.randint(-5, 5) for _ in range(4)])
        b = IntPoly([rng.randint(-5, 5) for _ in range(3)])
        x = rng.randint(-4, 4)
        assert a.compose(b)(x) == a(b(x))


# ---------------------------------------------------------------------------
# resultants and discriminants
# ---------------------------------------------------------------------------

small_intpoly = st.lists(st.integers(-6, 6), min_size=1, max_size=5).map(IntPoly)
nonzero_intpoly = small_intpoly.filter(lambda f: not f.is_zero())


@settings(max_examples=150, deadline=None)
@given(nonzero_intpoly, nonzero_intpoly, nonzero_intpoly)
def test_resultant_multiplicative(f, g, h):
    assert resultant(f, g * h) == resultant(f, g) * resultant(f, h)


def test_resultant_of_linear_factors():
    # Res(x - a, x - b) = g(a) = a - b
    for a in range(-3, 4):
        for b in range(-3, 4):
            f = IntPoly((-a, 1))
            g = IntPoly((-b, 1))
            assert resultant(f, g) == a - b


def test_discriminant_quadratic_convention():
    rng = random.Random(3)
    for _ in range(30):
        b, c = rng.randint(-10, 10), rng.randint(-10, 10)
        assert discriminant(IntPoly((c, b, 1))) == b * b - 4 * c


def test_discriminant_x_matches_univariate_specialization():
    F = poly_f()
    d = discriminant_x(F)  # IntPoly in t
    for t0 in (2, 3, 5):
        ft = F.evaluate_t(t0)
        num, _den = ft.clear_denominators()
        assert discriminant(num) == d(t0)


# ---------------------------------------------------------------------------
# gcd, squarefree decomposition, squares, roots
# ---------------------------------------------------------------------------

def test_intpoly_gcd_common_factor():
    f = IntPoly((1, 1))   # x + 1
    g = IntPoly((2, 1))   # x + 2
    assert intpoly_gcd(f * g, f * f) == f


def test_squarefree_decomposition_reconstructs():
    f = RatPoly((1, 1)) * RatPoly((1, 1)) * RatPoly((2, 0, 1)) * RatPoly.const(3)
    lead, parts = squarefree_decomposition(f)
    rebuilt = RatPoly.const(lead)
    for factor, mult in parts:
        for _ in range(mult):
            rebuilt = rebuilt * factor
    assert rebuilt == f
    assert sorted(m for _, m in parts) == [1, 2]


def test_is_square_detects_witness():
    e = RatPoly((Fraction(1, 2), 3, 1))
    d = e * e * RatPoly.const(Fraction(9, 4))
    ok, witness = is_square(d)
    assert ok
    # d = c * witness^2 with c a square rational
    ratio = d.coeffs[-1] / (witness * witness).coeffs[-1]
    assert ratio > 0
    assert d == witness * witness * RatPoly.const(ratio)
    assert is_square(d * RatPoly((0, 1)))[0] is False


def test_rational_roots_exact():
    # (2x - 1)(x + 3)(3x + 2)
    f = IntPoly((-1, 2)) * IntPoly((3, 1)) * IntPoly((2, 3))
    assert sorted(rational_roots(f)) == sorted(
        [Fraction(1, 2), Fraction(-3), Fraction(-2, 3)])


def test_padic_valuation():
    assert padic_valuation(Fraction(12), 2) == 2
    assert padic_valuation(Fraction(1, 9), 3) == -2
    assert padic_valuation(Fraction(5), 7) == 0
    assert padic_valuation(Fraction(0), 7) is None


def test_divide_exact_raises_on_remainder():
    with pytest.raises(ExactPolyError):
        divide_exact(RatPoly((1, 0, 1)), RatPoly((1, 1)))


# ---------------------------------------------------------------------------
# serialization round trips
# ---------------------------------------------------------------------------

def test_ratpoly_roundtrip():
    f = RatPoly((Fraction(1, 3), -2, Fraction(7, 5)))
    assert load_ratpoly(dump_ratpoly(f)) == f


def test_bipoly_roundtrip():
    F = poly_f()
    assert load_bipoly(dump_bipoly(F)) == F


# ---------------------------------------------------------------------------
# the fixed polynomials of the verification pipeline
# ---------------------------------------------------------------------------

def test_poly_f_shape():
    F = poly_f()
    assert F.xdegree == 22
    assert F.tdegree() == 1
    assert F.lc_x() == IntPoly.const(1)


def test_poly_g_is_scaled_substitution():
    """g(s, X) = 256 * f(t(s), X) at sample values of s."""
    F, G, t = poly_f(), poly_g(), t_of_s()
    for s0 in (Fraction(2), Fraction(1, 3), Fraction(-5)):
        t0 = t(s0)
        lhs = G.evaluate_t(s0)
        rhs = F.evaluate_t(t0) * RatPoly.const(256)
        assert lhs == rhs


def test_poly_gtilde_degree():
    assert poly_gtilde().degree == 8
