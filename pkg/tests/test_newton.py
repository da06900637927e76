"""Newton polygon construction: hull invariants and the frozen polygon
of the degree-8 factor at p = 3."""

import random
from fractions import Fraction

import pytest

from m22verify.exactpoly import IntPoly, padic_valuation, poly_gtilde
from m22verify.newton import NewtonError, newton_polygon, orbit_constraints


def random_poly_with_valuations(p, rng):
    degree = rng.randint(1, 10)
    coeffs = []
    for i in range(degree + 1):
        if i < degree and rng.random() < 0.25:
            coeffs.append(0)
        else:
            unit = rng.choice([1, 2, -1, 4, -5])
            while unit % p == 0:
                unit += 1
            coeffs.append(unit * p ** rng.randint(0, 6))
    return IntPoly(coeffs)


def test_polygon_is_lower_hull():
    """Every finite-valuation point lies on or above the hull; slopes
    strictly increase; the horizontal span covers ord_x(f)..deg(f)."""
    rng = random.Random(23)
    for p in (2, 3, 7):
        for _ in range(60):
            f = random_poly_with_valuations(p, rng)
            poly = newton_polygon(f, p)
            lowest = next(i for i, c in enumerate(f.coeffs) if c != 0)
            assert poly.total_length == f.degree - lowest

            slopes = [s for s, _l in poly.segments]
            assert slopes == sorted(slopes)
            assert len(set(slopes)) == len(slopes)

            # walk the hull to recover its vertex heights
            heights = {lowest: Fraction(padic_valuation(f.coeffs[lowest], p))}
            x = lowest
            y = heights[x]
            hull = {x: y}
            for s, l in poly.segments:
                for _ in range(l):
                    x += 1
                    y += s
                    hull[x] = y
            for i, c in enumerate(f.coeffs):
                if c == 0:
                    continue
                v = padic_valuation(c, p)
                assert i in hull
                assert Fraction(v) >= hull[i]


def test_polygon_additive_under_multiplication():
    """The polygon of a product is the slope-multiset union of the factor
    polygons (Newton polygons add)."""
    rng = random.Random(29)
    for p in (3, 5):
        for _ in range(40):
            f = random_poly_with_valuations(p, rng)
            g = random_poly_with_valuations(p, rng)
            pf = newton_polygon(f, p)
            pg = newton_polygon(g, p)
            pfg = newton_polygon(f * g, p)
            combined = {}
            for s, l in pf.segments + pg.segments:
                combined[s] = combined.get(s, 0) + l
            got = {s: l for s, l in pfg.segments}
            assert got == combined


def test_degenerate_inputs():
    assert newton_polygon(IntPoly((5,)), 5).segments == ()
    with pytest.raises(NewtonError):
        newton_polygon(IntPoly(()), 5)


def test_degree8_factor_polygon_at_3():
    poly = newton_polygon(poly_gtilde(), 3)
    assert poly.segments == (
        (Fraction(-2), 4),
        (Fraction(-1, 3), 3),
        (Fraction(0), 1),
    )


def test_orbit_constraints_of_frozen_polygon():
    poly = newton_polygon(poly_gtilde(), 3)
    frags = orbit_constraints(poly)
    assert len(frags) == 6
    assert sum(1 for f in frags if f.fixed_point) == 1
    assert sorted(f.divisor for f in frags) == [1, 1, 1, 1, 1, 3]


def test_orbit_constraints_rejects_bad_segment():
    # slope -1/2 over odd length cannot split into orbits
    f = IntPoly((9, 0, 0, 1))  # points (0,2),(3,0): slope -2/3, length 3 ok
    poly = newton_polygon(f, 3)
    assert poly.segments == ((Fraction(-2, 3), 3),)
    frags = orbit_constraints(poly)
    assert [f.divisor for f in frags] == [3]
