"""p-adic Newton polygons of rational-coefficient polynomials and the
orbit-size constraints their segments impose on local Galois action."""

from fractions import Fraction

from .exactpoly import RatPoly, padic_valuation


class NewtonError(Exception):
    pass


class NewtonPolygon:
    """Lower convex hull of the points (j, v_p(c_j)).

    segments: ordered (slope: Fraction, horizontal_length: int), slopes
    strictly increasing; anchors: the finite-valuation points retained
    for reporting.
    """

    __slots__ = ("segments", "anchors", "p")

    def __init__(self, segments, anchors, p):
        self.segments = tuple((Fraction(s), int(l)) for s, l in segments)
        self.anchors = tuple(anchors)
        self.p = p
        slopes = [s for s, _ in self.segments]
        if any(b >= a for a, b in zip(slopes[1:], slopes)):
            raise NewtonError("slopes must strictly increase")
        if any(l <= 0 for _, l in self.segments):
            raise NewtonError("segment lengths must be positive")

    @property
    def total_length(self):
        return sum(l for _, l in self.segments)

    def __repr__(self):
        body = ", ".join("(%s, %d)" % (s, l) for s, l in self.segments)
        return "NewtonPolygon(p=%d, [%s])" % (self.p, body)


def newton_polygon(f, p):
    """Newton polygon of f at the prime p (monotone-chain lower hull over
    the finite-valuation coefficient points, collinear points merged)."""
    if isinstance(f, RatPoly):
        coeffs = list(f.coeffs)
    else:
        coeffs = [Fraction(c) for c in f.coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if not coeffs:
        raise NewtonError("zero polynomial has no Newton polygon")
    points = [
        (j, Fraction(padic_valuation(c, p)))
        for j, c in enumerate(coeffs)
        if c != 0
    ]
    # monotone chain for the lower hull, left to right
    hull = []
    for pt in points:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], pt) <= 0:
            hull.pop()
        hull.append(pt)
    segments = []
    for (x0, y0), (x1, y1) in zip(hull, hull[1:]):
        slope = Fraction(y1 - y0, x1 - x0)
        length = x1 - x0
        if segments and segments[-1][0] == slope:
            segments[-1] = (slope, segments[-1][1] + length)
        else:
            segments.append((slope, length))
    return NewtonPolygon(segments, points, p)


def _cross(o, a, b):
    """Positive when o->a->b turns counterclockwise (a below the o-b line
    for a lower hull kept as a left turn chain)."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


class OrbitFragment:
    """One deduced constraint: a root-orbit of size divisible by `divisor`
    inside a local factor of degree `degree`; fixed_point marks a
    degree-1 unramified factor (a guaranteed rational fixed point)."""

    __slots__ = ("divisor", "degree", "fixed_point", "slope")

    def __init__(self, divisor, degree, fixed_point, slope):
        self.divisor = divisor
        self.degree = degree
        self.fixed_point = fixed_point
        self.slope = slope

    def __eq__(self, other):
        return (
            isinstance(other, OrbitFragment)
            and (self.divisor, self.degree, self.fixed_point, self.slope)
            == (other.divisor, other.degree, other.fixed_point, other.slope)
        )

    def __hash__(self):
        return hash((self.divisor, self.degree, self.fixed_point, self.slope))

    def __repr__(self):
        if self.fixed_point:
            return "OrbitFragment(fixed point)"
        return "OrbitFragment(size divisible by %d in a degree-%d factor)" % (
            self.divisor,
            self.degree,
        )


def orbit_constraints(polygon):
    """Fragments deduced segment by segment: slope -a/b in lowest terms
    over a length-l segment yields l/b fragments, each an orbit of size
    divisible by b; a slope-0 length-1 segment is a fixed point."""
    fragments = []
    for slope, length in polygon.segments:
        b = slope.denominator
        if length % b != 0:
            raise NewtonError(
                "segment of slope %s has length %d not divisible by %d"
                % (slope, length, b)
            )
        count = length // b
        fixed = slope == 0 and length == 1
        for _ in range(count):
            fragments.append(OrbitFragment(b, b, fixed, slope))
    return fragments
