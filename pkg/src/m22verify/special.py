"""Specialization analysis of the bundled polynomial families: integral
models, per-prime ramification verdicts, the p=3 decomposition-group
pipeline for the degree-8 factor, branch-locus/inertia extraction, and
the square-discriminant certificate for the substituted family."""

import math
from fractions import Fraction

from .exactpoly import (
    IntPoly,
    RatPoly,
    discriminant_x,
    is_square,
    poly_f,
    poly_g,
    poly_gtilde,
    rational_roots,
    t_of_s,
    _is_probable_prime,
)
from .ffpoly import (
    FpPolynomial,
    PrimeField,
    fp_gcd,
    fp_squarefree_decomposition,
    full_factor,
    reduce_mod_p,
    BadPrimeError,
)
from .newton import newton_polygon, orbit_constraints
from .permgrp import (
    CycleType,
    affine_group_8,
    all_subgroups_small,
    decomposition_plausible,
    parity,
)


class SpecialError(Exception):
    pass


# ---------------------------------------------------------------------------
# integral models
# ---------------------------------------------------------------------------

class IntegralModel:
    """Monic integer polynomial h with h(c*r) = 0 for every root r of the
    specialized polynomial."""

    def __init__(self, h, scale, s0, original):
        self.h = h
        self.scale = scale
        self.s0 = s0
        self.original = original

    def __repr__(self):
        return "IntegralModel(degree %d, scale %s)" % (self.h.degree, self.scale)


def _factor_int(n):
    """Prime factorization by trial division; a large leftover cofactor is
    treated as prime (raises if it is a proper power, which would make
    minimality unsound)."""
    n = abs(n)
    out = {}
    d = 2
    while d * d <= n and d < 10**6:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        if not _is_probable_prime(n):
            root = math.isqrt(n)
            if root * root == n:
                out[root] = out.get(root, 0) + 2
                return out
            raise SpecialError("cannot factor scale cofactor %d" % n)
        out[n] = out.get(n, 0) + 1
    return out


def integral_model(F, s0=None):
    """Rescale the variable (X -> Y/c) to the minimal monic integer model.

    F is either a two-variable family (specialized at s0) or an already
    specialized one-variable polynomial (s0 kept only as a label)."""
    if isinstance(F, RatPoly):
        spec = F
        n = spec.degree
        if n < 1:
            raise SpecialError("constant polynomial has no integral model")
    else:
        s0 = Fraction(s0)
        spec = F.evaluate_t(s0)
        n = spec.degree
        if n != F.xdegree:
            raise SpecialError("degree drop at %s" % s0)
    lead = spec.coeffs[n]
    ratios = [spec.coeffs[i] / lead for i in range(n)]
    # minimal c: for every prime p, v_p(c) = max_i ceil(v_p(denom_i)/(n-i))
    exponents = {}
    for i, r in enumerate(ratios):
        den = r.denominator
        if den == 1:
            continue
        for p, e in _factor_int(den).items():
            need = -(-e // (n - i))  # ceil
            if exponents.get(p, 0) < need:
                exponents[p] = need
    c = 1
    for p, e in exponents.items():
        c *= p**e
    coeffs = []
    for i in range(n):
        v = ratios[i] * c ** (n - i)
        if v.denominator != 1:
            raise SpecialError("scale computation failed")
        coeffs.append(int(v))
    coeffs.append(1)
    return IntegralModel(IntPoly(coeffs), c, s0, spec)


# ---------------------------------------------------------------------------
# ramification verdicts
# ---------------------------------------------------------------------------

class RamificationVerdict:
    """verdict in {UNRAMIFIED, RAMIFIED, UNDETERMINED}; RAMIFIED carries a
    nonempty e-pattern [(residue degree, e), ...]."""

    def __init__(self, p, verdict, method, e_pattern=()):
        if verdict == "RAMIFIED" and not e_pattern:
            raise SpecialError("RAMIFIED verdict requires an e-pattern")
        self.p = p
        self.verdict = verdict
        self.method = method
        self.e_pattern = tuple(e_pattern)

    def __repr__(self):
        extra = " %s" % (list(self.e_pattern),) if self.e_pattern else ""
        return "RamificationVerdict(p=%d, %s via %s%s)" % (
            self.p, self.verdict, self.method, extra)


def ramification_verdict(model, p):
    """Squarefree shortcut, then Dedekind's p-maximality criterion, then a
    linear-factor Newton/Ore fallback; honest UNDETERMINED otherwise."""
    h = model.h
    if h.lc() != 1:
        raise SpecialError("model must be monic")
    field = PrimeField(p)
    hbar = FpPolynomial(field, [c % p for c in h.coeffs])
    if hbar.degree != h.degree:
        raise SpecialError("model must be monic")
    if hbar.is_squarefree():
        return RamificationVerdict(p, "UNRAMIFIED", "squarefree")
    factors = full_factor(hbar)
    if _dedekind_p_maximal(h, factors, field, p):
        pattern = sorted(
            ((fac.degree, e) for fac, e in factors), key=lambda t: (-t[1], -t[0])
        )
        if any(e > 1 for _, e in pattern):
            return RamificationVerdict(
                p, "RAMIFIED", "dedekind", [pe for pe in pattern if pe[1] > 1]
            )
        return RamificationVerdict(p, "UNRAMIFIED", "dedekind")
    ore = _ore_verdict(h, factors, p)
    if ore is not None:
        return ore
    return RamificationVerdict(p, "UNDETERMINED", "newton-ore")


def _dedekind_p_maximal(h, factors, field, p):
    """Dedekind's criterion: with hbar = prod gbar_i^e_i, gstar = prod
    gbar_i, kbar = hbar/gstar, and integer lifts g, k: the equation order
    is p-maximal iff gcd((g*k - h)/p mod p, gstar, kbar) = 1."""
    gstar = FpPolynomial.const(field, 1)
    for fac, _e in factors:
        gstar = gstar * fac
    kbar = FpPolynomial.const(field, 1)
    for fac, e in factors:
        for _ in range(e - 1):
            kbar = kbar * fac
    g_lift = _lift(gstar)
    k_lift = _lift(kbar)
    diff = g_lift * k_lift - h
    fcoeffs = []
    for c in diff.coeffs:
        if c % p:
            raise SpecialError("lift arithmetic failed in Dedekind criterion")
        fcoeffs.append((c // p) % p)
    fbar = FpPolynomial(field, fcoeffs)
    d = fp_gcd(fp_gcd(fbar, gstar), kbar)
    return d.degree == 0


def _lift(fp_poly):
    return IntPoly([int(c) for c in fp_poly.coeffs])


def _ore_verdict(h, factors, p):
    """Ore/Newton-polygon regularity per repeated irreducible factor: the
    phi-adic polygon of h must be p-tame with separable residual
    polynomials over F_p[t]/(phi).  Returns None (undetermined) when some
    factor is not phi-regular."""
    field = PrimeField(p)
    e_pattern = []
    ramified = False
    for fac, mult in factors:
        if mult == 1:
            e_pattern.append((fac.degree, 1))
            continue
        phibar = fac.monic()
        phi = _lift(phibar)
        terms = _phi_adic(h, phi, p)
        sides = _principal_polygon(terms, mult)
        if sides is None:
            return None
        for slope, length, lattice in sides:
            eseg = slope.denominator
            if eseg % p == 0:
                return None
            if not _residual_separable(lattice, phibar, field, p):
                return None
            for _ in range(length // eseg):
                if eseg > 1:
                    ramified = True
                e_pattern.append((phibar.degree, eseg))
    if ramified:
        return RamificationVerdict(
            p, "RAMIFIED", "newton-ore", [pe for pe in e_pattern if pe[1] > 1]
        )
    return RamificationVerdict(p, "UNRAMIFIED", "newton-ore")


def _phi_adic(h, phi, p):
    """phi-adic expansion h = sum a_i phi^i with Gauss valuations:
    returns [(i, v_p(a_i), a_i)], skipping zero terms."""
    from .exactpoly import padic_valuation

    out = []
    rem = h.to_rat()
    phir = phi.to_rat()
    i = 0
    while not rem.is_zero():
        q, r = rem.divmod(phir)
        if not r.is_zero():
            vals = [padic_valuation(c, p) for c in r.coeffs if c]
            coeffs = []
            for c in r.coeffs:
                if c.denominator != 1:
                    raise SpecialError("phi-adic expansion left the integers")
                coeffs.append(int(c))
            out.append((i, min(vals), IntPoly(coeffs)))
        rem = q
        i += 1
    return out


def _principal_polygon(terms, mult):
    """Negative-slope sides of the lower hull of {(i, v_i)}, with the
    on-side lattice terms attached; None if the shape is unusable."""
    pts = sorted((i, v) for i, v, _ in terms)
    by_index = {i: (v, a) for i, v, a in terms}
    hull = []
    for pt in pts:
        while len(hull) >= 2 and (
            (hull[-1][0] - hull[-2][0]) * (pt[1] - hull[-2][1])
            - (hull[-1][1] - hull[-2][1]) * (pt[0] - hull[-2][0])
        ) <= 0:
            hull.pop()
        hull.append(pt)
    sides = []
    total = 0
    for (x0, y0), (x1, y1) in zip(hull, hull[1:]):
        slope = Fraction(y1 - y0, x1 - x0)
        if slope >= 0:
            continue
        eseg = slope.denominator
        lattice = []
        for k in range((x1 - x0) // eseg + 1):
            j = x0 + k * eseg
            want = y0 + slope * (j - x0)
            va = by_index.get(j)
            if va is not None and va[0] == want:
                lattice.append((int(want), va[1]))
            else:
                lattice.append(None)
        sides.append((slope, x1 - x0, lattice))
        total += x1 - x0
    if total != mult:
        return None
    return sides


def _residual_separable(lattice, phibar, field, p):
    """Separability of the residual polynomial of one polygon side, with
    coefficients in the extension field F_p[t]/(phibar)."""
    rescoeffs = []
    for entry in lattice:
        if entry is None:
            rescoeffs.append(FpPolynomial(field, ()))
            continue
        v, a = entry
        reduced = FpPolynomial(field, [(c // p**v) % p for c in a.coeffs])
        rescoeffs.append(reduced % phibar)
    while rescoeffs and rescoeffs[-1].is_zero():
        rescoeffs.pop()
    if len(rescoeffs) < 2 or rescoeffs[0].is_zero():
        return False  # endpoints of a genuine side are on the lattice
    deriv = [
        FpPolynomial(field, [(j * c) % p for c in rescoeffs[j].coeffs])
        for j in range(1, len(rescoeffs))
    ]
    g = _ext_poly_gcd(rescoeffs, deriv, phibar)
    return len(g) == 1


def _ext_poly_gcd(a, b, phibar):
    """Monic gcd of polynomials with coefficients in F_p[t]/(phibar),
    each given as a list of FpPolynomial residues."""

    def trim(u):
        u = list(u)
        while u and u[-1].is_zero():
            u.pop()
        return u

    def inv_mod(u):
        # extended Euclid in F_p[t]
        field = u.field
        r0, r1 = phibar, u % phibar
        s0, s1 = FpPolynomial(field, ()), FpPolynomial.const(field, 1)
        while not r1.is_zero():
            q, r = divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
        if r0.degree != 0:
            raise SpecialError("residual coefficient not invertible")
        return (s0 * FpPolynomial.const(field, field.inv(r0.coeffs[0]))) % phibar

    a, b = trim(a), trim(b)
    while b:
        lead_inv = inv_mod(b[-1])
        # reduce a modulo b
        r = list(a)
        while r and len(r) >= len(b):
            c = (r[-1] * lead_inv) % phibar
            if not c.is_zero():
                off = len(r) - len(b)
                for j in range(len(b)):
                    r[off + j] = (r[off + j] - c * b[j]) % phibar
            r.pop()
            r = trim(r)
        a, b = b, trim(r)
    return a


# ---------------------------------------------------------------------------
# the degree-8 factor at p=3
# ---------------------------------------------------------------------------

EXPECTED_SEGMENTS = ((Fraction(-2), 4), (Fraction(-1, 3), 3), (Fraction(0), 1))


class GtildeReport:
    def __init__(self, divides, polygon, census, refuted, unrefuted, samples):
        self.divides = divides
        self.polygon = polygon
        self.census = census          # {degree pattern: count}
        self.refuted = refuted        # alternative type-set names refuted
        self.unrefuted = unrefuted    # alternatives the census cannot refute
        self.samples = samples


def gtilde_checks(min_samples=500, seed=0):
    """Divisibility of the degree-8 factor into the s=0 specialization,
    its 3-adic polygon, and a mod-p cycle-type census compared with the
    degree-8 affine group (evidence-grade, not a proof of equality)."""
    gt = poly_gtilde()
    g0 = poly_g().evaluate_t(Fraction(0))
    q, r = g0.divmod(gt)
    divides = r.is_zero()
    if not divides:
        raise SpecialError("degree-8 factor does not divide the specialization")
    polygon = newton_polygon(gt, 3)

    gt_int, _den = gt.clear_denominators()
    census = {}
    # element orders occurring in the degree-8 affine group (no order 8:
    # affine maps of F_2^3 have 2-part of order at most 4)
    allowed_orders = {1, 2, 3, 4, 6, 7}
    samples = 0
    p = 2
    order_violations = []
    while samples < min_samples:
        p = _next_prime(p)
        try:
            field = PrimeField(p)
            fbar = reduce_mod_p(gt_int.to_rat(), field)
        except BadPrimeError:
            continue
        if fbar.degree != 8 or not fbar.is_squarefree():
            continue
        pattern = tuple(sorted(
            (fac.degree for fac, _ in full_factor(fbar)), reverse=True))
        census[pattern] = census.get(pattern, 0) + 1
        order = math.lcm(*pattern)
        if order not in allowed_orders:
            order_violations.append((p, pattern))
        samples += 1
    if order_violations:
        raise SpecialError(
            "census found element orders outside the affine-group set: %r"
            % order_violations[:5]
        )
    observed = set(census)
    g8 = affine_group_8()
    affine_types = {tuple(g.cycle_type().parts) for g in g8.elements()}
    if not observed <= affine_types:
        raise SpecialError("census pattern outside the affine group's types")
    refuted, unrefuted = [], []
    for name, types in _degree8_alternatives().items():
        if observed <= types:
            unrefuted.append(name)
        else:
            refuted.append(name)
    return GtildeReport(divides, polygon, census, sorted(refuted),
                        sorted(unrefuted), samples)


def _next_prime(p):
    p += 1
    while not _is_probable_prime(p):
        p += 1
    return p


def _degree8_alternatives():
    """Cycle-type sets of the other 2-transitive degree-8 candidates that
    can be built exactly here (the two projective groups on P1(F_7)),
    plus the symmetric/alternating catch-alls."""
    from .permgrp import PermGroup, Permutation

    p = 7

    def proj(fn):
        # points 0..6 = F_7, 7 = infinity
        return Permutation([fn(t) for t in range(8)])

    inf = 7
    shift = proj(lambda t: inf if t == inf else (t + 1) % p)
    mult = proj(lambda t: inf if t == inf else (3 * t) % p)  # 3 generates F_7*
    inv = proj(lambda t: 0 if t == inf else (inf if t == 0 else (-pow(t, p - 2, p)) % p))
    pgl = PermGroup([shift, mult, inv], 8)
    assert pgl.order() == 336
    sq = proj(lambda t: inf if t == inf else (2 * t) % p)  # 2 = 3^2
    psl = PermGroup([shift, sq, inv], 8)
    assert psl.order() == 168
    out = {
        "projective-336": {tuple(g.cycle_type().parts) for g in pgl.elements()},
        "projective-168": {tuple(g.cycle_type().parts) for g in psl.elements()},
    }
    # symmetric and alternating groups: all partitions of 8 (resp. even)
    parts = list(_partitions(8))
    out["symmetric-8"] = {tuple(sorted(pt, reverse=True)) for pt in parts}
    out["alternating-8"] = {
        tuple(sorted(pt, reverse=True))
        for pt in parts
        if sum(v - 1 for v in pt) % 2 == 0
    }
    return out


def _partitions(n, cap=None):
    cap = cap or n
    if n == 0:
        yield ()
        return
    for first in range(min(n, cap), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


class DecompositionResult:
    def __init__(self, fragments, orbit_filtered, final):
        self.fragments = fragments
        self.orbit_filtered = orbit_filtered  # sorted structure names
        self.final = final                    # sorted structure names


def decomposition_at_3():
    """Orbit constraints from the 3-adic polygon of the degree-8 factor,
    filtered through the subgroup classes of the degree-8 affine group:
    first by orbit structure (a fixed point and a 3-orbit), then by local
    plausibility (normal 3-part with metacyclic quotient)."""
    polygon = newton_polygon(poly_gtilde(), 3)
    fragments = orbit_constraints(polygon)
    need_fixed = any(f.fixed_point for f in fragments)
    need_three = any(f.divisor == 3 for f in fragments)
    if not (need_fixed and need_three):
        raise SpecialError("polygon does not show the expected fragments")
    g8 = affine_group_8()
    # Any subgroup with a fixed point is conjugate into a point stabilizer
    # (the group is transitive), so surveying the stabilizer finds every
    # relevant class at a fraction of the cost of the full survey.
    stab = g8.stabilizer(0)
    orbit_pass = []
    final = []
    for cls in all_subgroups_small(stab):
        lengths = cls.orbit_lengths()
        if 1 not in lengths or 3 not in lengths:
            continue
        name = cls.structure_name()
        orbit_pass.append(name)
        if decomposition_plausible(cls, 3):
            final.append(name)
    return DecompositionResult(fragments, sorted(set(orbit_pass)),
                               sorted(set(final)))


# ---------------------------------------------------------------------------
# branch locus and inertia types
# ---------------------------------------------------------------------------

class BranchPoint:
    def __init__(self, point, ctype, label, primes_used):
        self.point = point        # Fraction, or None for the point at infinity
        self.cycle_type = ctype
        self.label = label
        self.primes_used = primes_used

    def __repr__(self):
        where = "infinity" if self.point is None else str(self.point)
        return "BranchPoint(t=%s, %r, %s)" % (where, self.cycle_type, self.label)


def branch_and_inertia(F, min_agree=20, max_primes=400):
    """Finite branch points from the rational roots of the X-discriminant;
    inertia cycle type per point from the stable factor-multiplicity
    pattern mod good primes; the infinite point from the pole structure."""
    disc = discriminant_x(F)
    finite_points = rational_roots(disc)
    if not finite_points:
        raise SpecialError("no rational roots in the X-discriminant")
    n = F.xdegree
    results = []
    for ti in finite_points:
        ctype = _inertia_type_at(F, ti, n, min_agree, max_primes)
        results.append((Fraction(ti), ctype))
    # point at infinity: for F = A(X) - t*B(X), the poles of the defining
    # map are the roots of B (with their multiplicities) plus a deficit
    # pole of order n - deg B
    if F.tdegree() != 1:
        raise SpecialError("pole analysis needs a degree-1 parameter")
    B = IntPoly([-(c.coeffs[1] if len(c.coeffs) > 1 else 0) for c in F.xcoeffs])
    mults = _root_multiplicities(B)
    deficit = n - B.degree
    parts = sorted([m for _, m in mults] + ([deficit] if deficit else []),
                   reverse=True)
    inf_type = CycleType(tuple(parts))
    entries = [(pt, ct) for pt, ct in results] + [(None, inf_type)]
    # Riemann-Hurwitz style cross-check on the three types
    total = sum(n - ct.cycle_count for _, ct in entries)
    if total != 2 * (n - 1):
        raise SpecialError(
            "branch types violate the ramification count: %d != %d"
            % (total, 2 * (n - 1))
        )
    out = []
    for pt, ct in entries:
        out.append(BranchPoint(pt, ct, _class_label(ct), min_agree))
    return out


def _inertia_type_at(F, ti, n, min_agree, max_primes):
    spec, _den = F.evaluate_t(Fraction(ti)).clear_denominators()
    patterns = []
    p = 100
    tried = 0
    while len(patterns) < min_agree and tried < max_primes:
        p = _next_prime(p)
        tried += 1
        if spec.lc() % p == 0:
            continue
        field = PrimeField(p)
        fbar = FpPolynomial(field, [c % p for c in spec.coeffs])
        parts = []
        ok = True
        for fac, mult in fp_squarefree_decomposition(fbar):
            for irr, extra in full_factor(fac):
                if extra != 1:
                    ok = False
                parts.extend([mult] * irr.degree)
        if not ok or sum(parts) != n:
            continue
        pattern = tuple(sorted(parts, reverse=True))
        patterns.append(pattern)
        if len(set(patterns)) > 1:
            raise SpecialError(
                "multiplicity pattern unstable at t=%s: %r" % (ti, sorted(set(patterns)))
            )
    if len(patterns) < min_agree:
        raise SpecialError("not enough good primes for t=%s" % (ti,))
    return CycleType(patterns[0])


def _root_multiplicities(B):
    out = []
    rem = B
    for r in sorted(set(rational_roots(B))):
        if Fraction(r).denominator != 1:
            raise SpecialError("pole analysis expects integral roots")
        m = 0
        lin = IntPoly([-int(r), 1])
        while rem(int(r)) == 0:
            rem = rem.exact_div(lin)
            m += 1
        out.append((int(r), m))
    if rem.degree != 0:
        raise SpecialError("non-rational pole encountered")
    return out


def _class_label(ctype):
    order = math.lcm(*ctype.parts)
    par = parity(ctype.canonical_permutation())
    label = "%d%s" % (order, "A" if par == "even" else "B")
    if order == 12:
        # the source class labels disagree between statements; key by
        # order and cycle type and note both names
        return "12A/12B (type %r)" % ctype
    return label


# ---------------------------------------------------------------------------
# square discriminant of the substituted family
# ---------------------------------------------------------------------------

def msub_square_check(substitution=None):
    """True iff disc_x of the degree-22 family composed with the
    substitution is a square in Q(s) (even-subgroup certificate)."""
    disc = discriminant_x(poly_f()).to_rat()
    sub = substitution if substitution is not None else t_of_s()
    if sub.degree < 1:
        raise SpecialError("constant substitution is degenerate")
    ok, _witness = is_square(disc.compose(sub))
    return ok


def sline_branch_points():
    """Rational branch points of the substituted family on the s-line
    (for validating specialization points)."""
    disc = discriminant_x(poly_g())
    return sorted(set(rational_roots(disc)))
