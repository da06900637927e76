"""Prime-field arithmetic and univariate polynomial factorization over F_p.

Provides the distinct-degree census used by the point counter and the
cycle-type sampler, plus a full randomized factorization routine that
serves as an independent oracle for the census.
"""

import random

from .exactpoly import BiPoly, IntPoly, RatPoly, _is_probable_prime


class FFPolyError(Exception):
    pass


class BadPrimeError(FFPolyError):
    """A coefficient denominator is divisible by the chosen prime."""


class PrimeField:
    """Arithmetic modulo a prime p < 2^62.

    Montgomery constants (R = 2^64) are precomputed so callers that need
    REDC-style multiplication can use mont_mul; ordinary element
    operations use plain modular arithmetic.
    """

    __slots__ = ("p", "r_bits", "r_mask", "neg_pinv", "r2", "r1")

    def __init__(self, p):
        if p < 2 or p >= 1 << 62:
            raise FFPolyError("modulus out of range: %d" % p)
        if not _is_probable_prime(p):
            raise FFPolyError("modulus is not prime: %d" % p)
        self.p = p
        self.r_bits = 64
        self.r_mask = (1 << 64) - 1
        r = 1 << 64
        if p == 2:
            self.neg_pinv = None
            self.r2 = self.r1 = 0
        else:
            self.neg_pinv = (-pow(p, -1, r)) % r
            self.r1 = r % p
            self.r2 = (r * r) % p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and self.p == other.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return "PrimeField(%d)" % self.p

    def add(self, a, b):
        s = a + b
        return s - self.p if s >= self.p else s

    def sub(self, a, b):
        d = a - b
        return d + self.p if d < 0 else d

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of 0 mod %d" % self.p)
        return pow(a, self.p - 2, self.p)

    def to_mont(self, a):
        return self.mont_mul(a % self.p, self.r2)

    def from_mont(self, a):
        return self.mont_mul(a, 1)

    def mont_mul(self, a, b):
        """REDC multiply: returns a*b*R^{-1} mod p for R = 2^64."""
        t = a * b
        m = ((t & self.r_mask) * self.neg_pinv) & self.r_mask
        u = (t + m * self.p) >> self.r_bits
        return u - self.p if u >= self.p else u


class FpPolynomial:
    """Dense polynomial over a PrimeField; coefficient index = degree."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs=()):
        p = field.p
        c = [v % p for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.field = field
        self.coeffs = tuple(c)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def lc(self):
        if not self.coeffs:
            raise FFPolyError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other):
        return (
            isinstance(other, FpPolynomial)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field.p, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return "FpPolynomial(p=%d, %r)" % (self.field.p, list(self.coeffs))

    @staticmethod
    def const(field, v):
        return FpPolynomial(field, (v,))

    @staticmethod
    def x(field):
        return FpPolynomial(field, (0, 1))

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        p = self.field.p
        for i, v in enumerate(b):
            out[i] = (out[i] + v) % p
        return FpPolynomial(self.field, out)

    def __neg__(self):
        p = self.field.p
        return FpPolynomial(self.field, tuple((p - v) % p for v in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return FpPolynomial(self.field, tuple(v * other for v in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return FpPolynomial(self.field, ())
        out = [0] * (len(a) + len(b) - 1)
        for i, u in enumerate(a):
            if u:
                for j, w in enumerate(b):
                    out[i + j] += u * w
        return FpPolynomial(self.field, out)

    def __divmod__(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        p = self.field.p
        r = list(self.coeffs)
        d = other.degree
        binv = self.field.inv(other.lc())
        b = other.coeffs
        q = [0] * max(len(r) - d, 0)
        for i in range(len(r) - 1, d - 1, -1):
            c = (r[i] * binv) % p
            if c:
                q[i - d] = c
                for j in range(d + 1):
                    r[i - d + j] = (r[i - d + j] - c * b[j]) % p
        return FpPolynomial(self.field, q), FpPolynomial(self.field, r[:d])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self):
        if self.is_zero() or self.lc() == 1:
            return self
        return self * self.field.inv(self.lc())

    def derivative(self):
        return FpPolynomial(
            self.field, tuple(i * v for i, v in enumerate(self.coeffs) if i)
        )

    def evaluate(self, x):
        p = self.field.p
        acc = 0
        for v in reversed(self.coeffs):
            acc = (acc * x + v) % p
        return acc

    def is_squarefree(self):
        if self.degree < 1:
            return True
        return fp_gcd(self, self.derivative()).degree == 0


def fp_gcd(a, b):
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def fp_powmod(base, e, mod):
    """base^e reduced mod the polynomial `mod`, by square-and-multiply."""
    result = FpPolynomial.const(base.field, 1)
    base = base % mod
    while e:
        if e & 1:
            result = (result * base) % mod
        base = (base * base) % mod
        e >>= 1
    return result


def reduce_mod_p(f, field):
    """Coefficient-wise reduction of an IntPoly/RatPoly into F_p."""
    p = field.p
    if isinstance(f, IntPoly):
        return FpPolynomial(field, f.coeffs)
    coeffs = []
    for c in f.coeffs:
        if c.denominator % p == 0:
            raise BadPrimeError(
                "denominator %d divisible by p=%d" % (c.denominator, p)
            )
        coeffs.append(c.numerator * pow(c.denominator, -1, p))
    return FpPolynomial(field, coeffs)


def _pth_root(f):
    """p-th root of a polynomial with zero derivative (all exponents
    divisible by p; coefficients are already p-th powers in F_p)."""
    p = f.field.p
    return FpPolynomial(f.field, tuple(f.coeffs[i] for i in range(0, len(f.coeffs), p)))


def fp_squarefree_decomposition(f):
    """Yun-style decomposition over F_p: list of (g_i, multiplicity) with
    f = lc * prod g_i^m_i, each g_i monic squarefree, m_i distinct."""
    if f.is_zero():
        raise FFPolyError("zero polynomial")
    field = f.field
    p = field.p
    out = []

    def recurse(g, stride):
        # stride is the p-power multiplier accumulated through p-th roots
        g = g.monic()
        if g.degree == 0:
            return
        d = g.derivative()
        if d.is_zero():
            recurse(_pth_root(g), stride * p)
            return
        c = fp_gcd(g, d)
        w = g // c
        m = 1
        while w.degree > 0:
            y = fp_gcd(w, c)
            part = w // y
            if part.degree > 0:
                out.append((part, m * stride))
            w = y
            c = c // y
            m += 1
        if c.degree > 0:
            # c holds exactly the factors with multiplicity divisible by p,
            # so its derivative vanishes and the recursion's p-th-root
            # branch supplies the factor of p in the stride
            recurse(c, stride)

    recurse(f, 1)
    out.sort(key=lambda gm: (gm[1], gm[0].degree, gm[0].coeffs))
    return out


def squarefree_part(f):
    """Monic product of the distinct irreducible factors of f."""
    parts = fp_squarefree_decomposition(f)
    acc = FpPolynomial.const(f.field, 1)
    for g, _ in parts:
        acc = acc * g
    return acc


class CensusResult:
    """Distinct-degree factor counts of the squarefree part of f."""

    __slots__ = ("counts", "residual_degree", "squarefree_defect")

    def __init__(self, counts, residual_degree, squarefree_defect):
        self.counts = tuple(counts)
        self.residual_degree = residual_degree
        self.squarefree_defect = squarefree_defect

    def degree_multiset(self):
        out = []
        for d, n in self.counts:
            out.extend([d] * n)
        return sorted(out)

    def __repr__(self):
        return "CensusResult(%r, residual=%d, defect=%r)" % (
            list(self.counts),
            self.residual_degree,
            self.squarefree_defect,
        )


def distinct_degree_census(f, dmax):
    """Count irreducible factors of each degree d <= dmax.

    Counts are taken on the squarefree part; a squarefree_defect flag
    records whether f had repeated factors.  residual_degree is the
    degree of the unsplit cofactor after stage dmax.
    """
    if f.is_zero():
        raise FFPolyError("zero polynomial")
    if dmax < 1:
        raise FFPolyError("dmax must be >= 1")
    field = f.field
    p = field.p
    sf = squarefree_part(f)
    defect = sf.degree != f.degree
    w = sf
    counts = []
    h = FpPolynomial.x(field)  # x^{p^0}
    x = FpPolynomial.x(field)
    for d in range(1, dmax + 1):
        if w.degree < 1:
            break
        if w.degree < 2 * d:
            # every factor of w has degree >= d, so w is irreducible
            if w.degree <= dmax:
                counts.append((w.degree, 1))
                w = FpPolynomial.const(field, 1)
            break
        h = fp_powmod(h, p, w)
        g = fp_gcd(h - x, w)
        if g.degree > 0:
            counts.append((d, g.degree // d))
            w = w // g
            h = h % w
    return CensusResult(counts, max(w.degree, 0), defect)


def _equal_degree_split(f, d, rng):
    """Cantor-Zassenhaus: split a monic squarefree product of degree-d
    irreducibles (p odd) into its irreducible factors."""
    field = f.field
    p = field.p
    if f.degree == d:
        return [f]
    e = (p**d - 1) // 2
    while True:
        a = FpPolynomial(field, [rng.randrange(p) for _ in range(f.degree)])
        if a.degree < 1:
            continue
        g = fp_gcd(a, f)
        if 0 < g.degree < f.degree:
            break
        b = fp_powmod(a, e, f) - FpPolynomial.const(field, 1)
        g = fp_gcd(b, f)
        if 0 < g.degree < f.degree:
            break
    return _equal_degree_split(g, d, rng) + _equal_degree_split(f // g, d, rng)


def full_factor(f, seed=0):
    """Factor f over F_p (p odd) into monic irreducibles with multiplicity.

    Returns a list of (factor, multiplicity) sorted by (degree, coeffs);
    the product times lc(f) reconstructs f exactly.  Randomized splitting
    uses a local RNG seeded from `seed` for reproducibility.
    """
    if f.is_zero():
        raise FFPolyError("zero polynomial")
    if f.field.p == 2:
        raise FFPolyError("full_factor requires odd p")
    rng = random.Random("%d:%d:%r" % (seed, f.field.p, f.coeffs))
    out = []
    for g, mult in fp_squarefree_decomposition(f):
        field = g.field
        p = field.p
        h = FpPolynomial.x(field)
        x = FpPolynomial.x(field)
        w = g
        d = 0
        while w.degree > 0:
            d += 1
            if w.degree < 2 * d:
                out.append((w, mult))
                break
            h = fp_powmod(h, p, w)
            stage = fp_gcd(h - x, w)
            if stage.degree > 0:
                for irr in _equal_degree_split(stage, d, rng):
                    out.append((irr, mult))
                w = w // stage
                h = h % w
    out.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs, fm[1]))
    return out


class CycleTypeSample:
    """Factor-degree pattern of a specialized bivariate polynomial mod p."""

    __slots__ = ("ok", "degrees", "reason")

    def __init__(self, ok, degrees=(), reason=""):
        self.ok = ok
        self.degrees = tuple(degrees)
        self.reason = reason

    def __repr__(self):
        if self.ok:
            return "CycleTypeSample(%r)" % (list(self.degrees),)
        return "CycleTypeSample(failure: %s)" % self.reason


def cycle_type_sample(F, t0, field):
    """Factor degrees of F(t0, X) mod p when the specialization keeps full
    X-degree and is squarefree; a failure flag otherwise."""
    if not isinstance(F, BiPoly):
        raise FFPolyError("expected a bivariate polynomial")
    p = field.p
    coeffs = []
    for cj in F.xcoeffs:
        coeffs.append(cj(t0) % p)
    fbar = FpPolynomial(field, coeffs)
    if fbar.degree != F.xdegree:
        return CycleTypeSample(False, reason="leading coefficient vanishes mod p")
    if not fbar.is_squarefree():
        return CycleTypeSample(False, reason="reduction not squarefree")
    census = distinct_degree_census(fbar, fbar.degree)
    degrees = sorted(census.degree_multiset(), reverse=True)
    return CycleTypeSample(True, degrees=degrees)
