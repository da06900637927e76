"""Exact polynomial algebra over Z, Q and Z[t].

Dense representations throughout; degrees in this project never exceed ~50.
Resultants use the subresultant pseudo-remainder sequence, so that the
discriminant of a degree-22 bivariate input (thousands of digits) stays
fraction-free until the final exact divisions.
"""

from fractions import Fraction
from math import gcd, isqrt


class ExactPolyError(Exception):
    pass


# ---------------------------------------------------------------------------
# integer polynomials (also used as the coefficient ring Z[t] of BiPoly)
# ---------------------------------------------------------------------------

class IntPoly:
    """Dense polynomial with integer coefficients, index = degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @staticmethod
    def const(n):
        return IntPoly((n,))

    @staticmethod
    def x(deg=1, lead=1):
        return IntPoly((0,) * deg + (lead,))

    @property
    def degree(self):
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def lc(self):
        if not self.coeffs:
            raise ExactPolyError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other):
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return IntPoly(out)

    def __neg__(self):
        return IntPoly(tuple(-v for v in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(tuple(v * other for v in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        r = IntPoly((1,))
        b = self
        while n:
            if n & 1:
                r = r * b
            b = b * b
            n >>= 1
        return r

    def exact_div(self, other):
        """Exact polynomial division; raises if the remainder is nonzero."""
        if other.is_zero():
            raise ExactPolyError("division by zero polynomial")
        if self.is_zero():
            return IntPoly()
        rem = list(self.coeffs)
        q = [0] * (len(rem) - len(other.coeffs) + 1)
        d = other.degree
        lcb = other.lc()
        for i in range(len(rem) - 1, d - 1, -1):
            if rem[i] == 0:
                continue
            c, r = divmod(rem[i], lcb)
            if r:
                raise ExactPolyError("inexact polynomial division")
            q[i - d] = c
            for j, bj in enumerate(other.coeffs):
                rem[i - d + j] -= c * bj
        if any(rem[:d]):
            raise ExactPolyError("inexact polynomial division")
        return IntPoly(q)

    def exact_div_int(self, n):
        out = []
        for v in self.coeffs:
            c, r = divmod(v, n)
            if r:
                raise ExactPolyError("inexact content division")
            out.append(c)
        return IntPoly(out)

    def content(self):
        g = 0
        for v in self.coeffs:
            g = gcd(g, v)
        return g

    def primitive_part(self):
        c = self.content()
        if c == 0:
            return self
        p = self.exact_div_int(c)
        return -p if p.lc() < 0 else p

    def derivative(self):
        return IntPoly(tuple(i * v for i, v in enumerate(self.coeffs) if i))

    def __call__(self, t0):
        """Evaluate at an int or Fraction by Horner."""
        acc = 0 if isinstance(t0, int) else Fraction(0)
        for v in reversed(self.coeffs):
            acc = acc * t0 + v
        return acc

    def compose(self, other):
        """Substitute another IntPoly (or RatPoly) for the variable."""
        zero = IntPoly() if isinstance(other, IntPoly) else RatPoly()
        one_ = IntPoly.const(1) if isinstance(other, IntPoly) else RatPoly.const(1)
        acc = zero
        for v in reversed(self.coeffs):
            acc = acc * other + one_ * v
        return acc

    def to_rat(self):
        return RatPoly(tuple(Fraction(v) for v in self.coeffs))

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"


# ---------------------------------------------------------------------------
# rational polynomials
# ---------------------------------------------------------------------------

class RatPoly:
    """Dense polynomial with Fraction coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [Fraction(v) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @staticmethod
    def const(q):
        return RatPoly((Fraction(q),))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def lc(self):
        if not self.coeffs:
            raise ExactPolyError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other):
        return isinstance(other, RatPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return RatPoly(out)

    def __neg__(self):
        return RatPoly(tuple(-v for v in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RatPoly(tuple(v * other for v in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return RatPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return RatPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        r = RatPoly.const(1)
        b = self
        while n:
            if n & 1:
                r = r * b
            b = b * b
            n >>= 1
        return r

    def divmod(self, other):
        if other.is_zero():
            raise ExactPolyError("division by zero polynomial")
        rem = list(self.coeffs)
        if len(rem) < len(other.coeffs):
            return RatPoly(), self
        q = [Fraction(0)] * (len(rem) - len(other.coeffs) + 1)
        d = other.degree
        inv = 1 / other.lc()
        for i in range(len(rem) - 1, d - 1, -1):
            if rem[i] == 0:
                continue
            c = rem[i] * inv
            q[i - d] = c
            for j, bj in enumerate(other.coeffs):
                rem[i - d + j] -= c * bj
        return RatPoly(q), RatPoly(rem[:d])

    def __call__(self, s0):
        acc = Fraction(0)
        for v in reversed(self.coeffs):
            acc = acc * s0 + v
        return acc

    def derivative(self):
        return RatPoly(tuple(i * v for i, v in enumerate(self.coeffs) if i))

    def monic(self):
        if self.is_zero():
            return self
        return self * (1 / self.lc())

    def clear_denominators(self):
        """Return (IntPoly primitive, rational scalar) with self = scalar * primitive."""
        if self.is_zero():
            return IntPoly(), Fraction(1)
        den = 1
        for v in self.coeffs:
            den = den * v.denominator // gcd(den, v.denominator)
        ip = IntPoly(tuple(int(v * den) for v in self.coeffs))
        cont = ip.content()
        prim = ip.exact_div_int(cont)
        if prim.lc() < 0:
            prim, cont = -prim, -cont
        return prim, Fraction(cont, den)

    def compose(self, other):
        acc = RatPoly()
        for v in reversed(self.coeffs):
            acc = acc * other + RatPoly.const(v)
        return acc

    def __repr__(self):
        return f"RatPoly({[str(v) for v in self.coeffs]})"


# ---------------------------------------------------------------------------
# bivariate polynomials: elements of Z[t][X]
# ---------------------------------------------------------------------------

class BiPoly:
    """Polynomial in X whose coefficients are IntPoly in t."""

    __slots__ = ("xcoeffs",)

    def __init__(self, xcoeffs=()):
        c = list(xcoeffs)
        while c and c[-1].is_zero():
            c.pop()
        self.xcoeffs = tuple(c)

    @property
    def xdegree(self):
        return len(self.xcoeffs) - 1

    def tdegree(self):
        return max((p.degree for p in self.xcoeffs), default=-1)

    def is_zero(self):
        return not self.xcoeffs

    def lc_x(self):
        if not self.xcoeffs:
            raise ExactPolyError("zero polynomial")
        return self.xcoeffs[-1]

    def __eq__(self, other):
        return isinstance(other, BiPoly) and self.xcoeffs == other.xcoeffs

    def evaluate_t(self, t0):
        """Coefficient-wise evaluation at t = t0; returns RatPoly in X."""
        return RatPoly(tuple(Fraction(p(t0)) for p in self.xcoeffs))

    def derivative_x(self):
        return BiPoly(tuple(p * i for i, p in enumerate(self.xcoeffs) if i))

    def substitute_t(self, r):
        """Replace t by a rational-coefficient polynomial r(s).

        Returns (BiPoly in (s, X), scalar) where the result equals
        scalar * F(r(s), X): denominators of r are cleared into the recorded
        rational scalar instead of being folded into coefficients.
        """
        if r.degree < 1:
            raise ExactPolyError("substitution polynomial must be nonconstant")
        evaluated = [p.to_rat().compose(r) for p in self.xcoeffs]
        den = 1
        for q in evaluated:
            for v in q.coeffs:
                den = den * v.denominator // gcd(den, v.denominator)
        out = [IntPoly(tuple(int(v * den) for v in q.coeffs)) for q in evaluated]
        return BiPoly(out), Fraction(den)

    def __repr__(self):
        return f"BiPoly(xdeg={self.xdegree}, tdeg={self.tdegree()})"


# ---------------------------------------------------------------------------
# subresultant PRS resultant (generic over int or IntPoly coefficients)
# ---------------------------------------------------------------------------

def _ring_ops(sample):
    if isinstance(sample, IntPoly):
        return (IntPoly(), IntPoly((1,)), lambda a, b: a.exact_div(b))

    def div(a, b):
        q, r = divmod(a, b)
        if r:
            raise ExactPolyError("inexact division in PRS")
        return q

    return (0, 1, div)


def _prem(a, b, zero):
    """Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, as a coeff list."""
    d = len(b) - 1
    lcb = b[-1]
    r = list(a)
    for i in range(len(a) - 1, d - 1, -1):
        top = r[i]
        for j in range(i):
            r[j] = r[j] * lcb
        for j in range(d):
            r[i - d + j] = r[i - d + j] - top * b[j]
        r.pop()
    while r and (r[-1] == zero or r[-1] == 0):
        r.pop()
    return r


def resultant_generic(acoeffs, bcoeffs):
    """Res(A, B) over Z or Z[t] by the subresultant PRS (Cohen Alg. 3.3.7,
    without the content extraction step)."""
    A = list(acoeffs)
    B = list(bcoeffs)
    while A and (A[-1] == 0 or A[-1] == IntPoly()):
        A.pop()
    while B and (B[-1] == 0 or B[-1] == IntPoly()):
        B.pop()
    if not A or not B:
        raise ExactPolyError("resultant of zero polynomial")
    zero, one, exactdiv = _ring_ops(A[0] if not isinstance(A[0], int) else 0)
    sign = 1
    if len(A) < len(B):
        if ((len(A) - 1) * (len(B) - 1)) % 2 == 1:
            sign = -sign
        A, B = B, A
    if len(B) == 1:
        return sign * _ring_pow(B[0], len(A) - 1)
    g = one
    h = one
    while True:
        dA, dB = len(A) - 1, len(B) - 1
        delta = dA - dB
        if (dA % 2 == 1) and (dB % 2 == 1):
            sign = -sign
        R = _prem(A, B, zero)
        A = B
        divisor = g * _ring_pow(h, delta)
        B = [exactdiv(c, divisor) for c in R]
        if not B:
            return zero if not isinstance(zero, int) else 0
        g = A[-1]
        if delta > 0:
            h = exactdiv(_ring_pow(g, delta), _ring_pow(h, delta - 1))
        if len(B) - 1 <= 0:
            break
    dA = len(A) - 1
    num = _ring_pow(B[0], dA)
    if dA >= 1:
        res = exactdiv(num, _ring_pow(h, dA - 1))
    else:
        res = num
    return sign * res if isinstance(res, int) else (res if sign == 1 else -res)


def _ring_pow(x, n):
    if isinstance(x, int):
        return x ** n
    r = IntPoly((1,))
    for _ in range(n):
        r = r * x
    return r


def resultant(f, g):
    """Resultant of two integer polynomials, Res(f,g) = lc(f)^deg g * prod g(roots of f)."""
    if f.is_zero() or g.is_zero():
        raise ExactPolyError("resultant of zero polynomial")
    return resultant_generic(f.coeffs, g.coeffs)


def discriminant_x(F):
    """Discriminant of F in Z[t][X] with respect to X, as a polynomial in t.

    disc = (-1)^(d(d-1)/2) Res_X(F, dF/dX) / lc_X(F), the usual convention
    under which disc(X^2+bX+c) = b^2-4c.
    """
    if F.xdegree < 2:
        raise ExactPolyError("need X-degree at least 2")
    r = resultant_generic(F.xcoeffs, F.derivative_x().xcoeffs)
    d = F.xdegree
    if (d * (d - 1) // 2) % 2:
        r = -r
    return r.exact_div(F.lc_x())


def discriminant(f):
    """Discriminant of an integer polynomial: (-1)^(d(d-1)/2) Res(f, f') / lc(f)."""
    if f.degree < 2:
        raise ExactPolyError("need degree at least 2")
    r = resultant(f, f.derivative())
    q, rem = divmod(r, f.lc())
    if rem:
        raise ExactPolyError("inexact discriminant division")
    return -q if (f.degree * (f.degree - 1) // 2) % 2 else q


# ---------------------------------------------------------------------------
# gcd / squarefree machinery over Q[x] (via primitive integer polynomials)
# ---------------------------------------------------------------------------

def intpoly_gcd(f, g):
    """Primitive gcd in Z[x] via the subresultant PRS."""
    if f.is_zero():
        return g.primitive_part() if not g.is_zero() else IntPoly()
    if g.is_zero():
        return f.primitive_part()
    A = f.primitive_part()
    B = g.primitive_part()
    if A.degree < B.degree:
        A, B = B, A
    one = 1
    gg, h = one, one
    while not B.is_zero() and B.degree > 0:
        delta = A.degree - B.degree
        R = IntPoly(_prem(list(A.coeffs), list(B.coeffs), 0))
        A, B = B, R.exact_div_int(gg * h ** delta) if not R.is_zero() else IntPoly()
        if B.is_zero():
            break
        gg = A.lc()
        if delta > 0:
            h = gg ** delta // h ** (delta - 1)
    if not B.is_zero():
        # nonzero constant remainder: coprime
        return IntPoly((1,))
    return A.primitive_part()


def ratpoly_gcd(f, g):
    """Monic gcd in Q[x]."""
    fi, _ = f.clear_denominators()
    gi, _ = g.clear_denominators()
    d = intpoly_gcd(fi, gi)
    return d.to_rat().monic() if not d.is_zero() else RatPoly()


def squarefree_decomposition(f):
    """Yun's algorithm over Q[x]: returns (lc, [(factor_monic, multiplicity)...])."""
    if f.is_zero():
        raise ExactPolyError("zero polynomial")
    lead = f.lc()
    f = f.monic()
    out = []
    fp = f.derivative()
    a = ratpoly_gcd(f, fp)
    b, _ = f.divmod(a)
    c, _ = fp.divmod(a)
    i = 1
    while b.degree > 0:
        d = c - b.derivative()
        p = ratpoly_gcd(b, d)
        if p.degree > 0:
            out.append((p, i))
        b, _ = b.divmod(p)
        c, _ = d.divmod(p)
        i += 1
    return lead, out


def is_square(d):
    """Test whether d in Q[s] is a square rational times a polynomial square.

    Returns (True, witness RatPoly) or (False, None); the witness e satisfies
    d = c * e^2 with c a positive rational square.
    """
    if d.is_zero():
        raise ExactPolyError("zero polynomial")
    lead, parts = squarefree_decomposition(d)
    w = RatPoly.const(1)
    for p, m in parts:
        if m % 2:
            return False, None
        w = w * p ** (m // 2)
    # constant c = d / w^2 must be the square of a rational
    c = lead
    if c <= 0:
        return False, None
    if isqrt(c.numerator) ** 2 != c.numerator or isqrt(c.denominator) ** 2 != c.denominator:
        return False, None
    return True, w * Fraction(isqrt(c.numerator), isqrt(c.denominator))


def padic_valuation(q, p):
    """v_p of a Fraction/int; None encodes +infinity (for q = 0)."""
    if p < 2 or not _is_probable_prime(p):
        raise ExactPolyError(f"{p} is not prime")
    q = Fraction(q)
    if q == 0:
        return None
    v = 0
    n = q.numerator
    while n % p == 0:
        n //= p
        v += 1
    m = q.denominator
    while m % p == 0:
        m //= p
        v -= 1
    return v


def divide_exact(f, g):
    """Exact quotient in Q[x]; raises on nonzero remainder."""
    if g.is_zero():
        raise ExactPolyError("division by zero polynomial")
    q, r = f.divmod(g)
    if not r.is_zero():
        raise ExactPolyError("nonzero remainder in exact division")
    return q


def rational_roots(f):
    """All rational roots of a nonzero f in Z[x] or Q[x].

    Works on the squarefree part, so huge repeated-root discriminants reduce
    to a small divisor search on the squarefree factors.
    """
    if isinstance(f, IntPoly):
        f = f.to_rat()
    if f.is_zero():
        raise ExactPolyError("zero polynomial")
    roots = set()
    _, parts = squarefree_decomposition(f)
    for p, _m in parts:
        ip, _ = p.clear_denominators()
        # strip powers of x
        k = 0
        while ip.coeffs[k] == 0:
            k += 1
        if k:
            roots.add(Fraction(0))
            ip = IntPoly(ip.coeffs[k:])
        if ip.degree == 0:
            continue
        if ip.degree == 1:
            roots.add(Fraction(-ip.coeffs[0], ip.coeffs[1]))
            continue
        for num in _divisors_signed(abs(ip.coeffs[0])):
            for den in _divisors(abs(ip.lc())):
                cand = Fraction(num, den)
                if ip(cand) == 0:
                    roots.add(cand)
    return sorted(roots)


def _divisors(n):
    if n == 0:
        raise ExactPolyError("divisors of zero")
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    return sorted(out)


def _divisors_signed(n):
    ds = _divisors(n)
    return [d for pair in ((d, -d) for d in ds) for d in pair]


def _is_probable_prime(n):
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


# ---------------------------------------------------------------------------
# serialization: `P <var> <degree>` header, `deg:num/den` lines
# ---------------------------------------------------------------------------

def dump_ratpoly(f, var="X"):
    lines = [f"P {var} {f.degree}"]
    for i, v in enumerate(f.coeffs):
        if v != 0:
            lines.append(f"{i}:{v.numerator}/{v.denominator}")
    return "\n".join(lines) + "\n"


def _parse_poly_block(lines, pos):
    head = lines[pos].split()
    if len(head) != 3 or head[0] != "P":
        raise ExactPolyError(f"bad polynomial header: {lines[pos]!r}")
    deg = int(head[2])
    coeffs = {}
    pos += 1
    while pos < len(lines) and ":" in lines[pos]:
        d, _, val = lines[pos].partition(":")
        num, _, den = val.partition("/")
        coeffs[int(d)] = Fraction(int(num), int(den))
        pos += 1
    if coeffs and max(coeffs) != deg:
        raise ExactPolyError("degree header does not match coefficients")
    if deg >= 0 and not coeffs:
        raise ExactPolyError("missing coefficients")
    out = [coeffs.get(i, Fraction(0)) for i in range(deg + 1)]
    return RatPoly(out), head[1], pos


def load_ratpoly(text):
    lines = [ln for ln in text.splitlines() if ln.strip()]
    poly, _var, pos = _parse_poly_block(lines, 0)
    if pos != len(lines):
        raise ExactPolyError("trailing garbage in polynomial file")
    return poly


def dump_bipoly(F, xvar="X", tvar="t"):
    lines = [f"BP {xvar} {tvar} {F.xdegree}"]
    for j, p in enumerate(F.xcoeffs):
        lines.append(f"C {j}")
        lines.append(dump_ratpoly(p.to_rat(), var=tvar).rstrip("\n"))
    return "\n".join(lines) + "\n"


def load_bipoly(text):
    lines = [ln for ln in text.splitlines() if ln.strip()]
    head = lines[0].split()
    if len(head) != 4 or head[0] != "BP":
        raise ExactPolyError("bad BP header")
    xdeg = int(head[3])
    pos = 1
    xcoeffs = [IntPoly()] * (xdeg + 1)
    for j in range(xdeg + 1):
        if lines[pos].split() != ["C", str(j)]:
            raise ExactPolyError(f"expected coefficient marker C {j}")
        poly, _var, pos2 = _parse_poly_block(lines, pos + 1)
        ip, scale = poly.clear_denominators()
        if poly.is_zero():
            ip = IntPoly()
        elif scale.denominator != 1:
            raise ExactPolyError("BiPoly coefficients must be integral")
        else:
            ip = IntPoly(tuple(int(v) for v in poly.coeffs))
        xcoeffs[j] = ip
        pos = pos2
    if pos != len(lines):
        raise ExactPolyError("trailing garbage in BP file")
    return BiPoly(xcoeffs)


# ---------------------------------------------------------------------------
# the bundled inputs: f(t,X), g(s,X), gtilde
# ---------------------------------------------------------------------------

def poly_f():
    """f(t,X) = (X^2-7X+15)^5 (X^2+15X+180)^5 (X^2+4X+400) - t X^6 (X-4)^4."""
    p1 = IntPoly((15, -7, 1))
    p2 = IntPoly((180, 15, 1))
    p3 = IntPoly((400, 4, 1))
    P = p1 ** 5 * p2 ** 5 * p3
    Q = IntPoly.x(6) * IntPoly((-4, 1)) ** 4
    xc = []
    for j in range(23):
        pj = P.coeffs[j] if j <= P.degree else 0
        qj = Q.coeffs[j] if j <= Q.degree else 0
        xc.append(IntPoly((pj, -qj)))
    return BiPoly(xc)


def poly_g():
    """g(s,X) = 256 P(X) - 3^3 5^4 11^10 (s^2+55) X^6 (X-4)^4."""
    p1 = IntPoly((15, -7, 1))
    p2 = IntPoly((180, 15, 1))
    p3 = IntPoly((400, 4, 1))
    P = p1 ** 5 * p2 ** 5 * p3
    Q = IntPoly.x(6) * IntPoly((-4, 1)) ** 4
    m = 3 ** 3 * 5 ** 4 * 11 ** 10
    xc = []
    for j in range(23):
        pj = 256 * (P.coeffs[j] if j <= P.degree else 0)
        qj = Q.coeffs[j] if j <= Q.degree else 0
        xc.append(IntPoly((pj - qj * m * 55, 0, -qj * m)))
    return BiPoly(xc)


def t_of_s():
    """The quadratic substitution t(s) = 3^3 5^4 11^10 (s^2+55) / 2^8."""
    m = Fraction(3 ** 3 * 5 ** 4 * 11 ** 10, 2 ** 8)
    return RatPoly((55 * m, 0, m))


def poly_gtilde():
    """Degree-8 factor of g(0,X) used for the 3-adic decomposition analysis."""
    return RatPoly((
        Fraction(12301875),
        Fraction(-23674275, 2),
        Fraction(74121075, 16),
        Fraction(-1312335, 2),
        Fraction(-42189, 2),
        Fraction(9795, 2),
        Fraction(783),
        Fraction(38),
        Fraction(1),
    ))
