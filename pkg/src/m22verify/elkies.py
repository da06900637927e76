"""Point counting on the 4-subset resolvent against the Hasse-Weil bound.

For each t0 in F_lambda away from the discriminant locus, every quartic
irreducible factor of the specialized polynomial corresponds to a point
on the degree-C(22,4) resolvent curve; the total is compared with the
Weil bound for the genus computed under the full-symmetric-group
hypothesis.  A count exceeding the bound refutes that hypothesis.
"""

import math
import os
import threading

import numpy as np
from numba import njit

from .exactpoly import _is_probable_prime
from .ffpoly import FpPolynomial, PrimeField, distinct_degree_census, reduce_mod_p
from .permgrp import induced_kset_action, rh_genus


class ElkiesError(Exception):
    pass


class ExclusionConfig:
    """Parameters for the counting run."""

    def __init__(self, lam, k=4, threads=1, shard_size=1 << 15, checkpoint=None):
        if not _is_probable_prime(lam):
            raise ElkiesError("modulus %d is not prime" % lam)
        if k < 1:
            raise ElkiesError("subset size must be >= 1")
        self.lam = lam
        self.k = k
        self.threads = max(1, threads)
        self.shard_size = shard_size
        self.checkpoint = checkpoint


def hypothetical_genus(n, k, types):
    """Genus of the k-subset resolvent cover under the hypothesis that the
    monodromy is the full symmetric group: induce each inertia cycle type
    on k-subsets and apply Riemann-Hurwitz for three branch points."""
    induced = []
    for ctype in types:
        if ctype.degree != n:
            raise ElkiesError("cycle type degree %d != %d" % (ctype.degree, n))
        perm = induced_kset_action(ctype.canonical_permutation(), k)
        induced.append(perm.cycle_type())
    return rh_genus(math.comb(n, k), induced)


def hasse_weil_bound(lam, g):
    """Smallest integer >= lam + 1 + 2 g sqrt(lam), computed exactly
    (ceiling of the irrational term, the safe direction for an upper
    bound on a point count)."""
    if not _is_probable_prime(lam):
        raise ElkiesError("modulus %d is not prime" % lam)
    if g < 0:
        raise ElkiesError("genus must be nonnegative")
    s = 4 * g * g * lam
    r = math.isqrt(s)
    return lam + 1 + r + (0 if r * r == s else 1)


class ExclusionVerdict:
    """Outcome record of the count-versus-bound comparison."""

    def __init__(self, count, bound):
        self.count = count
        self.bound = bound
        self.verdict = "CONTRADICTION" if count > bound else "INCONCLUSIVE"

    def __repr__(self):
        return "ExclusionVerdict(%d vs %d: %s)" % (self.count, self.bound, self.verdict)


def exclusion_verdict(count, bound):
    return ExclusionVerdict(count, bound)


# ---------------------------------------------------------------------------
# specialization data
# ---------------------------------------------------------------------------

def _coeff_matrix(F, lam):
    """Reduce a bivariate polynomial to an int64 matrix C[i][j] = coeff of
    t^j in the X^i coefficient, mod lam."""
    nx = len(F.xcoeffs) - 1
    nt = max((len(c.coeffs) for c in F.xcoeffs), default=1) - 1
    mat = np.zeros((nx + 1, nt + 1), dtype=np.int64)
    for i, c in enumerate(F.xcoeffs):
        for j, v in enumerate(c.coeffs):
            mat[i, j] = v % lam
    if not mat[nx].any():
        raise ElkiesError("leading X-coefficient vanishes identically mod %d" % lam)
    return mat


def _poly_mod_vector(ipoly, lam):
    arr = np.array([v % lam for v in ipoly.coeffs], dtype=np.int64)
    return arr if arr.size else np.zeros(1, dtype=np.int64)


# ---------------------------------------------------------------------------
# numba kernel: quartic-factor counting over a t0 range
# ---------------------------------------------------------------------------

@njit(cache=True, nogil=True)
def _poly_eval(coeffs, t0, lam):
    acc = 0
    for j in range(len(coeffs) - 1, -1, -1):
        acc = (acc * t0 + coeffs[j]) % lam
    return acc


@njit(cache=True, nogil=True)
def _modmul(a, da, b, db, m, dm, lam, out):
    """out = a*b mod m (monic m of degree dm); returns degree of out."""
    prod = np.zeros(da + db + 1, dtype=np.int64)
    for i in range(da + 1):
        ai = a[i]
        if ai == 0:
            continue
        for j in range(db + 1):
            prod[i + j] = (prod[i + j] + ai * b[j]) % lam
    for i in range(da + db, dm - 1, -1):
        c = prod[i]
        if c == 0:
            continue
        prod[i] = 0
        for j in range(dm):
            prod[i - dm + j] = (prod[i - dm + j] - c * m[j]) % lam
    deg = -1
    for i in range(min(da + db, dm - 1), -1, -1):
        if prod[i] != 0:
            deg = i
            break
    for i in range(dm):
        out[i] = prod[i] if i <= deg else 0
    return deg


@njit(cache=True, nogil=True)
def _powmod_frob(base, dbase, e, m, dm, lam, out):
    """out = base^e mod m; returns degree."""
    result = np.zeros(dm, dtype=np.int64)
    result[0] = 1
    dres = 0
    cur = np.zeros(dm, dtype=np.int64)
    for i in range(dm):
        cur[i] = base[i]
    dcur = dbase
    tmp = np.zeros(dm, dtype=np.int64)
    while e > 0:
        if e & 1:
            dres = _modmul(result, max(dres, 0), cur, max(dcur, 0), m, dm, lam, tmp)
            for i in range(dm):
                result[i] = tmp[i]
        e >>= 1
        if e > 0:
            dcur = _modmul(cur, max(dcur, 0), cur, max(dcur, 0), m, dm, lam, tmp)
            for i in range(dm):
                cur[i] = tmp[i]
    for i in range(dm):
        out[i] = result[i]
    return dres


@njit(cache=True, nogil=True)
def _gcd_inplace(a, da, b, db, lam):
    """gcd of a (degree da) and b (degree db), left monic in a; returns
    its degree.  a and b are scratch-owned by the caller."""
    while db >= 0:
        # a mod b
        inv = 1
        # modular inverse of b's leading coefficient via Fermat
        base = b[db] % lam
        e = lam - 2
        while e > 0:
            if e & 1:
                inv = (inv * base) % lam
            base = (base * base) % lam
            e >>= 1
        for i in range(da, db - 1, -1):
            c = (a[i] * inv) % lam
            if c != 0:
                for j in range(db + 1):
                    a[i - db + j] = (a[i - db + j] - c * b[j]) % lam
        dr = -1
        for i in range(db - 1, -1, -1):
            if a[i] != 0:
                dr = i
                break
        # swap roles
        for i in range(max(da, db) + 1):
            t = a[i]
            a[i] = b[i] if i <= db else 0
            b[i] = t if i <= dr else 0
        da, db = db, dr
    # make monic
    if da > 0:
        inv = 1
        base = a[da] % lam
        e = lam - 2
        while e > 0:
            if e & 1:
                inv = (inv * base) % lam
            base = (base * base) % lam
            e >>= 1
        for i in range(da + 1):
            a[i] = (a[i] * inv) % lam
    return da


@njit(cache=True, nogil=True)
def _quartic_count_one(coeffs, deg, lam, kmax):
    """Number of Frobenius-stable kmax-element root subsets of the
    squarefree part of the polynomial with the given coefficients: count
    the irreducible factors of each degree d <= kmax, then tally the
    factor sub-multisets whose degrees sum to kmax (each is one
    rational point on the kmax-set resolvent)."""
    size = deg + 2
    # squarefree part: h = f / gcd(f, f')
    a = np.zeros(size, dtype=np.int64)
    b = np.zeros(size, dtype=np.int64)
    for i in range(deg + 1):
        a[i] = coeffs[i]
    for i in range(1, deg + 1):
        b[i - 1] = (i * coeffs[i]) % lam
    dbp = -1
    for i in range(deg - 1, -1, -1):
        if b[i] != 0:
            dbp = i
            break
    dg = _gcd_inplace(a, deg, b, dbp, lam)
    # h = f / g  (exact division)
    h = np.zeros(size, dtype=np.int64)
    rem = np.zeros(size, dtype=np.int64)
    for i in range(deg + 1):
        rem[i] = coeffs[i]
    dh = deg - dg
    inv = 1
    base = a[dg] % lam
    e = lam - 2
    while e > 0:
        if e & 1:
            inv = (inv * base) % lam
        base = (base * base) % lam
        e >>= 1
    for i in range(deg, dg - 1, -1):
        c = (rem[i] * inv) % lam
        h[i - dg] = c
        if c != 0:
            for j in range(dg + 1):
                rem[i - dg + j] = (rem[i - dg + j] - c * a[j]) % lam
    # make h monic
    if dh >= 0 and h[dh] != 1:
        inv = 1
        base = h[dh] % lam
        e = lam - 2
        while e > 0:
            if e & 1:
                inv = (inv * base) % lam
            base = (base * base) % lam
            e >>= 1
        for i in range(dh + 1):
            h[i] = (h[i] * inv) % lam
    # distinct-degree stages 1..kmax on h
    x = np.zeros(size, dtype=np.int64)
    frob = np.zeros(size, dtype=np.int64)
    tmp = np.zeros(size, dtype=np.int64)
    scratch_a = np.zeros(size, dtype=np.int64)
    scratch_b = np.zeros(size, dtype=np.int64)
    if dh < 1:
        return 0
    x[1] = 1
    dfrob = _powmod_frob(x, 1, lam, h, dh, lam, frob)
    cnts = np.zeros(kmax + 1, dtype=np.int64)
    for d in range(1, kmax + 1):
        if dh <= 0:
            break
        if dh < 2 * d:
            # the remaining cofactor is irreducible of degree dh
            if dh <= kmax:
                cnts[dh] += 1
            dh = 0
            break
        # gcd(frob - x, h)
        for i in range(size):
            scratch_a[i] = 0
            scratch_b[i] = 0
        for i in range(max(dfrob, 1) + 1):
            scratch_a[i] = frob[i]
        scratch_a[1] = (scratch_a[1] - 1) % lam
        dsa = -1
        for i in range(dh - 1, -1, -1):
            if scratch_a[i] != 0:
                dsa = i
                break
        for i in range(dh + 1):
            scratch_b[i] = h[i]
        dg2 = _gcd_inplace(scratch_b, dh, scratch_a, dsa, lam)
        if dg2 > 0:
            cnts[d] += dg2 // d
            # h = h / gcd
            for i in range(dh + 1):
                rem[i] = h[i]
            newdh = dh - dg2
            for i in range(dh, dg2 - 1, -1):
                c = rem[i] % lam
                tmp[i - dg2] = c
                if c != 0:
                    for j in range(dg2 + 1):
                        rem[i - dg2 + j] = (rem[i - dg2 + j] - c * scratch_b[j]) % lam
            dh = newdh
            for i in range(size):
                h[i] = tmp[i] if i <= dh else 0
                tmp[i] = 0
            if dh <= 0:
                break
            dfrob = _gcd_reduce_mod(frob, max(dfrob, 0), h, dh, lam)
        if d == kmax:
            break
        # next Frobenius power
        dfrob = _powmod_frob(frob, max(dfrob, 0), lam, h, dh, lam, tmp)
        for i in range(size):
            frob[i] = tmp[i]
    return _combine_points(cnts, kmax)


@njit(cache=True, nogil=True)
def _combine_points(cnts, kmax):
    """Number of ways to pick distinct irreducible factors with degrees
    summing to kmax, given cnts[d] factors of each degree d."""
    ways = np.zeros(kmax + 1, dtype=np.int64)
    ways[0] = 1
    for d in range(1, kmax + 1):
        cd = cnts[d]
        if cd == 0:
            continue
        new = np.zeros(kmax + 1, dtype=np.int64)
        for s in range(kmax + 1):
            if ways[s] == 0:
                continue
            m = 0
            binom = 1  # C(cd, m)
            while s + d * m <= kmax:
                new[s + d * m] += ways[s] * binom
                binom = binom * (cd - m) // (m + 1)
                m += 1
        ways = new
    return ways[kmax]


@njit(cache=True, nogil=True)
def _gcd_reduce_mod(a, da, m, dm, lam):
    """Reduce a modulo monic m in place; returns the new degree."""
    for i in range(da, dm - 1, -1):
        c = a[i] % lam
        if c != 0:
            a[i] = 0
            for j in range(dm):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % lam
        else:
            a[i] = 0
    deg = -1
    for i in range(dm - 1, -1, -1):
        if a[i] != 0:
            deg = i
            break
    return deg


@njit(cache=True, nogil=True)
def _count_shard(cmat, disc, lam, t_start, t_end, kmax):
    """Count quartic factors for t0 in [t_start, t_end); skips t0 with
    disc(t0) == 0 or vanishing leading coefficient.  Returns (count,
    n_skipped)."""
    nx = cmat.shape[0] - 1
    total = 0
    skipped = 0
    coeffs = np.zeros(nx + 1, dtype=np.int64)
    for t0 in range(t_start, t_end):
        if _poly_eval(disc, t0, lam) == 0:
            skipped += 1
            continue
        for i in range(nx + 1):
            coeffs[i] = _poly_eval(cmat[i], t0, lam)
        deg = -1
        for i in range(nx, -1, -1):
            if coeffs[i] != 0:
                deg = i
                break
        if deg != nx:
            skipped += 1
            continue
        total += _quartic_count_one(coeffs, deg, lam, kmax)
    return total, skipped


# ---------------------------------------------------------------------------
# driver with shards, threads, checkpointing
# ---------------------------------------------------------------------------

class CountResult:
    def __init__(self, count, shards, skipped_t0, secondary_count, secondary_t0):
        self.count = count
        self.shards = shards            # list of (start, end, subtotal)
        self.skipped_t0 = skipped_t0    # t0 values excluded by the recipe
        self.secondary_count = secondary_count
        self.secondary_t0 = secondary_t0  # excluded t0 that were squarefree


def _load_checkpoint(path):
    done = {}
    if path and os.path.exists(path):
        with open(path) as fh:
            for line in fh:
                parts = line.split()
                if len(parts) == 3:
                    done[(int(parts[0]), int(parts[1]))] = int(parts[2])
    return done


def count_quartic_points(F, cfg, disc_t=None, progress=None):
    """Rational points on the k-set resolvent curve found by factoring:
    over all t0 in F_lambda with disc(t0) != 0, the number of
    Frobenius-stable k-element root subsets of F(t0, X) (irreducible
    factor combinations with degrees summing to k), plus the per-shard
    breakdown and a secondary count over excluded-but-squarefree t0."""
    lam = cfg.lam
    cmat = _coeff_matrix(F, lam)
    if disc_t is None:
        from .exactpoly import discriminant_x
        disc_t = discriminant_x(F)
    dvec = _poly_mod_vector(disc_t, lam)
    if not dvec.any():
        raise ElkiesError("discriminant vanishes identically mod %d" % lam)
    done = _load_checkpoint(cfg.checkpoint)
    shards = [
        (s, min(s + cfg.shard_size, lam))
        for s in range(0, lam, cfg.shard_size)
    ]
    results = {}
    lock = threading.Lock()
    ckpt_fh = open(cfg.checkpoint, "a") if cfg.checkpoint else None
    pending = [sh for sh in shards if sh not in done]

    def run_shard(sh):
        sub, _skipped = _count_shard(cmat, dvec, lam, sh[0], sh[1], cfg.k)
        with lock:
            results[sh] = int(sub)
            if ckpt_fh:
                ckpt_fh.write("%d %d %d\n" % (sh[0], sh[1], sub))
                ckpt_fh.flush()
            if progress:
                progress(len(results) + len(done), len(shards))

    if cfg.threads > 1 and len(pending) > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=cfg.threads) as pool:
            list(pool.map(run_shard, pending))
    else:
        for sh in pending:
            run_shard(sh)
    if ckpt_fh:
        ckpt_fh.close()
    total = 0
    breakdown = []
    for sh in shards:
        sub = done.get(sh, results.get(sh))
        breakdown.append((sh[0], sh[1], sub))
        total += sub

    # excluded t0 = roots of the discriminant (or degree drop); handle the
    # few of them in plain python for the secondary report
    field = PrimeField(lam)
    skipped_t0 = []
    for t0 in _roots_mod(dvec, lam):
        skipped_t0.append(t0)
    nx = cmat.shape[0] - 1
    secondary = 0
    secondary_t0 = []
    for t0 in skipped_t0:
        coeffs = [int(_horner(cmat[i], t0, lam)) for i in range(nx + 1)]
        if coeffs[nx] == 0:
            continue
        poly = FpPolynomial(field, coeffs)
        if not poly.is_squarefree():
            continue
        census = dict(distinct_degree_census(poly, cfg.k).counts)
        add = _python_combine_points(
            [census.get(d, 0) for d in range(cfg.k + 1)], cfg.k
        )
        if add:
            secondary += add
            secondary_t0.append(t0)
        else:
            secondary_t0.append(t0)
    return CountResult(total, breakdown, skipped_t0, secondary, secondary_t0)


def _horner(coeffs, t0, lam):
    acc = 0
    for c in reversed(coeffs.tolist()):
        acc = (acc * t0 + c) % lam
    return acc


def _roots_mod(dvec, lam):
    """Roots of the (small-degree) polynomial dvec over F_lambda via gcd
    with X^lam - X and factoring the root part."""
    field = PrimeField(lam)
    poly = FpPolynomial(field, dvec.tolist())
    from .ffpoly import fp_gcd, fp_powmod
    xq = fp_powmod(FpPolynomial(field, [0, 1]), lam, poly.monic())
    lin = fp_gcd(xq - FpPolynomial(field, [0, 1]), poly.monic())
    roots = []
    from .ffpoly import full_factor
    for fac, _mul in full_factor(lin):
        if fac.degree == 1:
            roots.append(int((-fac.coeffs[0] * pow(fac.coeffs[1], lam - 2, lam)) % lam))
    return sorted(roots)


def brute_force_count(F, cfg, disc_t=None):
    """Oracle: the same count computed with the generic field arithmetic
    (full factorization per t0); only sensible for small lambda."""
    lam = cfg.lam
    field = PrimeField(lam)
    cmat = _coeff_matrix(F, lam)
    if disc_t is None:
        from .exactpoly import discriminant_x
        disc_t = discriminant_x(F)
    dvec = _poly_mod_vector(disc_t, lam)
    nx = cmat.shape[0] - 1
    total = 0
    from .ffpoly import full_factor
    for t0 in range(lam):
        if _horner(dvec, t0, lam) == 0:
            continue
        coeffs = [int(_horner(cmat[i], t0, lam)) for i in range(nx + 1)]
        if coeffs[nx] == 0:
            continue
        poly = FpPolynomial(field, coeffs)
        sf = poly // fp_gcd_import(poly)
        cnts = [0] * (cfg.k + 1)
        for fac, _ in full_factor(sf):
            if fac.degree <= cfg.k:
                cnts[fac.degree] += 1
        total += _python_combine_points(cnts, cfg.k)
    return total


def _python_combine_points(cnts, k):
    """Reference implementation of the factor-combination tally."""
    from math import comb

    ways = [1] + [0] * k
    for d in range(1, k + 1):
        cd = cnts[d]
        if not cd:
            continue
        new = [0] * (k + 1)
        for s, w in enumerate(ways):
            if not w:
                continue
            m = 0
            while s + d * m <= k:
                new[s + d * m] += w * comb(cd, m)
                m += 1
        ways = new
    return ways[k]


def fp_gcd_import(poly):
    from .ffpoly import fp_gcd
    return fp_gcd(poly, poly.derivative()).monic()
