"""Finite-field polynomial factorization: oracle agreement and regressions."""

import random

import pytest

from m22verify.exactpoly import IntPoly, RatPoly
from m22verify.ffpoly import (
    BadPrimeError,
    FFPolyError,
    FpPolynomial,
    PrimeField,
    distinct_degree_census,
    fp_gcd,
    fp_powmod,
    fp_squarefree_decomposition,
    full_factor,
    reduce_mod_p,
    squarefree_part,
)


def random_poly(field, degree, rng):
    coeffs = [rng.randrange(field.p) for _ in range(degree)] + [1]
    return FpPolynomial(field, coeffs)


def reconstruct(field, lead, parts):
    acc = FpPolynomial.const(field, lead)
    for g, m in parts:
        for _ in range(m):
            acc = acc * g
    return acc


# ---------------------------------------------------------------------------
# field and polynomial basics
# ---------------------------------------------------------------------------

def test_prime_field_ops():
    F = PrimeField(101)
    assert F.add(100, 2) == 1
    assert F.mul(50, 50) == (50 * 50) % 101
    for a in range(1, 101):
        assert F.mul(a, F.inv(a)) == 1


def test_prime_field_rejects_composite():
    with pytest.raises(FFPolyError):
        PrimeField(91)


def test_fp_powmod_matches_naive():
    F = PrimeField(13)
    rng = random.Random(5)
    for _ in range(20):
        base = random_poly(F, 3, rng)
        mod = random_poly(F, 4, rng)
        e = rng.randint(0, 40)
        naive = FpPolynomial.const(F, 1)
        for _ in range(e):
            naive = (naive * base) % mod
        assert fp_powmod(base, e, mod) == naive


def test_reduce_mod_p_bad_prime():
    F = PrimeField(5)
    from fractions import Fraction
    with pytest.raises(BadPrimeError):
        reduce_mod_p(RatPoly((Fraction(1, 5), 1)), F)
    assert reduce_mod_p(IntPoly((7, 1)), F).coeffs == (2, 1)


# ---------------------------------------------------------------------------
# squarefree decomposition (incl. multiplicity >= p regression)
# ---------------------------------------------------------------------------

def test_squarefree_decomposition_reconstructs():
    rng = random.Random(7)
    for p in (3, 5, 13):
        F = PrimeField(p)
        for _ in range(40):
            f = random_poly(F, rng.randint(1, 4), rng)
            g = random_poly(F, rng.randint(1, 3), rng)
            prod = f * f * g
            parts = fp_squarefree_decomposition(prod)
            assert reconstruct(F, prod.lc(), parts) == prod
            for factor, _m in parts:
                assert factor.is_squarefree()


def test_squarefree_multiplicity_at_least_p():
    """Multiplicities m >= p exercise the p-th-root branch; the stride
    bookkeeping must not multiply by p twice."""
    for p, mults in ((3, (3, 1)), (5, (5, 2)), (3, (9, 1))):
        F = PrimeField(p)
        a = FpPolynomial(F, (1, 1))   # x + 1
        b = FpPolynomial(F, (2, 1))   # x + 2
        f = FpPolynomial.const(F, 1)
        for _ in range(mults[0]):
            f = f * a
        for _ in range(mults[1]):
            f = f * b
        got = sorted((g.coeffs, m) for g, m in fp_squarefree_decomposition(f))
        assert got == sorted([(a.coeffs, mults[0]), (b.coeffs, mults[1])])
        assert sum(g.degree * m for g, m in fp_squarefree_decomposition(f)) \
            == f.degree


# ---------------------------------------------------------------------------
# full factorization vs census oracle
# ---------------------------------------------------------------------------

def assert_factorization_valid(f, factors):
    F = f.field
    assert reconstruct(F, f.lc(), factors) == f
    for g, _m in factors:
        assert g.lc() == 1
        # irreducible: no factor of degree <= deg(g)//2
        census = distinct_degree_census(g, max(1, g.degree // 2))
        assert all(n == 0 for d, n in census.counts if d <= g.degree // 2) \
            or g.degree == 1


def test_full_factor_validity():
    rng = random.Random(11)
    for p in (101, 10007):
        F = PrimeField(p)
        for _ in range(25):
            f = random_poly(F, rng.randint(1, 12), rng)
            assert_factorization_valid(f, full_factor(f, seed=0))


def test_census_agrees_with_full_factor():
    """The module-level quick version of the 10^4-case acceptance suite."""
    rng = random.Random(13)
    for _ in range(300):
        p = rng.choice((101, 10007))
        F = PrimeField(p)
        f = random_poly(F, rng.randint(1, 22), rng)
        census = distinct_degree_census(f, f.degree)
        factors = full_factor(f, seed=1)
        distinct = sorted(g.degree for g, _m in factors)
        assert census.degree_multiset() == distinct
        assert census.squarefree_defect == any(m > 1 for _g, m in factors)


def test_full_factor_deterministic_given_seed():
    F = PrimeField(10007)
    rng = random.Random(17)
    f = random_poly(F, 16, rng)
    assert full_factor(f, seed=42) == full_factor(f, seed=42)


def test_squarefree_part_is_radical():
    F = PrimeField(7)
    a = FpPolynomial(F, (1, 1))
    b = FpPolynomial(F, (3, 1, 1))
    f = a * a * a * b
    rad = squarefree_part(f)
    assert rad == (a * b).monic()
    assert fp_gcd(rad, rad.derivative()).degree == 0
