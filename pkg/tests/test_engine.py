"""Canonical factorization and divisor enumeration in Q[S]."""

import random
from fractions import Fraction

import pytest

from puiseux import (
    CanonicalFactorization,
    DomainError,
    PuiseuxMonoid,
    PuiseuxPoly,
    QPoly,
    Rat,
    ResourceLimitError,
    canonical_factorization,
    classify_cyclotomic,
    cyclotomic_poly,
    divisors_in_algebra,
    ff_divisor_count,
    generalized_poly,
    is_atom_in_algebra,
    parse_poly,
    poly_gcd,
    recompose,
)

from oracles import brute_divisor_set
from randgen import random_composite


def test_canonical_factorization_examples():
    cf = canonical_factorization(parse_poly("X^3 + X + 2"))
    assert cf.constant == 1
    assert cf.clearing_denominator == 1
    assert cf.monomial_exponent == 0
    assert cf.cyclotomic_part == ((2, 1),)
    assert cf.prime_part == ((QPoly([2, -1, 1]), 1),)

    cf = canonical_factorization(parse_poly("X^(1/2) - 1"))
    assert (cf.constant, cf.clearing_denominator) == (1, 2)
    assert cf.monomial_exponent == 0
    assert cf.cyclotomic_part == ((1, 1),)
    assert cf.prime_part == ()

    cf = canonical_factorization(parse_poly("X^(3/2) - X^(1/2)"))
    assert (cf.constant, cf.clearing_denominator) == (1, 2)
    assert cf.monomial_exponent == Rat(1, 2)
    assert cf.cyclotomic_part == ((1, 1), (2, 1))
    assert cf.prime_part == ()

    cf = canonical_factorization(parse_poly("2*X^(5/2)"))
    assert cf.constant == 2
    assert cf.monomial_exponent == Rat(5, 2)
    assert cf.cyclotomic_part == () and cf.prime_part == ()


def test_canonical_factorization_zero_rejected():
    with pytest.raises(DomainError):
        canonical_factorization(PuiseuxPoly.zero())


def test_recompose_examples():
    for text in ("X^3 + X + 2", "X^(1/2) - 1", "X^(3/2) - X^(1/2)", "2*X^(5/2)"):
        f = parse_poly(text)
        assert recompose(canonical_factorization(f)) == f
    trivial = CanonicalFactorization(Fraction(1), 1, Rat(0), (), ())
    assert recompose(trivial) == PuiseuxPoly.one()
    half = CanonicalFactorization(Fraction(1), 2, Rat(0), ((1, 1),), ())
    assert recompose(half) == parse_poly("X^(1/2) - 1")


def test_round_trip_random_composites():
    rng = random.Random(103)
    for _ in range(120):
        f = random_composite(rng)
        assert recompose(canonical_factorization(f)) == f


def test_prime_components_are_noncyclotomic():
    rng = random.Random(107)
    for _ in range(40):
        f = random_composite(rng, max_cleared_degree=10)
        cf = canonical_factorization(f)
        for q, _ in cf.prime_part:
            assert q.is_monic
            assert classify_cyclotomic(q, assume_irreducible=True) is None
            # coprime to X^d - 1 for every candidate d up to the degree fiber
            for d in range(1, 13):
                xd = QPoly([-1] + [0] * (d - 1) + [1])
                assert poly_gcd(q, xd) == QPoly([1])


def test_divisors_examples():
    S = PuiseuxMonoid([2, 3])
    result = divisors_in_algebra(parse_poly("X^6 - 1"), S)
    expected = {
        parse_poly("1"),
        parse_poly("X^2 - 1"),
        parse_poly("X^3 - 1"),
        parse_poly("X^3 + 1"),
        parse_poly("X^4 + X^2 + 1"),
        parse_poly("X^6 - 1"),
    }
    assert set(result.divisors) == expected

    result = divisors_in_algebra(parse_poly("X^2 - 1"), S)
    assert set(result.divisors) == {parse_poly("1"), parse_poly("X^2 - 1")}

    result = divisors_in_algebra(parse_poly("X - 1"), PuiseuxMonoid([1]))
    assert set(result.divisors) == {parse_poly("1"), parse_poly("X - 1")}


def test_divisors_preconditions():
    S = PuiseuxMonoid([2, 3])
    with pytest.raises(DomainError):
        divisors_in_algebra(parse_poly("X - 1"), S)  # supp not inside S
    with pytest.raises(DomainError):
        divisors_in_algebra(PuiseuxPoly.zero(), S)


def test_atom_examples():
    S = PuiseuxMonoid([2, 3])
    assert is_atom_in_algebra(parse_poly("X^2 - 1"), S)
    assert not is_atom_in_algebra(parse_poly("X^2 - 1"), PuiseuxMonoid([1]))
    assert is_atom_in_algebra(parse_poly("X^2 + 1"), S)
    with pytest.raises(DomainError):
        is_atom_in_algebra(parse_poly("5"), S)


def test_count_examples():
    S = PuiseuxMonoid([2, 3])
    assert ff_divisor_count(parse_poly("X^6 - 1"), S) == 6
    assert ff_divisor_count(parse_poly("X - 1"), PuiseuxMonoid([1])) == 2
    assert ff_divisor_count(parse_poly("2*X^2"), S) == 2


def test_divisor_set_contains_unit_and_self_classes():
    S = PuiseuxMonoid([2, 3])
    f = parse_poly("3*X^6 - 3")
    result = divisors_in_algebra(f, S)
    assert parse_poly("1") in result.divisors
    assert f.normalized_leading() in result.divisors


def test_divisor_cofactor_closure_and_support():
    S = PuiseuxMonoid([Rat(1, 2), Rat(2, 3)])
    f = generalized_poly(cyclotomic_poly(1) * cyclotomic_poly(2), Rat(1, 2))
    result = divisors_in_algebra(f, S)
    scale, numerical = S.normalization()
    monic = f.normalized_leading()
    divisors = set(result.divisors)
    for g in result.divisors:
        for e in g.support:
            assert S.contains(e)
        # exact cofactor via the scaled polynomial ring
        num = monic.substitute(scale).to_qpoly()
        den = g.substitute(scale).to_qpoly()
        q, r = divmod(num, den)
        assert r.is_zero
        cofactor = PuiseuxPoly.from_qpoly(q, Rat(1) / scale).normalized_leading()
        assert cofactor in divisors
        for e in cofactor.support:
            assert S.contains(e)


def test_generalized_cyclotomic_divisors_symmetric():
    products = [
        cyclotomic_poly(1) * cyclotomic_poly(2),
        cyclotomic_poly(3),
        cyclotomic_poly(2) * cyclotomic_poly(6),
    ]
    grids = [
        (PuiseuxMonoid([2, 3]), [Rat(2), Rat(3)]),
        (PuiseuxMonoid([Rat(1, 2), Rat(2, 3)]), [Rat(1, 2), Rat(2, 3)]),
    ]
    for S, scales in grids:
        for product in products:
            for s in scales:
                f = generalized_poly(product, s)
                result = divisors_in_algebra(f, S)
                assert len(result.divisors) >= 2
                for g in result.divisors:
                    assert g.is_symmetric_support()


def test_scaling_gives_divisor_bijection():
    rng = random.Random(109)
    monoids = [
        PuiseuxMonoid([1]),
        PuiseuxMonoid([2, 3]),
        PuiseuxMonoid([Rat(1, 2), Rat(2, 3)]),
    ]
    ratios = [Rat(1, 2), Rat(2), Rat(3, 2), Rat(5, 3)]
    for _ in range(40):
        S = rng.choice(monoids)
        gens = list(S.generators)
        f = PuiseuxPoly.one()
        for _ in range(rng.randint(1, 2)):
            g = rng.choice(gens)
            f = f * (PuiseuxPoly.monomial(1, g) + (-1) ** rng.randint(0, 1))
        f = f * PuiseuxPoly.monomial(rng.randint(1, 3), rng.choice(gens))
        r = rng.choice(ratios)
        before = divisors_in_algebra(f, S)
        after = divisors_in_algebra(f.substitute(r), S.scaled(r))
        assert len(before.divisors) == len(after.divisors)
        mapped = {g.substitute(r).normalized_leading() for g in before.divisors}
        assert mapped == set(after.divisors)


def test_matches_brute_force_oracle():
    pool = [
        QPoly([-1, 1]),
        QPoly([1, 1]),
        QPoly([1, 1, 1]),
        QPoly([1, -1, 1]),
        QPoly([2, -1, 1]),
        QPoly([-2, 0, 1]),
        QPoly([2, 1]),
    ]
    rng = random.Random(113)
    for S in (PuiseuxMonoid([1]), PuiseuxMonoid([2, 3])):
        for _ in range(30):
            f = QPoly([1])
            while True:
                step = rng.choice(pool)
                if f.degree + step.degree > 6:
                    break
                f = f * step
                if rng.random() < 0.4:
                    break
            shift = rng.randint(0, max(0, 6 - f.degree))
            f = f * QPoly.monomial(1, shift)
            element = PuiseuxPoly.from_qpoly(f, 1)
            if any(not S.contains(e) for e in element.support):
                continue
            mine = {g.terms for g in divisors_in_algebra(element, S).divisors}
            oracle = {
                tuple((Rat(e), c) for e, c in terms)
                for terms in brute_divisor_set(element.terms, S.generators)
            }
            assert mine == oracle


def test_resource_limit_guard():
    S = PuiseuxMonoid([1])
    f = parse_poly("X^6 - 1")
    with pytest.raises(ResourceLimitError):
        divisors_in_algebra(f, S, limit=4)
    # generous limit succeeds
    assert len(divisors_in_algebra(f, S, limit=1 << 20).divisors) > 2
