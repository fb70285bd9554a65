"""Cyclotomic generation/recognition, symmetric values, vanishing pattern."""

import random

import pytest

from puiseux import (
    DomainError,
    PrimeFieldPoly,
    QPoly,
    classify_cyclotomic,
    cyclotomic_poly,
    elementary_symmetric,
    inverse_totient,
    reciprocal_vanishing_check,
    totient,
)

from randgen import random_cyclotomic_product


def test_cyclotomic_small():
    assert cyclotomic_poly(1) == QPoly([-1, 1])
    assert cyclotomic_poly(2) == QPoly([1, 1])
    assert cyclotomic_poly(3) == QPoly([1, 1, 1])
    assert cyclotomic_poly(6) == QPoly([1, -1, 1])


def test_cyclotomic_index_error():
    with pytest.raises(DomainError):
        cyclotomic_poly(0)


def test_cyclotomic_product_identity():
    for n in range(1, 41):
        product = QPoly.one()
        for d in range(1, n + 1):
            if n % d == 0:
                product = product * cyclotomic_poly(d)
        assert product == QPoly([-1] + [0] * (n - 1) + [1])


def test_cyclotomic_degree_is_totient():
    for n in range(1, 81):
        assert cyclotomic_poly(n).degree == totient(n)


def test_inverse_totient_examples():
    assert inverse_totient(1) == {1, 2}
    assert inverse_totient(2) == {3, 4, 6}
    assert inverse_totient(3) == frozenset()


def test_inverse_totient_complete_small():
    # Brute force over a wide range confirms the search bound loses nothing.
    for d in range(1, 11):
        direct = {n for n in range(1, 4 * d * d + 10) if totient(n) == d}
        assert inverse_totient(d) == direct


def test_classify_examples():
    assert classify_cyclotomic(QPoly([1, 1, 1])) == 3
    assert classify_cyclotomic(QPoly([2, -1, 1])) is None
    assert classify_cyclotomic(QPoly([-1, 1])) == 1


def test_classify_round_trip():
    for n in range(1, 101):
        assert classify_cyclotomic(cyclotomic_poly(n), assume_irreducible=True) == n


def test_classify_rejects_bad_input():
    with pytest.raises(DomainError):
        classify_cyclotomic(QPoly([-1, 0, 1]))  # reducible
    with pytest.raises(DomainError):
        classify_cyclotomic(QPoly([2, 2]))  # non-monic
    with pytest.raises(DomainError):
        classify_cyclotomic(QPoly([1]))  # unit


def test_elementary_symmetric_examples():
    assert elementary_symmetric(QPoly([2, -3, 1])) == (1, 3, 2)
    values = elementary_symmetric(PrimeFieldPoly((1, 0, 1, 1), 2))
    assert tuple(v.value for v in values) == (1, 1, 0, 1)
    assert elementary_symmetric(QPoly([1, 0, 1, 0, 1])) == (1, 0, 1, 0, 1)


def test_elementary_symmetric_requires_monic():
    with pytest.raises(DomainError):
        elementary_symmetric(QPoly([1, 2]))
    with pytest.raises(DomainError):
        elementary_symmetric(PrimeFieldPoly((1, 1, 2), 3))


def test_vanishing_check_examples():
    report = reciprocal_vanishing_check(QPoly([1, 0, 1, 0, 1]))
    assert report.holds and report.witnesses == ()

    report = reciprocal_vanishing_check(PrimeFieldPoly((1, 0, 1, 1), 2))
    assert not report.holds
    assert report.witnesses == (2,)

    report = reciprocal_vanishing_check(QPoly([-1, 1]))
    assert report.holds


def test_vanishing_check_on_random_cyclotomic_products():
    rng = random.Random(53)
    for _ in range(60):
        product = random_cyclotomic_product(rng)
        assert reciprocal_vanishing_check(product).holds
