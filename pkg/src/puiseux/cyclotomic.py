"""Cyclotomic polynomials over Q, elementary symmetric values, and the
vanishing-pattern check for polynomials whose roots are roots of unity."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError
from .exact import PrimeFieldElement, PrimeFieldPoly
from .qpoly import QPoly, factor_over_rationals


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> QPoly:
    """The n-th cyclotomic polynomial: monic, irreducible over Q, degree phi(n).

    Computed by exact division of X^n - 1 by the cyclotomic polynomials of
    the proper divisors of n, with memoization.  The cache behaves as a pure
    function and is safe under concurrent use.

    >>> cyclotomic_poly(6)
    QPoly('X^2 - X + 1')
    """
    if n < 1:
        raise DomainError("cyclotomic index must be a positive integer")
    if n == 1:
        return QPoly([-1, 1])
    poly = QPoly([-1] + [0] * (n - 1) + [1])
    for d in range(1, n):
        if n % d == 0:
            poly //= cyclotomic_poly(d)
    return poly


@lru_cache(maxsize=None)
def totient(n: int) -> int:
    """Euler's phi, by trial-division factorization."""
    if n < 1:
        raise DomainError("totient is defined for positive integers")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1 if p == 2 else 2
    if m > 1:
        result -= result // m
    return result


@lru_cache(maxsize=None)
def inverse_totient(d: int) -> frozenset[int]:
    """All n with phi(n) = d.

    Complete, because phi(n) >= sqrt(n/2) makes n <= 2*d^2 + 2 an exhaustive
    search bound.
    """
    if d < 1:
        raise DomainError("totient values are positive integers")
    bound = 2 * d * d + 2
    return frozenset(n for n in range(1, bound + 1) if totient(n) == d)


def classify_cyclotomic(p: QPoly, *, assume_irreducible: bool = False) -> int | None:
    """Return n when p equals the n-th cyclotomic polynomial, else None.

    ``p`` must be monic and irreducible over Q.  Recognition compares ``p``
    against every candidate index of matching degree (the inverse-totient
    fiber), which is complete over Q.
    """
    if p.is_zero or not p.is_monic:
        raise DomainError("cyclotomic classification needs a monic polynomial")
    if p.degree < 1:
        raise DomainError("constants are units, not irreducible polynomials")
    if not assume_irreducible:
        fact = factor_over_rationals(p)
        if len(fact.factors) != 1 or fact.factors[0][1] != 1:
            raise DomainError("cyclotomic classification needs an irreducible polynomial")
    for n in sorted(inverse_totient(p.degree)):
        if p == cyclotomic_poly(n):
            return n
    return None


def _symmetric_values_q(f: QPoly) -> tuple[Fraction, ...]:
    n = f.degree
    return tuple((-1) ** k * f.coeff(n - k) for k in range(n + 1))


def _symmetric_values_mod(f: PrimeFieldPoly) -> tuple[PrimeFieldElement, ...]:
    n = f.degree
    p = f.modulus
    out = []
    for k in range(n + 1):
        c = f.coeff(n - k)
        out.append(PrimeFieldElement(c if k % 2 == 0 else -c, p))
    return tuple(out)


def elementary_symmetric(
    f: QPoly | PrimeFieldPoly,
) -> tuple[Fraction, ...] | tuple[PrimeFieldElement, ...]:
    """The values (e_0, ..., e_n) of the elementary symmetric polynomials of
    the roots of a monic degree-n polynomial, read off its coefficients.

    e_k equals (-1)^k times the X^(n-k) coefficient; e_0 = 1 by convention.
    Over F_p the sign is applied inside the field (so it vanishes for p = 2).
    """
    if isinstance(f, PrimeFieldPoly):
        if not f.is_monic:
            raise DomainError("elementary symmetric values are defined for monic polynomials")
        return _symmetric_values_mod(f)
    if isinstance(f, QPoly):
        if not f.is_monic:
            raise DomainError("elementary symmetric values are defined for monic polynomials")
        return _symmetric_values_q(f)
    raise TypeError(f"expected QPoly or PrimeFieldPoly, got {type(f).__name__}")


@dataclass(frozen=True)
class VanishingReport:
    """Outcome of the reflected-vanishing check on (e_0, ..., e_n).

    ``holds`` is true when e_k = 0 implies e_{n-k} = 0 for every k;
    ``witnesses`` lists every violating k (those with e_k = 0 but
    e_{n-k} != 0).
    """

    holds: bool
    witnesses: tuple[int, ...]


def reciprocal_vanishing_check(f: QPoly | PrimeFieldPoly) -> VanishingReport:
    """Check whether zeros of e_k are mirrored at e_{n-k}.

    For monic polynomials over Q whose roots are all roots of unity the
    pattern always holds; over prime fields it can fail.
    """
    if f.degree < 1:
        raise DomainError("the vanishing check needs degree >= 1")
    values = elementary_symmetric(f)
    if isinstance(f, PrimeFieldPoly):
        iszero = [v.is_zero for v in values]
    else:
        iszero = [v == 0 for v in values]
    n = len(values) - 1
    witnesses = tuple(k for k in range(n + 1) if iszero[k] and not iszero[n - k])
    return VanishingReport(holds=not witnesses, witnesses=witnesses)
