"""Finitely generated additive submonoids of the non-negative rationals.

Membership, divisor enumeration, and atom computation all route through a
scaling to a numerical monoid (an integer monoid whose generators have
gcd 1), where an Apery-set table decides membership in O(1) per query.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import cached_property
from typing import Iterable

from .errors import DomainError
from .exact import Rat


class NumericalMonoid:
    """Additive submonoid of Z_+ generated by positive integers with gcd 1."""

    def __init__(self, generators: Iterable[int]):
        gens = sorted(set(int(g) for g in generators))
        if not gens:
            raise DomainError("a numerical monoid needs at least one generator")
        if gens[0] <= 0:
            raise DomainError("generators must be positive")
        if math.gcd(*gens) != 1:
            raise DomainError("numerical-monoid generators must have gcd 1")
        self.generators: tuple[int, ...] = tuple(gens)

    @cached_property
    def _apery(self) -> tuple[int, ...]:
        """Least member in each residue class modulo the smallest generator.

        Built by round-robin relaxation over the residue classes; the table is
        an idempotent pure cache, so a racing rebuild is harmless.
        """
        a = self.generators[0]
        table: list[int | None] = [None] * a
        table[0] = 0
        changed = True
        while changed:
            changed = False
            for i in range(a):
                base = table[i]
                if base is None:
                    continue
                for g in self.generators:
                    j = (i + g) % a
                    cand = base + g
                    if table[j] is None or cand < table[j]:
                        table[j] = cand
                        changed = True
        return tuple(t if t is not None else -1 for t in table)

    def contains(self, x: int) -> bool:
        if x < 0:
            return False
        a = self.generators[0]
        least = self._apery[x % a]
        return least >= 0 and x >= least

    def divisors(self, n: int) -> list[int]:
        """All t with t and n - t both members; requires n to be a member."""
        if not self.contains(n):
            raise DomainError(f"{n} is not a member")
        return [t for t in range(n + 1) if self.contains(t) and self.contains(n - t)]

    def __repr__(self):
        return f"NumericalMonoid({list(self.generators)})"

    def __eq__(self, other):
        if isinstance(other, NumericalMonoid):
            return self.generators == other.generators
        return NotImplemented

    def __hash__(self):
        return hash(self.generators)


class PuiseuxMonoid:
    """Additive submonoid of Q_+ given by finitely many positive rational generators.

    The monoid is reduced (0 is the only unit), and every element's reduced
    denominator divides the lcm of the generators' denominators.
    """

    def __init__(self, generators: Iterable[Fraction]):
        gens = sorted(set(Rat(g) for g in generators))
        if any(g == 0 for g in gens):
            raise DomainError("monoid generators must be positive")
        self.generators: tuple[Rat, ...] = tuple(gens)

    @cached_property
    def _normalization(self) -> tuple[Rat, NumericalMonoid]:
        if not self.generators:
            raise DomainError("normalization needs at least one generator")
        big = math.lcm(*(g.denominator for g in self.generators))
        ints = [int(g * big) for g in self.generators]
        common = math.gcd(*ints)
        scale = Rat(big, common)
        return scale, NumericalMonoid(i // common for i in ints)

    def normalization(self) -> tuple[Rat, NumericalMonoid]:
        """A scale r > 0 and numerical monoid N with r * S = N elementwise."""
        return self._normalization

    def scaled(self, r) -> "PuiseuxMonoid":
        """The monoid r * S for a positive rational r."""
        factor = Rat(r)
        if factor == 0:
            raise DomainError("scaling factor must be positive")
        return PuiseuxMonoid(g * factor for g in self.generators)

    def contains(self, q) -> bool:
        """Membership: is q a non-negative integer combination of the generators?"""
        value = Fraction(q)
        if value < 0:
            raise DomainError("membership queries take non-negative rationals")
        if value == 0:
            return True
        if not self.generators:
            return False
        scale, numerical = self.normalization()
        scaled = value * scale
        if scaled.denominator != 1:
            return False
        return numerical.contains(int(scaled))

    def divisors_of(self, s) -> tuple[Rat, ...]:
        """The finite sorted set {t in S : s - t in S} for a member s.

        Finiteness holds because a finitely generated reduced monoid gives
        every member only finitely many divisors.
        """
        value = Fraction(s)
        if value < 0 or not self.contains(value):
            raise DomainError(f"{s} is not a member of the monoid")
        if value == 0:
            return (Rat(0),)
        scale, numerical = self.normalization()
        n = int(value * scale)
        return tuple(Rat(Fraction(t) / scale) for t in numerical.divisors(n))

    def atoms(self) -> tuple[Rat, ...]:
        """The unique minimal generating set: members not expressible as a sum
        of two nonzero members."""
        if not self.generators:
            raise DomainError("atoms need at least one generator")
        scale, numerical = self.normalization()
        out = []
        for g in self.generators:
            n = int(g * scale)
            if len(numerical.divisors(n)) == 2:
                out.append(g)
        return tuple(out)

    def __repr__(self):
        from .textform import format_monoid

        return f"PuiseuxMonoid({format_monoid(self)!r})"

    def __eq__(self, other):
        if isinstance(other, PuiseuxMonoid):
            return self.generators == other.generators
        return NotImplemented

    def __hash__(self):
        return hash(self.generators)
