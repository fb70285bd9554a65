"""Finite-support polynomials with non-negative rational exponents.

These are the elements of the monoid algebra of Q_+ over Q: finite sums
``c_1*X^{s_1} + ... + c_n*X^{s_n}`` with rational coefficients and reduced
non-negative rational exponents ``s_1 < ... < s_n``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .errors import DomainError
from .exact import Rat, lcm_denominators
from .qpoly import QPoly


def _as_scale(r) -> Rat:
    scale = Rat(r) if not isinstance(r, Rat) else r
    if scale == 0:
        raise DomainError("exponent scaling ratio must be positive")
    return scale


class PuiseuxPoly:
    """Immutable element of Q[Q_+], stored as sorted (exponent, coefficient) terms.

    Exponents are reduced non-negative rationals, strictly increasing, and no
    coefficient is zero; the zero element has no terms.  Equality is
    structural, so canonical form makes it decidable by comparison.
    """

    __slots__ = ("terms",)

    terms: tuple[tuple[Rat, Fraction], ...]

    def __init__(self, terms: Iterable[tuple[Fraction, Fraction]] = ()):
        acc: dict[Rat, Fraction] = {}
        for exponent, coeff in terms:
            e = exponent if isinstance(exponent, Rat) else Rat(exponent)
            c = Fraction(coeff)
            if c == 0:
                continue
            total = acc.get(e, Fraction(0)) + c
            if total == 0:
                acc.pop(e, None)
            else:
                acc[e] = total
        object.__setattr__(
            self, "terms", tuple(sorted(acc.items(), key=lambda t: t[0]))
        )

    def __setattr__(self, name, value):
        raise AttributeError("PuiseuxPoly is immutable")

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls) -> "PuiseuxPoly":
        return cls()

    @classmethod
    def one(cls) -> "PuiseuxPoly":
        return cls(((Rat(0), Fraction(1)),))

    @classmethod
    def constant(cls, c) -> "PuiseuxPoly":
        return cls(((Rat(0), Fraction(c)),))

    @classmethod
    def monomial(cls, coeff, exponent) -> "PuiseuxPoly":
        return cls(((Rat(exponent), Fraction(coeff)),))

    @classmethod
    def from_qpoly(cls, h: QPoly, scale=1) -> "PuiseuxPoly":
        """The generalized polynomial h(X^s): every exponent of h times s > 0."""
        s = _as_scale(scale)
        return cls((Rat(i) * s, c) for i, c in enumerate(h.coeffs) if c)

    def to_qpoly(self) -> QPoly:
        """Reinterpret as an ordinary polynomial; requires integer exponents."""
        out: list[Fraction] = []
        for e, c in self.terms:
            if e.denominator != 1:
                raise DomainError(f"exponent {e} is not an integer")
            i = int(e)
            if i >= len(out):
                out.extend([Fraction(0)] * (i + 1 - len(out)))
            out[i] = c
        return QPoly(out)

    # -- queries ----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0] == 0)

    @property
    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def _require_nonzero(self):
        if not self.terms:
            raise DomainError("undefined for the zero element")

    @property
    def order(self) -> Rat:
        """Least exponent of a nonzero element."""
        self._require_nonzero()
        return self.terms[0][0]

    @property
    def degree(self) -> Rat:
        """Greatest exponent of a nonzero element."""
        self._require_nonzero()
        return self.terms[-1][0]

    @property
    def support(self) -> frozenset[Rat]:
        self._require_nonzero()
        return frozenset(e for e, _ in self.terms)

    @property
    def leading_coefficient(self) -> Fraction:
        self._require_nonzero()
        return self.terms[-1][1]

    def coeff(self, exponent) -> Fraction:
        e = Rat(exponent)
        for te, tc in self.terms:
            if te == e:
                return tc
        return Fraction(0)

    # -- ring structure ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, PuiseuxPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return PuiseuxPoly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return PuiseuxPoly(self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self):
        return PuiseuxPoly((e, -c) for e, c in self.terms)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[Fraction, Fraction] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = e1 + e2
                acc[e] = acc.get(e, Fraction(0)) + c1 * c2
        return PuiseuxPoly(acc.items())

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise DomainError("negative power")
        result = PuiseuxPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, PuiseuxPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == PuiseuxPoly.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.terms)

    def __repr__(self):
        from .textform import format_poly

        return f"PuiseuxPoly({format_poly(self)!r})"

    def __str__(self):
        from .textform import format_poly

        return format_poly(self)

    # -- exponent geometry --------------------------------------------------

    def is_symmetric_support(self) -> bool:
        """True when the support is invariant under s -> deg + ord - s."""
        self._require_nonzero()
        total = self.degree + self.order
        supp = self.support
        return all((total - s) in supp for s in supp)

    def substitute(self, r) -> "PuiseuxPoly":
        """Multiply every exponent by a positive rational r (coefficients fixed).

        This realizes the algebra isomorphism induced by scaling the exponent
        monoid; the inverse is substitution by 1/r.
        """
        s = _as_scale(r)
        return PuiseuxPoly((e * s, c) for e, c in self.terms)

    def clear_denominators(self) -> tuple[int, QPoly]:
        """Scale exponents by m = lcm of support denominators, landing in Q[X].

        Returns (m, g) with g an integer-exponent polynomial such that
        substituting 1/m into g recovers self.
        """
        self._require_nonzero()
        m = lcm_denominators(self.support)
        return m, self.substitute(m).to_qpoly()

    def normalized_leading(self) -> "PuiseuxPoly":
        """The associate with leading (highest-exponent) coefficient 1."""
        self._require_nonzero()
        lc = self.leading_coefficient
        if lc == 1:
            return self
        return PuiseuxPoly((e, c / lc) for e, c in self.terms)


def generalized_poly(h: QPoly, s) -> PuiseuxPoly:
    """The generalized polynomial h(X^s) for an ordinary polynomial h and s > 0."""
    return PuiseuxPoly.from_qpoly(h, s)
