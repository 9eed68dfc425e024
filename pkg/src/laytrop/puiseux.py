"""Finite-support Puiseux series over the rationals, and exploded scalars.

A series is a finite sum of terms c * t^e with rational coefficient c and
rational exponent e.  The order valuation ``val`` is the negative of the
lowest exponent, and ``leading`` is the coefficient of that lowest term.
Exploded scalars pair a value with the leading coefficient ("sort"); a sort
of 0 marks a corner ghost produced by leading-term cancellation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Tuple

from .errors import DomainError

Term = Tuple[Fraction, Fraction]  # (exponent, coefficient)


@dataclass(frozen=True)
class PuiseuxSeries:
    """Immutable canonical form: strictly increasing exponents, no zero coefficients."""

    terms: Tuple[Term, ...]

    # -- construction -------------------------------------------------------

    @classmethod
    def from_terms(cls, pairs: Iterable[Tuple[Fraction, Fraction]]) -> "PuiseuxSeries":
        acc: dict = {}
        for exponent, coefficient in pairs:
            e = Fraction(exponent)
            acc[e] = acc.get(e, Fraction(0)) + Fraction(coefficient)
        return cls(tuple((e, c) for e, c in sorted(acc.items()) if c != 0))

    @classmethod
    def zero(cls) -> "PuiseuxSeries":
        return cls(())

    @classmethod
    def one(cls) -> "PuiseuxSeries":
        return cls.term(1, 0)

    @classmethod
    def term(cls, coefficient, exponent) -> "PuiseuxSeries":
        c = Fraction(coefficient)
        if c == 0:
            return cls(())
        return cls(((Fraction(exponent), c),))

    @classmethod
    def constant(cls, coefficient) -> "PuiseuxSeries":
        return cls.term(coefficient, 0)

    # -- structure ------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def val(self) -> Fraction:
        """The order valuation: negative of the lowest exponent."""
        if not self.terms:
            raise DomainError("the zero series has no valuation")
        return -self.terms[0][0]

    def leading(self) -> Fraction:
        """The coefficient of the lowest-exponent term."""
        if not self.terms:
            raise DomainError("the zero series has no leading coefficient")
        return self.terms[0][1]

    def is_unit(self) -> bool:
        """Whether the valuation is 0, i.e. the lowest exponent is 0."""
        return self.val() == 0

    # -- field arithmetic -----------------------------------------------------

    def __add__(self, other: "PuiseuxSeries") -> "PuiseuxSeries":
        return PuiseuxSeries.from_terms((e, c) for e, c in self.terms + other.terms)

    def __neg__(self) -> "PuiseuxSeries":
        return PuiseuxSeries(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: "PuiseuxSeries") -> "PuiseuxSeries":
        return self + (-other)

    def __mul__(self, other: "PuiseuxSeries") -> "PuiseuxSeries":
        acc: dict = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = e1 + e2
                acc[e] = acc.get(e, Fraction(0)) + c1 * c2
        return PuiseuxSeries(tuple((e, c) for e, c in sorted(acc.items()) if c != 0))

    def __pow__(self, m: int) -> "PuiseuxSeries":
        if not isinstance(m, int) or m < 0:
            raise DomainError(f"series exponent {m!r} must be a non-negative integer")
        out = PuiseuxSeries.one()
        for _ in range(m):
            out = out * self
        return out

    def scale(self, coefficient) -> "PuiseuxSeries":
        c = Fraction(coefficient)
        if c == 0:
            return PuiseuxSeries(())
        return PuiseuxSeries(tuple((e, c * k) for e, k in self.terms))

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(_format_term(c, e) for e, c in self.terms)


def _format_term(coefficient: Fraction, exponent: Fraction) -> str:
    c = str(coefficient) if coefficient >= 0 else f"({coefficient})"
    if exponent == 0:
        return c
    t = "t" if exponent == 1 else f"t^({exponent})"
    if coefficient == 1:
        return t
    return f"{c}*{t}"


# ---------------------------------------------------------------------------
# Univariate polynomials with series coefficients


@dataclass(frozen=True)
class PuiseuxPolynomial:
    """A polynomial in one variable over the series field, in canonical form.

    Stored as (degree, coefficient) pairs with strictly increasing degrees
    and nonzero coefficients; the empty tuple is the zero polynomial.
    Ordinary ring arithmetic (with subtraction) applies.
    """

    coeffs: Tuple[Tuple[int, PuiseuxSeries], ...]

    @classmethod
    def from_coeffs(cls, mapping: Mapping[int, PuiseuxSeries]) -> "PuiseuxPolynomial":
        items = []
        for degree, series in mapping.items():
            if not isinstance(degree, int) or degree < 0:
                raise DomainError(f"degree {degree!r} must be a non-negative integer")
            if not series.is_zero:
                items.append((degree, series))
        return cls(tuple(sorted(items)))

    @classmethod
    def zero(cls) -> "PuiseuxPolynomial":
        return cls(())

    @classmethod
    def variable(cls) -> "PuiseuxPolynomial":
        return cls(((1, PuiseuxSeries.one()),))

    @classmethod
    def constant(cls, series: PuiseuxSeries) -> "PuiseuxPolynomial":
        return cls.from_coeffs({0: series})

    @classmethod
    def from_roots(cls, roots: Iterable[PuiseuxSeries]) -> "PuiseuxPolynomial":
        """The monic product of (variable - r) over the given roots."""
        out = cls.constant(PuiseuxSeries.one())
        for r in roots:
            out = out * cls.from_coeffs({1: PuiseuxSeries.one(), 0: -r})
        return out

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        if not self.coeffs:
            raise DomainError("the zero polynomial has no degree")
        return self.coeffs[-1][0]

    def support(self) -> Tuple[int, ...]:
        return tuple(d for d, _ in self.coeffs)

    def coefficient(self, degree: int) -> PuiseuxSeries:
        for d, c in self.coeffs:
            if d == degree:
                return c
        return PuiseuxSeries.zero()

    def __add__(self, other: "PuiseuxPolynomial") -> "PuiseuxPolynomial":
        acc = {d: c for d, c in self.coeffs}
        for d, c in other.coeffs:
            acc[d] = acc.get(d, PuiseuxSeries.zero()) + c
        return PuiseuxPolynomial.from_coeffs(acc)

    def __neg__(self) -> "PuiseuxPolynomial":
        return PuiseuxPolynomial(tuple((d, -c) for d, c in self.coeffs))

    def __sub__(self, other: "PuiseuxPolynomial") -> "PuiseuxPolynomial":
        return self + (-other)

    def __mul__(self, other: "PuiseuxPolynomial") -> "PuiseuxPolynomial":
        acc: dict = {}
        for d1, c1 in self.coeffs:
            for d2, c2 in other.coeffs:
                d = d1 + d2
                acc[d] = acc.get(d, PuiseuxSeries.zero()) + c1 * c2
        return PuiseuxPolynomial.from_coeffs(acc)

    def __pow__(self, m: int) -> "PuiseuxPolynomial":
        if not isinstance(m, int) or m < 0:
            raise DomainError(f"polynomial exponent {m!r} must be a non-negative integer")
        out = PuiseuxPolynomial.constant(PuiseuxSeries.one())
        for _ in range(m):
            out = out * self
        return out

    def __call__(self, x: PuiseuxSeries) -> PuiseuxSeries:
        total = PuiseuxSeries.zero()
        for d, c in self.coeffs:
            total = total + c * (x ** d)
        return total

    def __str__(self):
        if not self.coeffs:
            return "0"
        pieces = []
        for d, series in sorted(self.coeffs, reverse=True):
            for e, c in series.terms:
                pieces.append(_format_poly_term(c, e, d))
        return " + ".join(pieces)


def _format_poly_term(coefficient: Fraction, exponent: Fraction, degree: int) -> str:
    factors = []
    if coefficient != 1 or (exponent == 0 and degree == 0):
        factors.append(str(coefficient) if coefficient >= 0 else f"({coefficient})")
    if exponent != 0:
        factors.append("t" if exponent == 1 else f"t^({exponent})")
    if degree == 1:
        factors.append("L")
    elif degree > 1:
        factors.append(f"L^{degree}")
    return "*".join(factors)


# ---------------------------------------------------------------------------
# Exploded scalars


@dataclass(frozen=True)
class ExplodedScalar:
    """A (sort, value) pair keeping the residue-field shadow of a valuation.

    Addition keeps the larger value; on ties the sorts add classically in
    the residue field, so opposite leading coefficients cancel to sort 0.
    """

    sort: Fraction
    value: Fraction

    @classmethod
    def of(cls, sort, value) -> "ExplodedScalar":
        return cls(Fraction(sort), Fraction(value))

    @classmethod
    def one(cls) -> "ExplodedScalar":
        return cls(Fraction(1), Fraction(0))

    @property
    def is_corner_ghost(self) -> bool:
        return self.sort == 0

    def __add__(self, other: "ExplodedScalar") -> "ExplodedScalar":
        if self.value > other.value:
            return self
        if self.value < other.value:
            return other
        return ExplodedScalar(self.sort + other.sort, self.value)

    def __mul__(self, other: "ExplodedScalar") -> "ExplodedScalar":
        return ExplodedScalar(self.sort * other.sort, self.value + other.value)

    def __pow__(self, m: int) -> "ExplodedScalar":
        if not isinstance(m, int) or m < 0:
            raise DomainError(f"exploded exponent {m!r} must be a non-negative integer")
        return ExplodedScalar(self.sort ** m, self.value * m)

    def __str__(self):
        return f"({self.sort}|{self.value})"
