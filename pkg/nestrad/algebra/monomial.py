from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm, prod

from sympy import isprime

from nestrad.errors import DomainError


@dataclass(frozen=True)
class RadicalMonomial:
    """
    A product of prime bases raised to rational exponents in (0, 1).

    Exponents are stored as a tuple of (prime, exponent) pairs sorted by prime, so that
    two monomials are equal exactly when their exponent maps are equal. The empty tuple
    is the unit monomial.
    """

    exponents: tuple[tuple[int, Fraction], ...] = ()

    def __post_init__(self):
        previous = 1
        for prime, exponent in self.exponents:
            if prime <= previous:
                raise DomainError(f"monomial primes must be increasing: {self.exponents}")
            if not 0 < exponent < 1:
                raise DomainError(
                    f"monomial exponent {exponent} of {prime} not in (0, 1)"
                )
            previous = prime

    @classmethod
    def of(cls, exponents: Mapping[int, Fraction | int | str]) -> RadicalMonomial:
        """
        Build a monomial from a prime -> exponent map, checking primality.
        Zero exponents are dropped.
        """
        items = []
        for prime, exponent in sorted(exponents.items()):
            if not isprime(prime):
                raise DomainError(f"monomial base {prime} is not prime")
            exponent = Fraction(exponent)
            if exponent != 0:
                items.append((prime, exponent))
        return cls(tuple(items))

    @property
    def is_unit(self) -> bool:
        return not self.exponents

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.exponents)

    def exponent(self, prime: int) -> Fraction:
        for p, e in self.exponents:
            if p == prime:
                return e
        return Fraction(0)

    def degrees(self) -> dict[int, int]:
        """prime -> denominator of its exponent."""
        return {p: e.denominator for p, e in self.exponents}

    @property
    def sort_key(self) -> tuple:
        # graded by number of primes, then lexicographic on (prime, exponent)
        return (len(self.exponents), self.exponents)

    def radical_form(self) -> tuple[int, int]:
        """
        Returns:
            tuple[int, int]: (N, D) such that the monomial equals N^(1/D) with D the
            common denominator of the exponents.
        """
        if self.is_unit:
            return 1, 1
        d = lcm(*(e.denominator for _, e in self.exponents))
        return prod(p ** int(e * d) for p, e in self.exponents), d

    def times(self, other: RadicalMonomial) -> tuple[int, RadicalMonomial]:
        """
        Multiply two monomials.

        Returns:
            tuple[int, RadicalMonomial]: the integer carry (product of primes whose
            exponent sum reached 1) and the reduced monomial.
        """
        return _product(self, other)

    def inverse(self) -> tuple[Fraction, RadicalMonomial]:
        """
        Returns:
            tuple[Fraction, RadicalMonomial]: c, m with c * m equal to 1 / self.
        """
        if self.is_unit:
            return Fraction(1), self
        carry = Fraction(1, prod(self.primes))
        return carry, RadicalMonomial(tuple((p, 1 - e) for p, e in self.exponents))

    def __str__(self) -> str:
        if self.is_unit:
            return "1"
        return " * ".join(
            f"{p}^({e.numerator}/{e.denominator})" for p, e in self.exponents
        )


UNIT = RadicalMonomial()


@lru_cache(maxsize=65536)
def _product(a: RadicalMonomial, b: RadicalMonomial) -> tuple[int, RadicalMonomial]:
    if a.is_unit:
        return 1, b
    if b.is_unit:
        return 1, a
    exponents = dict(a.exponents)
    carry = 1
    for p, e in b.exponents:
        total = exponents.get(p, Fraction(0)) + e
        if total >= 1:
            carry *= p
            total -= 1
        if total:
            exponents[p] = total
        else:
            exponents.pop(p, None)
    return carry, RadicalMonomial(tuple(sorted(exponents.items())))
