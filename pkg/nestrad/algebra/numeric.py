"""
Certified numeric evaluation of radical elements.

Each monomial N^(1/D) is bracketed with exact integer roots:
r = floor((N * 2^(k*D))^(1/D)) gives r / 2^k <= N^(1/D) < (r + 1) / 2^k.
Coefficients are exact fractions, so the resulting interval is rigorous and
deterministic.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import mpmath
from sympy import integer_nthroot

from nestrad.algebra.element import RadicalElement
from nestrad.algebra.monomial import RadicalMonomial
from nestrad.config import DEFAULT_PRECISION, MAX_PRECISION, SIGN_START_PRECISION
from nestrad.errors import DomainError, ResourceError

MIN_PRECISION = 32


@dataclass(frozen=True)
class NumericValue:
    midpoint: Fraction
    radius: Fraction
    precision_bits: int

    @property
    def lower(self) -> Fraction:
        return self.midpoint - self.radius

    @property
    def upper(self) -> Fraction:
        return self.midpoint + self.radius

    def contains(self, value: Fraction) -> bool:
        return self.lower <= value <= self.upper

    def intersects(self, other: "NumericValue") -> bool:
        return self.lower <= other.upper and other.lower <= self.upper

    def excludes_zero(self) -> bool:
        return abs(self.midpoint) > self.radius

    def to_mpf(self) -> mpmath.mpf:
        with mpmath.workprec(self.precision_bits + 8):
            return mpmath.mpf(self.midpoint.numerator) / self.midpoint.denominator

    def digits(self) -> int:
        return max(int(self.precision_bits * 0.30103) - 1, 1)

    def __str__(self) -> str:
        with mpmath.workprec(self.precision_bits + 8):
            mid = mpmath.mpf(self.midpoint.numerator) / self.midpoint.denominator
            rad = mpmath.mpf(self.radius.numerator) / self.radius.denominator
            return f"{mpmath.nstr(mid, self.digits())} ± {mpmath.nstr(rad, 3)}"


@lru_cache(maxsize=16384)
def _monomial_floor(monomial: RadicalMonomial, bits: int) -> tuple[int, bool]:
    n, d = monomial.radical_form()
    root, exact = integer_nthroot(n << (bits * d), d)
    return int(root), bool(exact)


def eval_numeric(
    a: RadicalElement, precision_bits: int = DEFAULT_PRECISION
) -> NumericValue:
    """
    Evaluate an element with a certified error radius.

    Args:
        a (RadicalElement): the element
        precision_bits (int, optional): target precision, at least 32.
            Defaults to DEFAULT_PRECISION.

    Returns:
        NumericValue: midpoint v and radius eps with |v - a| <= eps and
            eps <= 2^(-precision_bits + 4) * max(1, |v|)
    """
    if precision_bits < MIN_PRECISION:
        raise DomainError(f"precision must be at least {MIN_PRECISION} bits")
    if a.is_zero:
        return NumericValue(Fraction(0), Fraction(0), precision_bits)

    total = sum(abs(c) for _, c in a.terms)
    bits = precision_bits + (total.numerator // total.denominator + 1).bit_length() + 1
    scale = 1 << bits

    lower = Fraction(0)
    upper = Fraction(0)
    for monomial, c in a.terms:
        if monomial.is_unit:
            lower += c
            upper += c
            continue
        root, exact = _monomial_floor(monomial, bits)
        low = Fraction(root, scale)
        high = low if exact else Fraction(root + 1, scale)
        if c > 0:
            lower += c * low
            upper += c * high
        else:
            lower += c * high
            upper += c * low

    return NumericValue((lower + upper) / 2, (upper - lower) / 2, precision_bits)


def sign(
    a: RadicalElement,
    precision_bits: int = SIGN_START_PRECISION,
    max_precision: int = MAX_PRECISION,
) -> int:
    """
    Exact sign of an element: 0 iff a is the zero element, otherwise the precision is
    doubled until the certified interval excludes 0.

    Raises:
        ResourceError: the interval still contains 0 at max_precision
    """
    if a.is_zero:
        return 0
    if a.is_rational:
        return 1 if a.rational_value() > 0 else -1

    precision = max(precision_bits, MIN_PRECISION)
    while precision <= max_precision:
        value = eval_numeric(a, precision)
        if value.excludes_zero():
            return 1 if value.midpoint > 0 else -1
        precision *= 2
    raise ResourceError(f"sign undecided at {max_precision} bits")


def approximate(a: RadicalElement, precision_bits: int = 53) -> mpmath.mpf:
    """Uncertified mpmath approximation, for prefilters and display."""
    with mpmath.workprec(precision_bits + 16):
        total = mpmath.mpf(0)
        for monomial, c in a.terms:
            term = mpmath.mpf(c.numerator) / c.denominator
            for p, e in monomial.exponents:
                term *= mpmath.root(p, e.denominator) ** e.numerator
            total += term
        return +total
