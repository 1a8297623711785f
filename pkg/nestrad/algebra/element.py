from __future__ import annotations

import itertools
import logging
from collections import defaultdict
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from fractions import Fraction
from math import lcm, prod

from nestrad.algebra.linalg import solve
from nestrad.algebra.monomial import UNIT, RadicalMonomial
from nestrad.algebra.numbers import factorize
from nestrad.config import MAX_DIMENSION
from nestrad.errors import DomainError, ResourceError

logger = logging.getLogger(__name__)

Scalar = int | Fraction


@dataclass(frozen=True)
class RadicalElement:
    """
    An element of Q(p1^(1/m1), ..., pk^(1/mk)): a finite sum of rational multiples of
    radical monomials.

    Terms are kept sorted by monomial and never carry a zero coefficient, so equality
    of elements is equality of their term tuples. Distinct prime-radical monomials are
    linearly independent over Q, which makes this equality test exact.
    """

    terms: tuple[tuple[RadicalMonomial, Fraction], ...] = ()

    @classmethod
    def from_mapping(cls, mapping: Mapping[RadicalMonomial, Scalar]) -> RadicalElement:
        items = [(m, Fraction(c)) for m, c in mapping.items() if c != 0]
        items.sort(key=lambda item: item[0].sort_key)
        return cls(tuple(items))

    @classmethod
    def rational(cls, value: Scalar | str) -> RadicalElement:
        value = Fraction(value)
        return cls(((UNIT, value),)) if value else cls()

    @classmethod
    def monomial(
        cls, monomial: RadicalMonomial, coefficient: Scalar = 1
    ) -> RadicalElement:
        return cls(((monomial, Fraction(coefficient)),)) if coefficient else cls()

    @property
    def mapping(self) -> dict[RadicalMonomial, Fraction]:
        return dict(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_rational(self) -> bool:
        return self.is_zero or (len(self.terms) == 1 and self.terms[0][0].is_unit)

    def rational_value(self) -> Fraction:
        if not self.is_rational:
            raise DomainError(f"{self} is not rational")
        return self.terms[0][1] if self.terms else Fraction(0)

    def coefficient(self, monomial: RadicalMonomial) -> Fraction:
        for m, c in self.terms:
            if m == monomial:
                return c
        return Fraction(0)

    def monomials(self) -> tuple[RadicalMonomial, ...]:
        return tuple(m for m, _ in self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __add__(self, other: RadicalElement | Scalar) -> RadicalElement:
        return add(self, other)

    def __radd__(self, other: Scalar) -> RadicalElement:
        return add(other, self)

    def __sub__(self, other: RadicalElement | Scalar) -> RadicalElement:
        return sub(self, other)

    def __rsub__(self, other: Scalar) -> RadicalElement:
        return sub(other, self)

    def __neg__(self) -> RadicalElement:
        return neg(self)

    def __mul__(self, other: RadicalElement | Scalar) -> RadicalElement:
        return mul(self, other)

    def __rmul__(self, other: Scalar) -> RadicalElement:
        return mul(other, self)

    def __truediv__(self, other: RadicalElement | Scalar) -> RadicalElement:
        return mul(self, inverse(coerce(other)))

    def __rtruediv__(self, other: Scalar) -> RadicalElement:
        return mul(other, inverse(self))

    def __pow__(self, n: int) -> RadicalElement:
        return power(self, n)

    def __str__(self) -> str:
        from nestrad.parser.printer import print_canonical

        return print_canonical(self)


ZERO = RadicalElement()
ONE = RadicalElement.rational(1)


def coerce(value: RadicalElement | Scalar) -> RadicalElement:
    if isinstance(value, RadicalElement):
        return value
    if isinstance(value, (int, Fraction)):
        return RadicalElement.rational(value)
    raise TypeError(f"cannot use {type(value).__name__} as a radical element")


@dataclass(frozen=True)
class FieldSignature:
    """
    The (prime, degree) pairs spanning a set of elements. Its full monomial basis has
    `dimension` = product of the degrees.
    """

    components: tuple[tuple[int, int], ...] = ()

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, int]) -> FieldSignature:
        return cls(tuple(sorted((p, m) for p, m in mapping.items() if m > 1)))

    @classmethod
    def of(cls, *elements: RadicalElement) -> FieldSignature:
        degrees: dict[int, int] = {}
        for element in elements:
            for monomial, _ in element.terms:
                for p, d in monomial.degrees().items():
                    degrees[p] = lcm(degrees.get(p, 1), d)
        return cls.from_mapping(degrees)

    @property
    def mapping(self) -> dict[int, int]:
        return dict(self.components)

    @property
    def dimension(self) -> int:
        return prod(m for _, m in self.components)

    def extend(self, other: FieldSignature | Mapping[int, int]) -> FieldSignature:
        other_map = other.mapping if isinstance(other, FieldSignature) else dict(other)
        merged = self.mapping
        for p, m in other_map.items():
            merged[p] = lcm(merged.get(p, 1), m)
        return FieldSignature.from_mapping(merged)

    def contains(self, monomial: RadicalMonomial) -> bool:
        degrees = self.mapping
        return all(
            p in degrees and degrees[p] % d == 0 for p, d in monomial.degrees().items()
        )

    def basis(self) -> list[RadicalMonomial]:
        """The full monomial basis, in canonical monomial order."""
        ranges = [
            [(p, Fraction(k, m)) for k in range(m)] for p, m in self.components
        ]
        basis = [
            RadicalMonomial(tuple((p, e) for p, e in combo if e))
            for combo in itertools.product(*ranges)
        ]
        basis.sort(key=lambda monomial: monomial.sort_key)
        return basis

    def __str__(self) -> str:
        if not self.components:
            return "Q"
        return "Q(" + ", ".join(f"{p}^(1/{m})" for p, m in self.components) + ")"


def normalize_radical(radicand: Scalar | str, degree: int) -> RadicalElement:
    """
    Rewrite the principal real root radicand^(1/degree) of a positive rational on the
    prime monomial basis, folding integer parts of the exponents into the coefficient.

    Args:
        radicand (Fraction): a positive rational
        degree (int): root degree >= 1

    Raises:
        DomainError: radicand <= 0 or degree < 1

    Returns:
        RadicalElement: a single-term element c * prod p^(f_p), 0 < f_p < 1
    """
    radicand = Fraction(radicand)
    if degree < 1:
        raise DomainError(f"root degree must be at least 1, got {degree}")
    if radicand <= 0:
        raise DomainError(f"radicand must be positive, got {radicand}")

    exponents: dict[int, Fraction] = {}
    for p, e in factorize(radicand.numerator).items():
        exponents[p] = Fraction(e, degree)
    for p, e in factorize(radicand.denominator).items():
        exponents[p] = Fraction(-e, degree)

    coefficient = Fraction(1)
    reduced = []
    for p, e in sorted(exponents.items()):
        whole = e.numerator // e.denominator
        coefficient *= Fraction(p) ** whole
        if e - whole:
            reduced.append((p, e - whole))
    return RadicalElement.monomial(RadicalMonomial(tuple(reduced)), coefficient)


def add(a: RadicalElement | Scalar, b: RadicalElement | Scalar) -> RadicalElement:
    a, b = coerce(a), coerce(b)
    if b.is_zero:
        return a
    if a.is_zero:
        return b
    acc = a.mapping
    for m, c in b.terms:
        acc[m] = acc.get(m, 0) + c
    return RadicalElement.from_mapping(acc)


def neg(a: RadicalElement | Scalar) -> RadicalElement:
    a = coerce(a)
    return RadicalElement(tuple((m, -c) for m, c in a.terms))


def sub(a: RadicalElement | Scalar, b: RadicalElement | Scalar) -> RadicalElement:
    return add(a, neg(b))


def scale(a: RadicalElement, factor: Scalar) -> RadicalElement:
    factor = Fraction(factor)
    if not factor:
        return ZERO
    return RadicalElement(tuple((m, c * factor) for m, c in a.terms))


def mul(a: RadicalElement | Scalar, b: RadicalElement | Scalar) -> RadicalElement:
    """
    Distributive product. Per-prime exponents add; an exponent sum reaching 1
    multiplies the coefficient by that prime.
    """
    a, b = coerce(a), coerce(b)
    if a.is_zero or b.is_zero:
        return ZERO
    if a.is_rational:
        return scale(b, a.terms[0][1])
    if b.is_rational:
        return scale(a, b.terms[0][1])

    acc: dict[RadicalMonomial, Fraction] = defaultdict(Fraction)
    for ma, ca in a.terms:
        for mb, cb in b.terms:
            carry, m = ma.times(mb)
            acc[m] += ca * cb * carry
    return RadicalElement.from_mapping(acc)


def power(a: RadicalElement | Scalar, n: int) -> RadicalElement:
    """
    Exact n-th power by repeated squaring. Negative exponents go through `inverse`.

    Raises:
        ZeroDivisionError: a is zero and n < 0
    """
    a = coerce(a)
    if n < 0:
        return power(inverse(a), -n)
    result = ONE
    base = a
    while n:
        if n & 1:
            result = mul(result, base)
        n >>= 1
        if n:
            base = mul(base, base)
    return result


def inverse(
    a: RadicalElement | Scalar, max_dimension: int = MAX_DIMENSION
) -> RadicalElement:
    """
    Field inverse, computed by solving (multiplication by a) @ x = 1 on the full
    monomial basis of the signature of a.

    Raises:
        ZeroDivisionError: a is zero
        ResourceError: the signature dimension exceeds max_dimension

    Returns:
        RadicalElement: b with a * b == 1
    """
    a = coerce(a)
    if a.is_zero:
        raise ZeroDivisionError("inverse of zero radical element")
    if len(a.terms) == 1:
        monomial, c = a.terms[0]
        carry, inv = monomial.inverse()
        return RadicalElement.monomial(inv, carry / c)

    signature = FieldSignature.of(a)
    dimension = signature.dimension
    if dimension > max_dimension:
        raise ResourceError(
            f"inverse needs dimension {dimension} > bound {max_dimension} for {signature}"
        )
    basis = signature.basis()
    index = {m: i for i, m in enumerate(basis)}

    # column j holds the coordinates of a * basis[j]
    matrix = [[Fraction(0)] * dimension for _ in range(dimension)]
    for j, b in enumerate(basis):
        for m, c in a.terms:
            carry, product = m.times(b)
            matrix[index[product]][j] += c * carry
    unit = [Fraction(0)] * dimension
    unit[index[UNIT]] = Fraction(1)

    logger.debug(f"Inverting element with {len(a)} terms in dimension {dimension}")
    solution = solve(matrix, unit)
    return RadicalElement.from_mapping(dict(zip(basis, solution)))


def term_count(a: RadicalElement) -> int:
    return len(a.terms)


def linear_combination(items: Iterable[tuple[Scalar, RadicalElement]]) -> RadicalElement:
    acc: dict[RadicalMonomial, Fraction] = defaultdict(Fraction)
    for factor, element in items:
        for m, c in element.terms:
            acc[m] += c * factor
    return RadicalElement.from_mapping(acc)
