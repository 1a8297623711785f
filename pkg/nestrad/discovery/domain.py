from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import product

from nestrad.errors import DomainError


def height(value: Fraction) -> int:
    return max(abs(value.numerator), value.denominator)


@dataclass(frozen=True)
class SearchDomain:
    """
    A finite set of rational coefficients: the integers in [-R, R], the grid
    {p/q : |p| <= P, 1 <= q <= Q}, or with `fixed_denominator` the multiples
    {p/Q : |p| <= P}. Values are ordered by height max(|p|, q), then by value, so small
    witnesses come first.
    """

    bound: int
    max_denominator: int = 1
    fixed_denominator: bool = False

    def __post_init__(self):
        if self.bound < 0 or self.max_denominator < 1:
            raise DomainError(f"invalid search domain {self}")

    @classmethod
    def integers(cls, bound: int) -> "SearchDomain":
        return cls(bound, 1)

    @classmethod
    def rationals(cls, bound: int, max_denominator: int) -> "SearchDomain":
        return cls(bound, max_denominator)

    @classmethod
    def multiples(cls, bound: int, denominator: int) -> "SearchDomain":
        return cls(bound, denominator, fixed_denominator=True)

    @cached_property
    def _values(self) -> tuple[Fraction, ...]:
        if self.fixed_denominator:
            denominators = range(self.max_denominator, self.max_denominator + 1)
        else:
            denominators = range(1, self.max_denominator + 1)
        numerators = range(-self.bound, self.bound + 1)
        values = {Fraction(p, q) for q in denominators for p in numerators}
        return tuple(sorted(values, key=lambda v: (height(v), v)))

    def values(self) -> tuple[Fraction, ...]:
        return self._values

    def nonzero_values(self) -> tuple[Fraction, ...]:
        return tuple(v for v in self._values if v)

    def __len__(self) -> int:
        return len(self._values)

    def assignments(self, k: int) -> list[tuple[Fraction, ...]]:
        """All k-tuples of values, by their largest height then lexicographically."""
        return sorted(
            product(self._values, repeat=k),
            key=lambda t: (max((height(v) for v in t), default=0), t),
        )

    def __str__(self) -> str:
        if self.max_denominator == 1:
            return f"integers in [-{self.bound}, {self.bound}]"
        if self.fixed_denominator:
            return f"p/{self.max_denominator} with |p| <= {self.bound}"
        return f"p/q with |p| <= {self.bound}, 1 <= q <= {self.max_denominator}"
