from fractions import Fraction
from functools import lru_cache

from sympy import factorint, integer_nthroot

from nestrad.config import MAX_RADICAND
from nestrad.errors import DomainError, ResourceError

# Rational coefficients are plain fractions: always reduced, denominator >= 1, 0 is 0/1.
Rational = Fraction


def to_rational(value: int | str | Fraction) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


@lru_cache(maxsize=4096)
def factorize(n: int) -> dict[int, int]:
    """
    Factor a positive integer into primes.

    Args:
        n (int): the integer to factor, 1 <= n <= MAX_RADICAND

    Raises:
        DomainError: n < 1
        ResourceError: n is above MAX_RADICAND

    Returns:
        dict[int, int]: prime -> multiplicity, empty for 1
    """
    if n < 1:
        raise DomainError(f"cannot factor non-positive integer {n}")
    if n > MAX_RADICAND:
        raise ResourceError(f"integer {n} exceeds the factorization bound 2^64")
    return {int(p): int(e) for p, e in factorint(n).items()}


def is_perfect_power(n: int, k: int) -> bool:
    """True if n is the k-th power of an integer."""
    return bool(integer_nthroot(n, k)[1])


def is_power_free(n: int, k: int) -> bool:
    """True if no prime divides n to the k-th power."""
    return all(e < k for e in factorize(n).values())
