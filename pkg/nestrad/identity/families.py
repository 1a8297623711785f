"""
Constructions of verified identities: powers of a denested element, the geometric
series family built on ratio -2^(1/3) and scale 9^(-1/3), and chains of equivalent
roots of one value.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from nestrad.algebra.element import (
    ONE,
    RadicalElement,
    inverse,
    linear_combination,
    mul,
    neg,
    normalize_radical,
    power,
    scale,
    sub,
)
from nestrad.algebra.monomial import UNIT, RadicalMonomial
from nestrad.algebra.numeric import approximate, sign
from nestrad.config import DEFAULT_PRECISION
from nestrad.errors import DomainError
from nestrad.identity.engine import verify_record
from nestrad.identity.records import IdentityRecord
from nestrad.parser.lower import NestedClaim

logger = logging.getLogger(__name__)

CUBE_ROOT_TWO = normalize_radical(2, 3)
NINTH_SCALE = normalize_radical(Fraction(1, 9), 3)


def make_power_identity(
    s: RadicalElement, n: int, id: str | None = None, source: str = ""
) -> IdentityRecord:
    """
    Build root(n, s^n) = s. Under an even root the principal value is |s|, so a
    negative s is replaced by -s and the record says so in its note.

    Args:
        s (RadicalElement): the denested side
        n (int): root degree >= 2
        id (str, optional): record id. Defaults to "power-<n>".
        source (str, optional): citation. Defaults to "".

    Returns:
        IdentityRecord: the verified record
    """
    if n < 2:
        raise DomainError(f"power identity needs degree >= 2, got {n}")
    rhs, note = s, ""
    if n % 2 == 0 and sign(s) < 0:
        rhs, note = neg(s), "principal root: right-hand side negated"
    record = IdentityRecord(
        id or f"power-{n}", NestedClaim(n, power(s, n)), rhs, source=source, note=note
    )
    return verify_record(record)


def _power_of_cube_root_two(k: int) -> RadicalElement:
    # 2^(k/3) = 2^(k // 3) * 2^((k % 3)/3), built without factoring 2^k
    monomial = RadicalMonomial(((2, Fraction(k % 3, 3)),)) if k % 3 else UNIT
    return RadicalElement.monomial(monomial, Fraction(2) ** (k // 3))


def _alternating_terms(exponents: range, scaled: bool) -> RadicalElement:
    # (-2)^(k/3) is read as (-1)^k 2^(k/3)
    total = linear_combination(
        ((-1) ** (k % 2), _power_of_cube_root_two(k)) for k in exponents
    )
    return mul(total, NINTH_SCALE) if scaled else total


def _family_radicand(factor: Fraction, scaled: bool) -> RadicalElement:
    factor = factor if scaled else factor * 9
    return scale(sub(CUBE_ROOT_TWO, ONE), factor)


def geom_ascending(m: int, scaled: bool = True) -> IdentityRecord:
    """
    cbrt((1/27)(1 - (-2)^m)^3 (2^(1/3) - 1)) = sum_{k=0}^{3m-1} (-2)^(k/3) / 9^(1/3).
    m = 1 is the classical three term identity.
    """
    if m < 1:
        raise DomainError(f"family index must be at least 1, got {m}")
    factor = Fraction((1 - (-2) ** m) ** 3, 27)
    record = IdentityRecord(
        f"geom-asc-{m}",
        NestedClaim(3, _family_radicand(factor, scaled)),
        _alternating_terms(range(0, 3 * m), scaled),
        source="geometric series, ascending exponents",
    )
    return verify_record(record)


def geom_descending(m: int, scaled: bool = True) -> IdentityRecord:
    """
    cbrt((2^m + (-1)^(m+1))^3 / (27 * 2^(3m-1)) (2^(1/3) - 1))
        = sum_{k=-(3m-1)}^{0} (-2)^(k/3) / 9^(1/3).
    With scaled=False the 9^(-1/3) factor is dropped (m = 2 gives radicand
    (9/32)(2^(1/3) - 1)).
    """
    if m < 1:
        raise DomainError(f"family index must be at least 1, got {m}")
    factor = Fraction((2**m + (-1) ** (m + 1)) ** 3, 27 * 2 ** (3 * m - 1))
    record = IdentityRecord(
        f"geom-desc-{m}",
        NestedClaim(3, _family_radicand(factor, scaled)),
        _alternating_terms(range(-(3 * m - 1), 1), scaled),
        source="geometric series, descending exponents",
    )
    return verify_record(record)


def geom_limit_value() -> RadicalElement:
    """S = 9^(-1/3) / (1 + 2^(-1/3)), the sum of the descending series."""
    return mul(NINTH_SCALE, inverse(ONE + normalize_radical(Fraction(1, 2), 3)))


def geom_limit() -> IdentityRecord:
    """cbrt((2/27)(2^(1/3) - 1)) = S."""
    record = IdentityRecord(
        "geom-limit",
        NestedClaim(3, _family_radicand(Fraction(2, 27), True)),
        geom_limit_value(),
        source="geometric series, limit of descending exponents",
    )
    return verify_record(record)


@dataclass(frozen=True)
class PartialSum:
    m: int
    exact_remainder: bool
    agreement_bits: float


def geom_partial_sums(
    m_values: range | list[int], precision_bits: int = DEFAULT_PRECISION
) -> list[PartialSum]:
    """
    Compare the descending partial sums with their limit S. The remainder is exactly
    -(-1/2)^m * S, so partial sum m agrees with S to about m bits.
    """
    limit = geom_limit_value()
    limit_size = abs(approximate(limit, precision_bits))
    sums = []
    for m in m_values:
        partial = geom_descending(m).rhs
        assert isinstance(partial, RadicalElement)
        remainder = sub(partial, limit)
        exact = remainder == scale(limit, -Fraction(-1, 2) ** m)
        gap = abs(approximate(remainder, precision_bits))
        bits = math.inf if gap == 0 else float(mpmath.log(limit_size / gap, 2))
        logger.debug(f"Partial sum {m}: remainder exact={exact}, {bits:.1f} bits")
        sums.append(PartialSum(m, exact, bits))
    return sums


def equivalence_chain(s: RadicalElement, degrees: list[int]) -> list[IdentityRecord]:
    """
    One record root(n, s^n) = s per degree. Any two records of the chain give a cross
    root identity (see `cross_identity`).
    """
    if not degrees:
        raise DomainError("equivalence chain needs at least one degree")
    records = []
    for n in degrees:
        if n < 1:
            raise DomainError(f"root degree must be at least 1, got {n}")
        if n == 1:
            record = IdentityRecord("chain-1", NestedClaim(1, s), s, source="plain value")
            records.append(verify_record(record))
        else:
            records.append(make_power_identity(s, n, id=f"chain-{n}"))
    return records


def cross_identity(first: IdentityRecord, second: IdentityRecord) -> IdentityRecord:
    """root(n1, r1) = root(n2, r2) from two records of a chain."""
    assert isinstance(first.claim, NestedClaim) and isinstance(second.claim, NestedClaim)
    record = IdentityRecord(
        f"{first.id}={second.id}",
        first.claim,
        second.claim,
        source="equivalent roots",
    )
    return verify_record(record)
