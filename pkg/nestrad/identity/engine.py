import logging
from dataclasses import dataclass, replace
from fractions import Fraction
from math import lcm

from nestrad.algebra.element import RadicalElement, mul, power
from nestrad.algebra.numeric import NumericValue, eval_numeric, sign
from nestrad.config import DEFAULT_PRECISION
from nestrad.errors import DomainError, ResourceError, StateError
from nestrad.identity.records import (
    IdentityRecord,
    QuotientPair,
    RightHandSide,
    Status,
    side_terms,
)
from nestrad.parser.lower import NestedClaim, QuotientClaim

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Interestingness:
    lhs_terms: int
    rhs_terms: int
    interesting: bool


def verify(rec: IdentityRecord) -> Status:
    return verify_record(rec).status


def verify_record(rec: IdentityRecord) -> IdentityRecord:
    """
    Decide a record exactly.

    For a nested claim root(n, r) = s the exact equation s^n = r is checked first; if it
    fails the record is refuted-exact. For even n the principal root also needs s >= 0
    and r >= 0, otherwise the record is refuted-branch. Odd real roots are unique, so
    the equation alone suffices. Quotient claims are cross-multiplied.

    Args:
        rec (IdentityRecord): the record to verify

    Returns:
        IdentityRecord: a copy of the record with its status (and a note) set. Dimension
            or precision limits give status indeterminate with the reason as note.
    """
    try:
        status, note = _decide(rec.claim, rec.rhs)
    except (ResourceError, ZeroDivisionError, DomainError) as e:
        logger.warning(f"Record {rec.id} is indeterminate: {e}")
        return replace(rec, status=Status.INDETERMINATE, note=str(e))
    logger.debug(f"Record {rec.id}: {status}")
    return replace(rec, status=status, note=note or rec.note)


def _rhs_sign(rhs: RadicalElement | QuotientPair) -> int:
    if isinstance(rhs, QuotientPair):
        return sign(rhs.numerator) * sign(rhs.denominator)
    return sign(rhs)


def _decide(claim: NestedClaim | QuotientClaim, rhs: RightHandSide) -> tuple[Status, str]:
    if isinstance(rhs, NestedClaim):
        lhs = claim.flatten() if isinstance(claim, QuotientClaim) else claim
        return _decide_cross(lhs, rhs)

    n = claim.degree
    if isinstance(claim, QuotientClaim):
        if claim.denominator.is_zero:
            raise DomainError("degenerate denominator on the left-hand side")
        numerator, denominator = claim.numerator, claim.denominator
    else:
        numerator, denominator = claim.radicand, RadicalElement.rational(1)

    # root(n, N / D) = P / Q  <=>  P^n * D = N * Q^n
    if isinstance(rhs, QuotientPair):
        if rhs.denominator.is_zero:
            raise DomainError("degenerate denominator on the right-hand side")
        left = mul(power(rhs.numerator, n), denominator)
        right = mul(numerator, power(rhs.denominator, n))
    else:
        left = mul(power(rhs, n), denominator)
        right = numerator
    if left != right:
        return Status.REFUTED, ""

    if n % 2 == 0:
        if sign(numerator) * sign(denominator) < 0:
            return Status.REFUTED_BRANCH, "even root of a negative radicand"
        if _rhs_sign(rhs) < 0:
            return Status.REFUTED_BRANCH, "right-hand side is negative under an even root"
    return Status.VERIFIED, ""


def _decide_cross(first: NestedClaim, second: NestedClaim) -> tuple[Status, str]:
    """root(n1, r1) = root(n2, r2) iff r1^(L/n1) = r2^(L/n2) and the signs agree."""
    n1, r1 = first.degree, first.radicand
    n2, r2 = second.degree, second.radicand
    s1, s2 = sign(r1), sign(r2)
    if (n1 % 2 == 0 and s1 < 0) or (n2 % 2 == 0 and s2 < 0):
        return Status.REFUTED_BRANCH, "even root of a negative radicand"
    common = lcm(n1, n2)
    if power(r1, common // n1) != power(r2, common // n2):
        return Status.REFUTED, ""
    if common % 2 == 0 and s1 != s2:
        return Status.REFUTED_BRANCH, "roots have opposite signs"
    return Status.VERIFIED, ""


def interestingness(rec: IdentityRecord) -> Interestingness:
    """
    Term counts on both sides; a record is interesting when its radicand has strictly
    fewer terms than the denested side.

    Raises:
        StateError: the record is not verified-exact
    """
    if rec.status != Status.VERIFIED:
        raise StateError(f"record {rec.id} is {rec.status}, not verified-exact")
    lhs_terms = side_terms(rec.claim)
    rhs_terms = side_terms(rec.rhs)
    return Interestingness(lhs_terms, rhs_terms, lhs_terms < rhs_terms)


Interval = tuple[Fraction, Fraction]


def _interval(value: NumericValue) -> Interval:
    return value.lower, value.upper


def _interval_mul(a: Interval, b: Interval) -> Interval:
    products = [a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]]
    return min(products), max(products)


def _interval_pow(a: Interval, n: int) -> Interval:
    low, high = a
    if n % 2 == 1 or low >= 0:
        return low**n, high**n
    if high <= 0:
        return high**n, low**n
    return Fraction(0), max(low**n, high**n)


def _overlap(a: Interval, b: Interval) -> bool:
    return a[0] <= b[1] and b[0] <= a[1]


def numeric_agreement(
    rec: IdentityRecord, precision_bits: int = DEFAULT_PRECISION
) -> bool:
    """
    Numeric cross-check of a record in the power domain: the certified enclosures of
    both sides of the cross-multiplied equation must overlap.
    """
    claim, rhs = rec.claim, rec.rhs
    if isinstance(rhs, NestedClaim):
        first = claim.flatten() if isinstance(claim, QuotientClaim) else claim
        common = lcm(first.degree, rhs.degree)
        first_value = _interval(eval_numeric(first.radicand, precision_bits))
        second_value = _interval(eval_numeric(rhs.radicand, precision_bits))
        left = _interval_pow(first_value, common // first.degree)
        right = _interval_pow(second_value, common // rhs.degree)
        return _overlap(left, right)

    n = claim.degree
    if isinstance(claim, QuotientClaim):
        numerator = _interval(eval_numeric(claim.numerator, precision_bits))
        denominator = _interval(eval_numeric(claim.denominator, precision_bits))
    else:
        numerator = _interval(eval_numeric(claim.radicand, precision_bits))
        denominator = (Fraction(1), Fraction(1))

    if isinstance(rhs, QuotientPair):
        rhs_top, rhs_bottom = rhs.numerator, rhs.denominator
    else:
        rhs_top, rhs_bottom = rhs, RadicalElement.rational(1)
    top = _interval_pow(_interval(eval_numeric(rhs_top, precision_bits)), n)
    bottom = _interval_pow(_interval(eval_numeric(rhs_bottom, precision_bits)), n)
    return _overlap(_interval_mul(top, denominator), _interval_mul(numerator, bottom))
