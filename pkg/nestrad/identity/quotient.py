import logging
from dataclasses import dataclass
from fractions import Fraction

from nestrad.algebra.element import RadicalElement, neg, normalize_radical
from nestrad.algebra.numeric import sign
from nestrad.errors import DomainError
from nestrad.identity.engine import verify_record
from nestrad.identity.records import IdentityRecord, QuotientPair, Status
from nestrad.parser.lower import QuotientClaim

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class QuotientForm:
    """
    root(n, (x + y*r) / (x - y*r)) = (z + w*r) / (z - w*r) with r = root(m, b).
    """

    x: Fraction
    y: Fraction
    z: Fraction
    w: Fraction
    b: int
    m: int
    n: int

    def surd(self) -> RadicalElement:
        return normalize_radical(self.b, self.m)

    def __str__(self) -> str:
        r = f"root({self.m},{self.b})"
        return (
            f"root({self.n}, ({self.x} + {self.y}*{r}) / ({self.x} - {self.y}*{r}))"
            f" = ({self.z} + {self.w}*{r}) / ({self.z} - {self.w}*{r})"
        )


def quotient_record(q: QuotientForm, id: str | None = None) -> IdentityRecord:
    """
    The unverified record of a quotient form. For even n a negative right-hand side is
    replaced by its absolute value -P / Q and the record notes the fold.

    Raises:
        DomainError: one of the denominators vanishes
    """
    if q.n < 2 or q.m < 2 or q.b < 2:
        raise DomainError(f"quotient form needs n, m, b >= 2: {q}")
    r = q.surd()
    numerator, denominator = q.x + q.y * r, q.x - q.y * r
    top, bottom = q.z + q.w * r, q.z - q.w * r
    if denominator.is_zero or bottom.is_zero:
        raise DomainError(f"degenerate denominator in {q}")
    note = ""
    if q.n % 2 == 0 and sign(top) * sign(bottom) < 0:
        top, note = neg(top), "sign-folded"
        logger.debug(f"Folded the sign of the right-hand side of {q}")
    return IdentityRecord(
        id or f"quotient-{q.b}-{q.m}-{q.n}",
        QuotientClaim(q.n, numerator, denominator),
        QuotientPair(top, bottom),
        source="quotient form",
        note=note,
    )


def verify_quotient(q: QuotientForm) -> Status:
    record = verify_record(quotient_record(q))
    return record.status
