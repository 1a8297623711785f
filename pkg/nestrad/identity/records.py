import sys
from dataclasses import dataclass

if sys.version_info >= (3, 11):
    from enum import StrEnum
else:  # pragma: no cover - Python 3.10 fallback matching enum.StrEnum
    from enum import Enum

    class StrEnum(str, Enum):
        def __str__(self) -> str:
            return str(self.value)

        def __format__(self, format_spec: str) -> str:
            return str.__format__(str(self.value), format_spec)

from nestrad.algebra.element import RadicalElement, term_count
from nestrad.parser.lower import NestedClaim, QuotientClaim
from nestrad.parser.printer import print_canonical, print_claim


class Status(StrEnum):
    UNVERIFIED = "unverified"
    VERIFIED = "verified-exact"
    REFUTED = "refuted-exact"
    REFUTED_BRANCH = "refuted-branch"
    INDETERMINATE = "indeterminate"


@dataclass(frozen=True)
class QuotientPair:
    numerator: RadicalElement
    denominator: RadicalElement

    def __str__(self) -> str:
        numerator = print_canonical(self.numerator)
        return f"({numerator}) / ({print_canonical(self.denominator)})"


Claim = NestedClaim | QuotientClaim
RightHandSide = RadicalElement | NestedClaim | QuotientPair


@dataclass(frozen=True)
class IdentityRecord:
    """
    One nested radical claim `claim = rhs`. Records are immutable: verification
    returns a copy with an updated status (see `nestrad.identity.engine.verify_record`).
    """

    id: str
    claim: Claim
    rhs: RightHandSide
    source: str = ""
    status: Status = Status.UNVERIFIED
    note: str = ""

    @property
    def lhs_text(self) -> str:
        return print_claim(self.claim)

    @property
    def rhs_text(self) -> str:
        if isinstance(self.rhs, NestedClaim):
            return print_claim(self.rhs)
        return str(self.rhs)

    def __str__(self) -> str:
        return f"[{self.status}] {self.lhs_text} = {self.rhs_text}"


def side_terms(side: Claim | RightHandSide) -> int:
    """Number of monomials written on one side of a record."""
    match side:
        case NestedClaim(_, radicand):
            return term_count(radicand)
        case QuotientClaim(_, numerator, denominator):
            return term_count(numerator) + term_count(denominator)
        case QuotientPair(numerator, denominator):
            return term_count(numerator) + term_count(denominator)
        case RadicalElement():
            return term_count(side)
    raise TypeError(f"unknown side {side!r}")
