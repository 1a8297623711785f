import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from sympy import primefactors

from nestrad.algebra.element import RadicalElement, inverse, normalize_radical, power, sub
from nestrad.algebra.numbers import is_perfect_power
from nestrad.errors import DomainError
from nestrad.identity.quotient import QuotientForm, verify_quotient
from nestrad.identity.records import Status

logger = logging.getLogger(__name__)


@dataclass
class QuotientScanResult:
    forms: list[QuotientForm] = field(default_factory=list)
    skipped: int = 0
    examined: int = 0


def admissible_bases(m: int, b_max: int) -> list[int]:
    """Bases b <= b_max that are not a perfect p-th power for any prime p dividing m."""
    primes = primefactors(m)
    return [
        b for b in range(2, b_max + 1) if not any(is_perfect_power(b, p) for p in primes)
    ]


def _ratio(u: RadicalElement, r: RadicalElement) -> Fraction | None:
    """y/x when u is a nonzero rational multiple of the surd r, else None."""
    if len(u) != 1 or u.monomials() != r.monomials():
        return None
    return u.terms[0][1] / r.terms[0][1]


def quotient_scan(n: int, m: int, b_max: int, c_max: int) -> QuotientScanResult:
    """
    Search root(n, (x + y*r) / (x - y*r)) = (z + w*r) / (z - w*r), r = root(m, b).

    For every admissible base and coprime 1 <= z, w <= c_max (w also negative for odd n,
    where the sign is not absorbed by the even power) the right-hand side is raised to
    the n-th power q = A / B; the left-hand side exists iff u = (A - B) / (A + B) is a
    rational multiple y/x of r.

    Args:
        n (int): outer root degree, >= 2
        m (int): inner root degree, >= 2
        b_max (int): largest base
        c_max (int): largest |z|, |w|

    Returns:
        QuotientScanResult: verified forms ordered by (b, z, w), the number of
            candidates examined, and the number skipped on degenerate denominators
    """
    if n < 2 or m < 2:
        raise DomainError(f"quotient scan needs n, m >= 2, got n={n}, m={m}")
    result = QuotientScanResult()
    bases = admissible_bases(m, b_max)
    logger.info(f"Quotient scan n={n}, m={m} over bases {bases}")
    signs = (1,) if n % 2 == 0 else (1, -1)
    for b in bases:
        r = normalize_radical(b, m)
        for z in range(1, c_max + 1):
            for w in range(1, c_max + 1):
                if gcd(z, w) != 1:
                    continue
                for s in signs:
                    result.examined += 1
                    form = _complete(n, m, b, r, Fraction(z), Fraction(s * w), result)
                    if form is not None:
                        result.forms.append(form)
    logger.info(
        f"Examined {result.examined} candidates, skipped {result.skipped} degenerate, "
        f"found {len(result.forms)}"
    )
    return result


def _complete(
    n: int,
    m: int,
    b: int,
    r: RadicalElement,
    z: Fraction,
    w: Fraction,
    tally: QuotientScanResult,
) -> QuotientForm | None:
    top, bottom = z + w * r, z - w * r
    if bottom.is_zero:
        tally.skipped += 1
        return None
    a, c = power(top, n), power(bottom, n)
    total = a + c
    if total.is_zero:
        tally.skipped += 1
        return None
    ratio = _ratio(sub(a, c) * inverse(total), r)
    if ratio is None:
        return None
    form = QuotientForm(
        Fraction(ratio.denominator), Fraction(ratio.numerator), z, w, b, m, n
    )
    status = verify_quotient(form)
    if status != Status.VERIFIED:
        logger.warning(f"Candidate {form} did not verify: {status}")
        return None
    logger.debug(f"Found {form}")
    return form
