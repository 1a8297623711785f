"""
Bounded denesting: search the sparse elements s of a field with root(n, r) = s.
"""

import logging
from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from itertools import combinations, product
from math import comb

from nestrad.algebra.element import FieldSignature, RadicalElement, power
from nestrad.algebra.monomial import RadicalMonomial
from nestrad.algebra.numeric import approximate, sign
from nestrad.config import MAX_CANDIDATES
from nestrad.discovery.domain import SearchDomain
from nestrad.discovery.parallel import parallel_map
from nestrad.errors import DomainError, ResourceError

logger = logging.getLogger(__name__)

MAX_SUPPORT = 4
PREFILTER_TOLERANCE = 1e-9


@dataclass(frozen=True)
class _DenestJob:
    radicand: RadicalElement
    n: int
    basis: tuple[RadicalMonomial, ...]
    approximations: tuple[float, ...]
    target: float
    coefficients: tuple[Fraction, ...]
    prefilter: bool


def candidate_count(dimension: int, support_size: int, values: int) -> int:
    """Elements with 1..support_size nonzero coefficients on `dimension` slots."""
    return sum(comb(dimension, k) * values**k for k in range(1, support_size + 1))


def _plausible(
    job: _DenestJob, supports: Sequence[int], coefficients: Sequence[Fraction]
) -> bool:
    value = sum(float(c) * job.approximations[i] for i, c in zip(supports, coefficients))
    if job.n % 2 == 0 and value < -PREFILTER_TOLERANCE:
        return False
    powered = value**job.n
    tolerance = PREFILTER_TOLERANCE * max(1.0, abs(job.target), abs(powered))
    return abs(powered - job.target) <= tolerance


def _scan_supports(
    job: _DenestJob, supports: Sequence[tuple[int, ...]]
) -> list[RadicalElement]:
    found = []
    for support in supports:
        for coefficients in product(job.coefficients, repeat=len(support)):
            if job.prefilter and not _plausible(job, support, coefficients):
                continue
            s = RadicalElement.from_mapping(
                {job.basis[i]: c for i, c in zip(support, coefficients)}
            )
            if power(s, job.n) != job.radicand:
                continue
            if job.n % 2 == 0 and sign(s) < 0:
                continue
            found.append(s)
    return found


def denest_scan(
    r: RadicalElement,
    n: int,
    support_size: int,
    d: SearchDomain,
    signature: FieldSignature | None = None,
    extra: Mapping[int, int] | None = None,
    ceiling: int = MAX_CANDIDATES,
    prefilter: bool = True,
    workers: int = 1,
) -> list[RadicalElement]:
    """
    Enumerate elements s with at most `support_size` nonzero coefficients from d on the
    monomial basis of a field signature and keep those with s^n = r (and s >= 0 for
    even n, the principal root).

    Args:
        r (RadicalElement): the radicand
        n (int): root degree, >= 2
        support_size (int): largest number of terms of s, at most 4
        d (SearchDomain): coefficient domain
        signature (FieldSignature, optional): field to search. Defaults to the
            signature of r.
        extra (Mapping[int, int], optional): prime -> degree pairs added to the
            signature. Defaults to None.
        ceiling (int, optional): largest number of candidates. Defaults to MAX_CANDIDATES.
        prefilter (bool, optional): skip candidates whose floating point n-th power is
            far from r before the exact check. Defaults to True.
        workers (int, optional): processes. Defaults to 1.

    Raises:
        ResourceError: the candidate space exceeds the ceiling

    Returns:
        list[RadicalElement]: the solutions, by support size then basis and domain order
    """
    if n < 2:
        raise DomainError(f"denesting needs degree >= 2, got {n}")
    if not 1 <= support_size <= MAX_SUPPORT:
        raise DomainError(
            f"support size must be in [1, {MAX_SUPPORT}], got {support_size}"
        )

    field_signature = signature if signature is not None else FieldSignature.of(r)
    if extra:
        field_signature = field_signature.extend(extra)
    basis = tuple(field_signature.basis())
    coefficients = d.nonzero_values()
    support_size = min(support_size, len(basis))
    total = candidate_count(len(basis), support_size, len(coefficients))
    if total > ceiling:
        raise ResourceError(f"{total} candidates exceed the search ceiling {ceiling}")
    logger.info(
        f"Denesting search over {field_signature} (dimension {len(basis)}), "
        f"{total} candidates"
    )

    job = _DenestJob(
        radicand=r,
        n=n,
        basis=basis,
        approximations=tuple(
            float(approximate(RadicalElement.monomial(m))) for m in basis
        ),
        target=float(approximate(r)),
        coefficients=coefficients,
        prefilter=prefilter,
    )
    supports = [
        support
        for k in range(1, support_size + 1)
        for support in combinations(range(len(basis)), k)
    ]
    found = parallel_map(partial(_scan_supports, job), supports, workers)
    logger.info(f"Found {len(found)} denestings")
    return found
