import logging
from collections.abc import Sequence
from dataclasses import dataclass

from nestrad.algebra.element import RadicalElement, mul, power, term_count
from nestrad.errors import DomainError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PowerHit:
    n: int
    radicand: RadicalElement
    term_count: int


@dataclass(frozen=True)
class PowerScanResult:
    hits: list[PowerHit]
    count_note: str = ""

    @property
    def degrees(self) -> list[int]:
        return [hit.n for hit in self.hits]


def power_scan(
    s: RadicalElement,
    n_min: int,
    n_max: int,
    max_terms: int,
    expected: Sequence[int] = (),
) -> PowerScanResult:
    """
    Raise s to every power in [n_min, n_max] and keep those whose canonical form has at
    most `max_terms` monomials. Each hit is the identity root(n, s^n) = s up to the
    branch sign.

    Args:
        s (RadicalElement): the denested element
        n_min (int): smallest degree, >= 2
        n_max (int): largest degree
        max_terms (int): term bound on the radicand
        expected (Sequence[int], optional): degrees reported elsewhere for this scan.
            When the hits differ from them the result carries a note. Defaults to ().

    Returns:
        PowerScanResult: hits ascending by n
    """
    if not 2 <= n_min <= n_max:
        raise DomainError(f"power scan needs 2 <= n_min <= n_max, got [{n_min}, {n_max}]")
    hits = []
    current = power(s, n_min)
    for n in range(n_min, n_max + 1):
        if n > n_min:
            current = mul(current, s)
        terms = term_count(current)
        if terms <= max_terms:
            logger.debug(f"Power {n} has {terms} terms")
            hits.append(PowerHit(n, current, terms))

    note = ""
    degrees = {hit.n for hit in hits}
    if expected and degrees != set(expected):
        note = (
            f"{len(degrees)} degrees qualify where {len(expected)} were expected: "
            f"extra {sorted(degrees - set(expected))}, "
            f"missing {sorted(set(expected) - degrees)}"
        )
        logger.info(note)
    return PowerScanResult(hits, note)
