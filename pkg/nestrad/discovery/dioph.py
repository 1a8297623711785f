import logging
from math import gcd

from nestrad.algebra.numbers import is_power_free
from nestrad.errors import DomainError

logger = logging.getLogger(__name__)


def dioph_scan(
    b_max: int, c_max: int, fourth_power_free: bool = True
) -> list[tuple[int, int, int]]:
    """
    Solutions of b * w^4 = 5 * z^4 with 1 <= b <= b_max, 1 <= z, w <= c_max and
    gcd(z, w) = 1. With `fourth_power_free` only bases without a fourth power factor
    are kept.

    Returns:
        list[tuple[int, int, int]]: (b, z, w) sorted
    """
    if b_max < 1 or c_max < 1:
        raise DomainError(f"bounds must be at least 1, got b_max={b_max}, c_max={c_max}")
    solutions = []
    for z in range(1, c_max + 1):
        for w in range(1, c_max + 1):
            if gcd(z, w) != 1:
                continue
            b, rest = divmod(5 * z**4, w**4)
            if rest or not 1 <= b <= b_max:
                continue
            if fourth_power_free and not is_power_free(b, 4):
                continue
            solutions.append((b, z, w))
    logger.info(f"Found {len(solutions)} solutions with b <= {b_max}, z, w <= {c_max}")
    return sorted(solutions)
