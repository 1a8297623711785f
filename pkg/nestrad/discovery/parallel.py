import logging
from collections.abc import Callable, Sequence
from concurrent.futures import ProcessPoolExecutor
from typing import TypeVar

T = TypeVar("T")
R = TypeVar("R")

logger = logging.getLogger(__name__)


def chunked(items: Sequence[T], chunks: int) -> list[Sequence[T]]:
    """Split items into at most `chunks` contiguous slices, in order."""
    size = max(1, -(-len(items) // max(1, chunks)))
    return [items[i : i + size] for i in range(0, len(items), size)]


def parallel_map(
    fn: Callable[[Sequence[T]], list[R]], items: Sequence[T], workers: int = 1
) -> list[R]:
    """
    Apply a pure chunk function to contiguous slices of items and concatenate the
    results in slice order, so the output does not depend on the number of workers.
    `fn` must be picklable (a module level function or a functools.partial of one).
    """
    if workers <= 1 or len(items) < 2:
        return fn(items)
    slices = chunked(items, workers * 4)
    logger.info(f"Scanning {len(items)} items in {len(slices)} chunks, {workers} workers")
    results: list[R] = []
    with ProcessPoolExecutor(max_workers=workers) as executor:
        for part in executor.map(fn, slices):
            results.extend(part)
    return results
