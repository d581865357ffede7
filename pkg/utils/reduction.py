"""
Deterministic reductions for the Euler-product engine.

Work is cut into fixed-size chunks whose boundaries depend only on the input
length and the chunk size, never on the number of workers. Each chunk is
summed exactly-rounded with ``math.fsum`` and the chunk totals are combined
on a binary tree of fixed shape, so results are bit-identical for any thread
count.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def _chunks(items: Sequence[T], chunk_size: int) -> List[Sequence[T]]:
    if chunk_size < 1:
        raise ValueError(f"chunk_size must be positive, got {chunk_size}")
    return [items[i:i + chunk_size] for i in range(0, len(items), chunk_size)]


def chunked_map(
    func: Callable[[Sequence[T]], R],
    items: Sequence[T],
    chunk_size: int,
    workers: int = 1,
) -> List[R]:
    """
    Apply ``func`` to consecutive fixed-size chunks of ``items``.

    Results come back in input order whatever ``workers`` is.
    """
    chunks = _chunks(items, chunk_size)
    if workers <= 1 or len(chunks) <= 1:
        return [func(chunk) for chunk in chunks]
    with ThreadPoolExecutor(max_workers=min(workers, len(chunks))) as pool:
        return list(pool.map(func, chunks))


def pairwise_sum(values: Sequence[complex]) -> complex:
    """Sum on a balanced binary tree whose shape depends only on len(values)."""
    n = len(values)
    if n == 0:
        return 0j
    if n == 1:
        return complex(values[0])
    mid = n // 2
    return pairwise_sum(values[:mid]) + pairwise_sum(values[mid:])


def fsum_complex(values: Sequence[complex]) -> complex:
    """Exactly-rounded sum of complex values, real and imaginary parts apart."""
    return complex(
        math.fsum(v.real for v in values),
        math.fsum(v.imag for v in values),
    )


def chunk_totals(
    terms_fn: Callable[[T], complex],
    items: Sequence[T],
    chunk_size: int,
    workers: int = 1,
) -> List[complex]:
    """
    Evaluate ``terms_fn`` on every item and return the per-chunk totals.

    Keeping totals apart lets a running product reuse earlier chunks
    without re-evaluating them.
    """
    def chunk_total(chunk: Sequence[T]) -> complex:
        return fsum_complex([terms_fn(item) for item in chunk])

    return chunked_map(chunk_total, items, chunk_size, workers)


def ordered_log_sum(
    terms_fn: Callable[[T], complex],
    items: Sequence[T],
    chunk_size: int,
    workers: int = 1,
) -> complex:
    """Sum ``terms_fn`` over ``items`` deterministically."""
    return pairwise_sum(chunk_totals(terms_fn, items, chunk_size, workers))
