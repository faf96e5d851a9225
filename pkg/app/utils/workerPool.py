# app/utils/workerPool.py
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Sequence, TypeVar

from app.simulation_config import THREADS

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def _run_chunk(func: Callable[[T], R], chunk: Sequence[T]) -> List[R]:
    return [func(item) for item in chunk]


def ordered_map(func: Callable[[T], R], items: Sequence[T], threads: int = THREADS) -> List[R]:
    """
    Maps func over items on a thread pool and returns results in input order.

    Items are split into contiguous chunks, one batch per worker, so the
    reassembled list does not depend on the thread count.
    """
    items = list(items)
    threads = max(1, min(int(threads or 1), len(items) or 1))
    if threads == 1:
        return _run_chunk(func, items)

    size = -(-len(items) // threads)
    chunks = [items[start:start + size] for start in range(0, len(items), size)]
    logger.debug("mapping %d items over %d workers", len(items), len(chunks))
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(_run_chunk, func, chunk) for chunk in chunks]
        results: List[R] = []
        for future in futures:
            results.extend(future.result())
    return results
