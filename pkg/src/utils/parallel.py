#!/usr/bin/env python3
"""
Deterministic parallel map
Results always come back in input order, so any reduction over them is
independent of the worker count
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

from ..config import config

logger = logging.getLogger(__name__)

T = TypeVar('T')
R = TypeVar('R')


def resolve_threads(threads: Optional[int] = None) -> int:
    """Explicit count, else the configured one (SIMPREF_THREADS); never below 1"""
    count = config.threads if threads is None else threads
    return max(1, int(count))


def ordered_map(func: Callable[[T], R], items: Iterable[T], threads: Optional[int] = None) -> List[R]:
    """
    Apply ``func`` to every item, possibly on several threads.

    Args:
        func: Pure function of one item
        items: Inputs
        threads: Worker count (default from configuration)

    Returns:
        Results in input order
    """
    items = list(items)
    workers = min(resolve_threads(threads), max(1, len(items)))
    if workers == 1:
        return [func(item) for item in items]

    logger.debug(f"Mapping {len(items)} items on {workers} threads")
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(func, items))
