"""Ordered map over graphs, optionally across worker processes."""

from __future__ import annotations

import logging
from collections.abc import Callable, Sequence
from multiprocessing import Pool
from typing import List, TypeVar

from tqdm import tqdm

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def ordered_map(
    func: Callable[[T], R],
    items: Sequence[T],
    *,
    threads: int = 1,
    desc: str = "graphs",
    progress: bool = False,
    chunksize: int = 16,
) -> List[R]:
    """Apply ``func`` to every item, keeping input order.

    With ``threads > 1`` the work goes to a process pool; ``func`` must then be
    picklable (a module-level function or a ``functools.partial`` of one).
    """

    if threads <= 1 or len(items) < 2:
        return [func(item) for item in tqdm(items, desc=desc, disable=not progress)]

    logger.debug(f"Mapping {len(items)} {desc} over {threads} processes")
    with Pool(processes=threads) as pool:
        iterator = pool.imap(func, items, chunksize=chunksize)
        return list(tqdm(iterator, total=len(items), desc=desc, disable=not progress))
