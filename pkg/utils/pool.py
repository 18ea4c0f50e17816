from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Iterator, List, Optional, TypeVar

try:
    from tqdm import tqdm  # type: ignore
except Exception:  # pragma: no cover
    def tqdm(x, **kwargs):
        return x

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def ordered_map(
    fn: Callable[[T], R],
    items: Iterable[T],
    *,
    jobs: int = 1,
    desc: Optional[str] = None,
    progress: bool = False,
    chunksize: Optional[int] = None,
) -> Iterator[R]:
    """Map ``fn`` over ``items`` and yield results in input order.

    ``fn`` must be a module-level function when ``jobs > 1``.
    """
    work: List[T] = list(items)
    bar_kwargs = dict(total=len(work), desc=desc, disable=not progress, leave=False)

    if jobs <= 1 or len(work) <= 1:
        for res in tqdm(map(fn, work), **bar_kwargs):
            yield res
        return

    if chunksize is None:
        chunksize = max(1, len(work) // (jobs * 8))
    logger.info("Dispatching %d items over %d workers (%s)", len(work), jobs, desc or fn.__name__)
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        for res in tqdm(ex.map(fn, work, chunksize=chunksize), **bar_kwargs):
            yield res
