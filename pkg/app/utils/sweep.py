import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

from app.core.config import Settings, apply_settings, settings

T = TypeVar("T")
R = TypeVar("R")

logger = logging.getLogger(__name__)


def _init_worker(values: dict) -> None:
    # spawned workers import a fresh module: carry the parent's overrides over
    apply_settings(Settings.model_construct(**values))


def ordered_map(fn: Callable[[T], R], items: Iterable[T], workers: Optional[int] = None) -> List[R]:
    """Map ``fn`` over ``items`` keeping input order, in worker processes when asked.

    ``fn`` must be a module-level function so it pickles.  Workers start with
    the caller's settings, so the result is the same list whatever the worker
    count or process start method.
    """
    items = list(items)
    workers = settings.WORKERS if workers is None else workers
    if workers <= 1 or len(items) < 2:
        return [fn(item) for item in items]

    chunksize = max(1, len(items) // (workers * 4))
    logger.debug(f"Sweeping {len(items)} items on {workers} workers (chunks of {chunksize})")
    with ProcessPoolExecutor(
        max_workers=workers, initializer=_init_worker, initargs=(settings.model_dump(),)
    ) as executor:
        return list(executor.map(fn, items, chunksize=chunksize))
