import logging
import warnings
from concurrent.futures import ThreadPoolExecutor

from polylaw.config import worker_count

try:
    from progressbar import progressbar
except ImportError:
    def progressbar(iterable, **kwargs):
        warnings.warn("Module polylaw: Progressbar not found. Install progressbar2 to get verification progress.")
        return iterable

logger = logging.getLogger(__name__)


def parallel_map(func, items, workers=None, progress=False):
    """Apply ``func`` to every item, possibly on several threads.

    Results are returned in the order of ``items`` regardless of the order
    in which workers finish.

    Parameters
    ----------
    func : callable
        Function of one argument.

    items : iterable
        Work items.

    workers : int, optional
        Number of threads. Defaults to :func:`polylaw.config.worker_count`.

    progress : bool
        Show a progress bar (requires progressbar2).
    """
    items = list(items)
    if workers is None:
        workers = worker_count()
    workers = max(1, min(workers, len(items)))
    logger.debug("Mapping %s over %d items with %d workers", getattr(func, "__name__", func), len(items), workers)
    if workers == 1:
        iterable = progressbar(items) if progress else items
        return [func(item) for item in iterable]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(func, item) for item in items]
        iterable = progressbar(futures) if progress else futures
        return [future.result() for future in iterable]
