# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.
import logging
from multiprocessing import Pool

from nacrig.config import get_n_threads

logger = logging.getLogger(__name__)


def ordered_map(func, items, n_threads=None, chunksize=32):
    """
    Lazily maps `func` over `items`, yielding results in input order.

    With more than one worker the items are dispatched to a process pool.
    Closing the generator early terminates the pool, so callers stop
    outstanding work by breaking out of the loop.

    :param func: Picklable callable (module level function or partial).
    :param items: Iterable of arguments.
    :param n_threads: Number of workers, defaults to `get_n_threads()`.
    """
    if n_threads is None:
        n_threads = get_n_threads()
    if n_threads <= 1:
        for item in items:
            yield func(item)
        return

    logger.debug('Dispatching work to {} processes'.format(n_threads))
    with Pool(n_threads) as pool:
        for res in pool.imap(func, items, chunksize):
            yield res
