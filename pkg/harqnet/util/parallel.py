from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def ordered_map(
    function: Callable[[T], R], items: Iterable[T], workers: int = 1
) -> List[R]:
    """Apply function to every item, possibly on a thread pool.

    Results come back in the order of the items whatever the number of
    workers, so any reduction over them is schedule independent. The first
    exception raised by a call is re-raised here.
    """
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [function(item) for item in items]

    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(function, items))
