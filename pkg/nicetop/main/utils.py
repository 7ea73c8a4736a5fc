# pylint: disable=invalid-name
import logging
import multiprocessing
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, Dict, Iterable, List, Sequence, Text, TypeVar
from vstutils.utils import ObjectHandlers

try:
    from yaml import CLoader as Loader, CDumper as Dumper, load, dump
except ImportError:  # nocv
    from yaml import Loader, Dumper, load, dump

from .constants import HARD_LIMITS
from .exceptions import CapExceeded, InvalidParameter, UnknownBackend


logger = logging.getLogger('nicetop')
T = TypeVar('T')
R = TypeVar('R')


def check_cap(name: Text, value: int, cap: int = None) -> int:
    '''
    Validate a configured size against its hard limit.

    :param name: key of :data:`HARD_LIMITS` (also used in the message)
    :param value: requested size
    :param cap: tighter limit, when the caller has one
    :return: value itself
    '''
    limit = HARD_LIMITS[name] if cap is None else min(cap, HARD_LIMITS[name])
    if value > limit:
        raise CapExceeded(name, value, limit)
    return value


def chunked(items: Sequence[T], size: int) -> List[Sequence[T]]:
    return [items[i:i + size] for i in range(0, len(items), max(size, 1))]


class SweepExecutor:
    """
    Maps a pure module-level function over independent work chunks.
    Forked worker processes are used when more than one worker is requested,
    results always come back in submission order.
    """
    __slots__ = ('workers',)

    def __init__(self, workers: int = 1):
        if workers < 1:
            raise InvalidParameter(f'workers must be positive, got {workers}')
        self.workers = check_cap('workers', workers)

    def map(self, func: Callable[[T], R], chunks: Iterable[T]) -> List[R]:
        chunks = list(chunks)
        if self.workers == 1 or len(chunks) < 2:
            return [func(chunk) for chunk in chunks]
        logger.debug('Sweeping {} chunks on {} workers.'.format(len(chunks), self.workers))
        context = multiprocessing.get_context('fork')
        with ProcessPoolExecutor(max_workers=self.workers, mp_context=context) as pool:
            return list(pool.map(func, chunks))


class BackendHandlers(ObjectHandlers):
    def get_object(self, name: Text, *args, **kwargs) -> Any:
        name = name.upper()
        if name not in self.keys():
            raise UnknownBackend(name, self.err_message)
        return self[name](*args, **{**self.opts(name), **kwargs})


def load_yaml(path: Text) -> Dict:
    with open(path, 'r', encoding='utf-8') as fd:
        return load(fd.read(), Loader=Loader)


def dump_yaml(data: Any) -> Text:
    return dump(data, Dumper=Dumper, default_flow_style=False)
