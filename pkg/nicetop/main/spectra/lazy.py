"""
Lazily generated descending chains of nice pattern rings whose covers keep
growing inside an unbounded set of primes.
"""
import logging
from typing import FrozenSet, Iterator, List, Text, Tuple

import sympy

from ..exceptions import DepthExceeded, InvalidParameter
from ..patterns import PatternRing, UNIT
from ..utils import check_cap
from ..valuation import CutIdeal
from .base import LoReport

logger = logging.getLogger('nicetop')


class PrimePrefixRule:
    '''
    Member ``k`` is the 2 x 2 pattern ring with the corner ``Cut(k, closed)``
    above the diagonal; it lies over the first ``k * step`` primes.
    '''

    def __init__(self, step: int = 1):
        if step < 1:
            raise InvalidParameter(f'step must be positive, got {step}')
        self.step = step
        self._primes: List[int] = []

    def primes(self, count: int) -> List[int]:
        if count > len(self._primes):
            self._primes = list(sympy.primerange(2, sympy.prime(count) + 1)) if count else []
        return self._primes[:count]

    def member(self, k: int) -> PatternRing:
        return PatternRing(((UNIT, CutIdeal.closed(k)), (UNIT, UNIT)))

    def cover(self, k: int) -> FrozenSet[int]:
        return frozenset(self.primes(k * self.step))

    def describe(self) -> Text:
        return f'prime prefix, step {self.step}'


class LazyChainModel:
    __slots__ = ('rule', 'depth_cap')

    def __init__(self, rule, depth_cap: int = 100):
        if depth_cap < 1:
            raise InvalidParameter(f'depth cap must be positive, got {depth_cap}')
        if isinstance(rule, str):
            from . import RULE_HANDLERS  # pylint: disable=import-outside-toplevel,cyclic-import
            rule = RULE_HANDLERS.get_object(rule)
        self.rule = rule
        self.depth_cap = check_cap('lazy_depth', depth_cap)

    def iterate(self, depth: int) -> Iterator[Tuple[int, PatternRing, FrozenSet[int]]]:
        if depth > self.depth_cap:
            raise DepthExceeded(depth, self.depth_cap)
        self.rule.primes(depth * getattr(self.rule, 'step', 1))
        for k in range(1, depth + 1):
            yield k, self.rule.member(k), self.rule.cover(k)

    def check(self, depth: int = None) -> LoReport:
        '''
        Check the chain prefix of length ``depth``: members strictly descend,
        covers strictly grow, and no member covers the primes already
        reached by the next step of the chain.
        '''
        depth = self.depth_cap if depth is None else depth
        if depth < 2:
            raise InvalidParameter(f'depth must be at least 2, got {depth}')
        chain = list(self.iterate(depth))
        rings = [ring for _, ring, _ in chain]
        covers = [cover for _, _, cover in chain]
        descending = all(low < high for low, high in zip(rings[1:], rings))
        growing = all(small < large for small, large in zip(covers, covers[1:]))
        # primes reached one step past the prefix
        horizon = frozenset().union(*covers, self.rule.cover(depth + 1))
        no_lo_member = not any(cover >= horizon for cover in covers)
        report = LoReport(
            kind='lazy',
            no_lo_member=no_lo_member,
            no_maximal_cover=growing,
            descending_below_every_member=descending and growing,
            descending_in_every_closed=descending and growing,
            depth=depth,
            note='chain conditions are checked on a generated prefix of an infinite chain',
            detail={
                'rule': self.rule.describe(),
                'strict_steps': sum(1 for low, high in zip(rings[1:], rings) if low < high),
                'largest_cover': len(covers[-1]),
                'horizon': len(horizon),
            },
        )
        logger.debug('Lazy chain checked to depth {}.'.format(depth))
        return report
