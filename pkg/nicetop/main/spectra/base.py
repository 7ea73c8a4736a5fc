"""
Prime-cover models: every member of a finite nice family carries the set of
primes of the base ring that it lies over.
"""
import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterator, List, Optional, Sequence, Text, Union

import numpy as np

from ..exceptions import (
    AlreadyCovered,
    EmptyClosedSet,
    InvalidParameter,
    NotClosed,
    OracleViolation,
    SizeMismatch,
    UnknownMember,
)
from ..order import ElemSet, NiceFamily, elements, enumerate_nice_families, full_set
from ..utils import check_cap

logger = logging.getLogger('nicetop')
Oracle = Callable[['SpectralModel', int, int], int]


class SpectralModel:
    '''
    Finite nice family with a cover map ``member -> set of primes``.

    Primes are ``range(primes)``, covers are bitmasks over them. Covers must
    shrink as members grow, refinement is delegated to an oracle.
    '''
    __slots__ = ('family', 'primes', 'cover', 'oracle')

    def __init__(self, family: NiceFamily, primes: int, cover: Sequence[ElemSet],
                 oracle: Union[Oracle, Text, None] = None):
        if primes < 1:
            raise InvalidParameter(f'prime count must be positive, got {primes}')
        check_cap('primes', primes)
        if len(cover) != len(family):
            raise SizeMismatch(len(cover), len(family))
        full = full_set(primes)
        if any(c < 0 or c & ~full for c in cover):
            raise InvalidParameter(f'covers must be subsets of {primes} primes')
        self.family = family
        self.primes = primes
        self.cover = tuple(int(c) for c in cover)
        poset = family.poset
        for small in range(len(family)):
            for large in elements(poset.up_masks[small]):
                if self.cover[large] & ~self.cover[small]:
                    raise InvalidParameter(
                        f'cover of member {large} is not inside the cover of its sub-member {small}',
                        witness=(small, large),
                    )
        if oracle is None or isinstance(oracle, str):
            from . import ORACLE_HANDLERS  # pylint: disable=import-outside-toplevel,cyclic-import
            oracle = ORACLE_HANDLERS.get_object(oracle or 'INTERSECTION')
        self.oracle = oracle

    @property
    def full_cover(self) -> ElemSet:
        return full_set(self.primes)

    def check_member(self, member: int) -> int:
        if not isinstance(member, (int, np.integer)) or not 0 <= member < len(self.family):
            raise UnknownMember(member)
        return int(member)

    def missing(self, member: int) -> List[int]:
        return elements(self.full_cover & ~self.cover[self.check_member(member)])

    def to_dict(self) -> Dict:
        return {
            **self.family.to_dict(),
            'primes': self.primes,
            'cover': {str(i): elements(c) for i, c in enumerate(self.cover)},
        }


def satisfies_lo(model: SpectralModel, member: int) -> bool:
    return model.cover[model.check_member(member)] == model.full_cover


def refine(model: SpectralModel, member: int, prime: int) -> int:
    '''
    Ask the oracle for a strictly smaller member that also lies over ``prime``.

    :param model: spectral model
    :param member: index of the member to refine
    :param prime: a prime missing from its cover
    :return: index of the refined member
    '''
    member = model.check_member(member)
    if not 0 <= prime < model.primes:
        raise InvalidParameter(f'prime {prime} is outside range({model.primes})')
    if model.cover[member] >> prime & 1:
        raise AlreadyCovered(prime, member)
    result = model.oracle(model, member, prime)
    members = model.family.members
    if not isinstance(result, (int, np.integer)) or not 0 <= result < len(members):
        raise OracleViolation(f'unknown member {result!r}', witness=result)
    result = int(result)
    if result == member or members[result] & ~members[member]:
        raise OracleViolation(f'member {result} is not strictly inside member {member}', witness=result)
    needed = model.cover[member] | (1 << prime)
    if needed & ~model.cover[result]:
        raise OracleViolation(f'member {result} does not lie over {elements(needed)}', witness=result)
    return result


@dataclass
class LoPath:
    member: int
    steps: int
    path: List[int] = field(default_factory=list)

    def to_dict(self) -> Dict:
        return {'member': self.member, 'steps': self.steps, 'path': self.path}


def lo_from_cofinite(model: SpectralModel, member: int) -> LoPath:
    '''
    Refine on the lowest missing prime until the member lies over every
    prime. Each step covers at least one new prime.
    '''
    current = model.check_member(member)
    path = [current]
    while not satisfies_lo(model, current):
        current = refine(model, current, model.missing(current)[0])
        path.append(current)
    return LoPath(current, len(path) - 1, path)


def closed_set_lo(model: SpectralModel, points: ElemSet) -> Optional[int]:
    '''
    Member of the closed set ``points`` lying over every prime: the meet of
    any lying-over member with any member of the set.
    '''
    if not points:
        raise EmptyClosedSet()
    if not model.family.poset.is_lower(points):
        raise NotClosed(elements(points), witness=points)
    lo_member = next((i for i in range(len(model.family)) if satisfies_lo(model, i)), None)
    if lo_member is None:
        return None
    return model.family.meet(lo_member, elements(points)[0])


def realized_covers(model: SpectralModel) -> List[ElemSet]:
    return sorted(set(model.cover))


def maximal_covers(model: SpectralModel) -> List[ElemSet]:
    covers = realized_covers(model)
    return [c for c in covers if not any(c != other and not c & ~other for other in covers)]


@dataclass
class LoReport:
    '''
    Conditions equivalent to the absence of a lying-over member.

    Conditions on infinite chains are ``None`` for finite models and are
    checked on the generated prefix of a lazy chain.
    '''
    kind: Text
    no_lo_member: bool
    no_maximal_cover: bool
    descending_below_every_member: Optional[bool] = None
    descending_in_every_closed: Optional[bool] = None
    depth: Optional[int] = None
    artifact: bool = False
    note: Text = ''
    detail: Dict[Text, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict:
        return {
            'kind': self.kind,
            'no_lo_member': self.no_lo_member,
            'no_maximal_cover': self.no_maximal_cover,
            'descending_below_every_member': self.descending_below_every_member,
            'descending_in_every_closed': self.descending_in_every_closed,
            'depth': self.depth,
            'artifact': self.artifact,
            'note': self.note,
            'detail': self.detail,
        }


def _finite_lo_report(model: SpectralModel) -> LoReport:
    no_lo = not any(satisfies_lo(model, i) for i in range(len(model.family)))
    maximal = maximal_covers(model)
    report = LoReport(
        kind='finite',
        no_lo_member=no_lo,
        no_maximal_cover=not maximal,
        artifact=no_lo and bool(maximal),
        note='finite models always realize a maximal cover; chain conditions need infinite models',
        detail={'maximal_covers': [elements(c) for c in maximal]},
    )
    if report.artifact:
        logger.warning('No member lies over every prime, but covers {} are maximal.'.format(
            report.detail['maximal_covers']
        ))
    return report


def check_lo_nonexistence(model, depth: int = None) -> LoReport:
    '''
    Evaluate the conditions equivalent to having no lying-over member.

    :param model: :class:`SpectralModel` or :class:`LazyChainModel`
    :param depth: prefix length checked on a lazy chain
    '''
    if isinstance(model, SpectralModel):
        return _finite_lo_report(model)
    return model.check(depth)


def random_fixture(rng: np.random.Generator, family: NiceFamily, primes: int,
                   oracle: Union[Oracle, Text, None] = None) -> SpectralModel:
    '''
    Cover map from one random nonempty closed set per prime: a member lies
    over the prime iff it belongs to that closed set. The least member lies
    over every prime.
    '''
    closeds = [mask for mask in family.poset.lower_sets if mask]
    chosen = [closeds[int(rng.integers(len(closeds)))] for _ in range(primes)]
    cover = [
        sum(1 << p for p, closed in enumerate(chosen) if closed >> member & 1)
        for member in range(len(family))
    ]
    return SpectralModel(family, primes, cover, oracle)


def fixture_models(count: int, primes: int = 4, seed: int = 0, ground: int = 3,
                   max_members: int = 8, oracle: Union[Oracle, Text, None] = None) -> Iterator[SpectralModel]:
    check_cap('primes', primes)
    rng = np.random.default_rng(seed)
    families = [f for f in enumerate_nice_families(ground, max_members) if len(f) > 1]
    for _ in range(count):
        family = families[int(rng.integers(len(families)))]
        yield random_fixture(rng, family, primes, oracle)

