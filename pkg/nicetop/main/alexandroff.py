"""
Alexandroff topologies of finite posets and of symbolic models.

Opens are exactly the upper sets of the specialization order, closeds the
lower sets, and every point ``x`` has the minimal open ``U_x = up(x)``.
"""
import abc
import logging
from functools import reduce
from typing import Any, Dict, Iterable, Iterator, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np
from django.utils.functional import cached_property

from .constants import EXHAUSTIVE_COVER_POINTS, TOPOLOGY_POINTS
from .exceptions import (
    EmptyModel,
    EmptySet,
    InvalidParameter,
    NotATopology,
    NotClosed,
    NotT0,
    UnsupportedDescriptor,
)
from .order import ElemSet, FinitePoset, NiceFamily, elements, full_set

logger = logging.getLogger('nicetop')


class Irreducibility(NamedTuple):
    irreducible: bool
    witness: Any = None


class Sobriety(NamedTuple):
    sober: bool
    certificate: Any = None


class AlexTopology:
    __slots__ = ('n', 'min_open')

    def __init__(self, n: int, min_open: Sequence[ElemSet]):
        if len(min_open) != n:
            raise InvalidParameter(f'expected {n} minimal opens, got {len(min_open)}')
        self.n = n
        self.min_open = tuple(min_open)

    @classmethod
    def from_opens(cls, n: int, opens: Iterable[ElemSet]) -> 'AlexTopology':
        opens = set(opens)
        full = full_set(n)
        if 0 not in opens or full not in opens:
            raise NotATopology('containing the empty and the full set')
        if any(u >> n for u in opens):
            raise InvalidParameter(f'open sets must be subsets of {n} points')
        listed = sorted(opens)
        for i, u in enumerate(listed):
            for v in listed[i + 1:]:
                if u | v not in opens:
                    raise NotATopology('union', witness=(u, v))
                if u & v not in opens:
                    raise NotATopology('intersection', witness=(u, v))
        min_open = [reduce(lambda acc, u: acc & u, (u for u in listed if u >> x & 1), full) for x in range(n)]
        return cls(n, min_open)

    def __eq__(self, other) -> bool:
        return isinstance(other, AlexTopology) and (self.n, self.min_open) == (other.n, other.min_open)

    def __hash__(self) -> int:
        return hash((self.n, self.min_open))

    def __repr__(self):
        return f'AlexTopology(n={self.n}, min_open={[elements(u) for u in self.min_open]})'

    def is_open(self, mask: ElemSet) -> bool:
        return all(self.min_open[x] & ~mask == 0 for x in elements(mask))

    def opens(self) -> List[ElemSet]:
        return list(filter(self.is_open, range(full_set(self.n) + 1)))

    def closeds(self) -> List[ElemSet]:
        full = full_set(self.n)
        return sorted(full & ~u for u in self.opens())

    def is_t0(self) -> bool:
        return self.indistinguishable() is None

    def indistinguishable(self) -> Optional[Tuple[int, int]]:
        for x in range(self.n):
            for y in range(x + 1, self.n):
                if self.min_open[x] >> y & 1 and self.min_open[y] >> x & 1:
                    return x, y
        return None

    def to_dict(self) -> Dict:
        return {'n': self.n, 'min_open': [elements(u) for u in self.min_open]}


def topology_from_order(poset: FinitePoset) -> AlexTopology:
    return AlexTopology(poset.n, poset.up_masks)


def specialization_order(topology: AlexTopology) -> FinitePoset:
    '''
    ``x <= y`` iff ``x`` lies in the closure of ``y`` iff ``y`` lies in every
    open containing ``x``.
    '''
    pair = topology.indistinguishable()
    if pair is not None:
        raise NotT0(pair, witness=pair)
    n = topology.n
    matrix = np.array(
        [[bool(topology.min_open[x] >> y & 1) for y in range(n)] for x in range(n)], dtype=bool
    ).reshape(n, n)
    return FinitePoset.from_relation(matrix)


def enumerate_topologies(n: int) -> Iterator[AlexTopology]:
    '''
    Every topology on ``n`` labelled points, found by scanning families of
    proper nonempty subsets for closure under union and intersection.
    '''
    if n < 1:
        raise InvalidParameter(f'point count must be positive, got {n}')
    if n > TOPOLOGY_POINTS:
        raise InvalidParameter(f'topologies are enumerated on at most {TOPOLOGY_POINTS} points')
    full = full_set(n)
    proper = list(range(1, full))
    for choice in range(1 << len(proper)):
        opens = [0, full] + [u for bit, u in enumerate(proper) if choice >> bit & 1]
        present = set(opens)
        if all(u | v in present and u & v in present for i, u in enumerate(opens) for v in opens[i + 1:]):
            yield AlexTopology.from_opens(n, present)


class SpaceModel(abc.ABC):
    """
    A T0 Alexandroff space given through its specialization order.
    Finite models enumerate their points, symbolic ones answer questions
    about registered descriptors only.
    """
    finite = True

    @abc.abstractmethod
    def leq(self, x, y) -> bool:  # pragma: no cover
        pass

    @abc.abstractmethod
    def minimal_open(self, x):  # pragma: no cover
        pass

    @abc.abstractmethod
    def closure_point(self, x):  # pragma: no cover
        pass

    def maximal_points(self):
        raise UnsupportedDescriptor('maximal points of {}'.format(type(self).__name__))

    # Symbolic hooks, only called for models with ``finite = False``.
    def closure_of(self, descriptor):
        raise UnsupportedDescriptor(descriptor)

    def irreducibility_of(self, descriptor) -> Irreducibility:
        raise UnsupportedDescriptor(descriptor)

    def generic_point_of(self, descriptor):
        raise UnsupportedDescriptor(descriptor)

    def sobriety(self) -> Sobriety:
        raise UnsupportedDescriptor('sobriety of {}'.format(type(self).__name__))


class FiniteSpace(SpaceModel):
    def __init__(self, poset: FinitePoset):
        if poset.n == 0:
            raise EmptyModel()
        self.poset = poset

    @property
    def size(self) -> int:
        return self.poset.n

    @property
    def all_points(self) -> ElemSet:
        return self.poset.full

    def leq(self, x: int, y: int) -> bool:
        return bool(self.poset.leq[x, y])

    def minimal_open(self, x: int) -> ElemSet:
        return self.poset.up_masks[x]

    def closure_point(self, x: int) -> ElemSet:
        return self.poset.down_masks[x]

    def maximal_points(self) -> ElemSet:
        return self.poset.maximal_elements(self.poset.full)

    @cached_property
    def topology(self) -> AlexTopology:
        return topology_from_order(self.poset)

    @cached_property
    def inf_table(self) -> Tuple[Optional[int], ...]:
        return tuple(self.poset.inf(mask) if mask else None for mask in range(self.poset.full + 1))

    @cached_property
    def sup_table(self) -> Tuple[Optional[int], ...]:
        return tuple(self.poset.sup(mask) if mask else None for mask in range(self.poset.full + 1))

    def describe(self) -> Dict:
        return {'kind': 'poset', **self.poset.to_dict()}


class FamilySpace(FiniteSpace):
    def __init__(self, family: NiceFamily):
        super().__init__(family.poset)
        self.family = family

    def v_of(self, content: ElemSet) -> ElemSet:
        return sum(1 << i for i, m in enumerate(self.family.members) if content & ~m == 0)

    def describe(self) -> Dict:
        return {'kind': 'family', **self.family.to_dict()}


def v_of(model: FamilySpace, content: ElemSet) -> ElemSet:
    '''
    Members of the family containing the ground subset ``content``.

    :param model: family model
    :param content: subset of the ground set, as a mask
    :return: point set (mask over member indices)
    '''
    if content >> model.family.ground:
        raise InvalidParameter(f'{elements(content)} is not a subset of the ground set')
    return model.v_of(content)


def _check_closed(model: FiniteSpace, mask: ElemSet) -> None:
    if not model.poset.is_lower(mask):
        raise NotClosed(elements(mask), witness=mask)


def closure_set(model: SpaceModel, points):
    if not model.finite:
        return model.closure_of(points)
    return model.poset.down_set(points)


def is_irreducible(model: SpaceModel, points) -> Irreducibility:
    '''
    Irreducibility through directedness. A negative answer carries a pair
    ``(a, b)`` without an upper bound inside ``points``: the closed sets of
    points not above ``a`` and not above ``b`` then split ``points``.
    '''
    if not model.finite:
        return model.irreducibility_of(points)
    if not points:
        raise EmptySet()
    poset = model.poset
    items = elements(points)
    for i, a in enumerate(items):
        for b in items[i + 1:]:
            if not poset.up_masks[a] & poset.up_masks[b] & points:
                return Irreducibility(False, (a, b))
    return Irreducibility(True)


def is_irreducible_by_cover(model: FiniteSpace, points: ElemSet) -> Irreducibility:
    '''
    Irreducibility straight from the definition: ``points`` must not be
    covered by two closed sets without lying in one of them.

    Closed sets of the form "points not above ``a``" are always tried, all
    closed sets are tried on models with at most five points.
    '''
    if not points:
        raise EmptySet()
    poset = model.poset
    candidates = [poset.full & ~poset.up_masks[a] for a in elements(points)]
    if poset.n <= EXHAUSTIVE_COVER_POINTS:
        candidates.extend(poset.lower_sets)
    for i, first in enumerate(candidates):
        if not points & ~first:
            continue
        for second in candidates[i:]:
            if points & ~second and not points & ~(first | second):
                return Irreducibility(False, (first, second))
    return Irreducibility(True)


def irreducible_components(model: SpaceModel) -> List:
    maximal = model.maximal_points()
    if not model.finite:
        return [model.closure_point(m) for m in maximal]
    return [model.closure_point(m) for m in elements(maximal)]


def components_by_definition(model: FiniteSpace) -> List[ElemSet]:
    poset = model.poset
    irreducible = [mask for mask in range(1, poset.full + 1) if poset.is_directed(mask)]
    return sorted(
        mask for mask in irreducible
        if not any(other != mask and mask & ~other == 0 for other in irreducible)
    )


def generic_point(model: SpaceModel, closed) -> Optional[Any]:
    if not model.finite:
        return model.generic_point_of(closed)
    _check_closed(model, closed)
    return next((g for g in elements(closed) if model.poset.down_masks[g] == closed), None)


def is_sober(model: SpaceModel) -> Sobriety:
    if not model.finite:
        return model.sobriety()
    poset = model.poset
    for closed in poset.lower_sets:
        if closed and poset.is_directed(closed) and generic_point(model, closed) is None:
            return Sobriety(False, closed)
    return Sobriety(True)


def intersection_of_nonempty_opens(model: FiniteSpace) -> ElemSet:
    """Every nonempty open contains some minimal open, so those suffice."""
    return reduce(lambda acc, u: acc & u, model.poset.up_masks, model.poset.full)
