"""
Finite partial orders and intersection-closed set families.

Element sets are plain ``int`` bitmasks: bit ``x`` is set iff element ``x``
belongs to the set.
"""
import logging
from functools import lru_cache, reduce
from itertools import chain, groupby, permutations, product
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Text, Tuple

import numpy as np
from django.utils.functional import cached_property

from .constants import DEFAULT_POSET_CAP
from .exceptions import (
    AntisymmetryViolation,
    EmptyModel,
    InvalidParameter,
    ReflexivityViolation,
    TransitivityViolation,
)
from .utils import check_cap

logger = logging.getLogger('nicetop')
ElemSet = int


def elem_set(items: Iterable[int]) -> ElemSet:
    return reduce(lambda mask, x: mask | (1 << int(x)), items, 0)


def elements(mask: ElemSet) -> List[int]:
    return [x for x in range(mask.bit_length()) if mask >> x & 1]


def full_set(n: int) -> ElemSet:
    return (1 << n) - 1


def popcount(mask: ElemSet) -> int:
    return bin(mask).count('1')


def submasks(mask: ElemSet) -> Iterator[ElemSet]:
    """Nonempty submasks of ``mask``, largest first."""
    sub = mask
    while sub:
        yield sub
        sub = (sub - 1) & mask


class FinitePoset:
    """
    Immutable finite partial order on ``range(n)``.

    ``leq`` is a read-only boolean matrix, ``leq[x, y]`` iff ``x <= y``.
    The constructor trusts its input, use :meth:`from_relation` for raw data.
    """

    def __init__(self, leq: np.ndarray):
        leq = np.array(leq, dtype=bool)
        leq.setflags(write=False)
        self.n = leq.shape[0]
        self.leq = leq
        self.up_masks = tuple(elem_set(np.flatnonzero(leq[x])) for x in range(self.n))
        self.down_masks = tuple(elem_set(np.flatnonzero(leq[:, x])) for x in range(self.n))

    @classmethod
    def from_relation(cls, rel: Sequence[Sequence[bool]]) -> 'FinitePoset':
        matrix = np.array(rel, dtype=bool)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise InvalidParameter(f'relation must be square, got shape {matrix.shape}')
        if matrix.shape[0] == 0:
            raise EmptyModel()
        missing = np.flatnonzero(~matrix.diagonal())
        if missing.size:
            x = int(missing[0])
            raise ReflexivityViolation((x, x), witness=(x, x))
        symmetric = np.argwhere(np.triu(matrix & matrix.T, 1))
        if symmetric.size:
            pair = tuple(int(v) for v in symmetric[0])
            raise AntisymmetryViolation(pair, witness=pair)
        composed = (matrix.astype(np.int64) @ matrix.astype(np.int64)) > 0
        broken = np.argwhere(composed & ~matrix)
        if broken.size:
            pair = tuple(int(v) for v in broken[0])
            raise TransitivityViolation(pair, witness=pair)
        return cls(matrix)

    @classmethod
    def from_covers(cls, n: int, covers: Iterable[Tuple[int, int]]) -> 'FinitePoset':
        matrix = np.eye(n, dtype=bool)
        for low, high in covers:
            matrix[low, high] = True
        for k in range(n):
            matrix |= np.outer(matrix[:, k], matrix[k, :])
        return cls.from_relation(matrix)

    @classmethod
    def chain(cls, n: int) -> 'FinitePoset':
        return cls(np.triu(np.ones((n, n), dtype=bool)))

    @classmethod
    def antichain(cls, n: int) -> 'FinitePoset':
        return cls(np.eye(n, dtype=bool))

    def __eq__(self, other) -> bool:
        return isinstance(other, FinitePoset) and np.array_equal(self.leq, other.leq)

    def __hash__(self) -> int:
        return hash((self.n, self.leq.tobytes()))

    def __repr__(self) -> Text:
        covers = [(x, y) for x in range(self.n) for y in elements(self.up_masks[x]) if x != y]
        return f'FinitePoset(n={self.n}, leq={covers})'

    @property
    def full(self) -> ElemSet:
        return full_set(self.n)

    def up_set(self, mask: ElemSet) -> ElemSet:
        return reduce(lambda acc, x: acc | self.up_masks[x], elements(mask), 0)

    def down_set(self, mask: ElemSet) -> ElemSet:
        return reduce(lambda acc, x: acc | self.down_masks[x], elements(mask), 0)

    def is_upper(self, mask: ElemSet) -> bool:
        return self.up_set(mask) == mask

    def is_lower(self, mask: ElemSet) -> bool:
        return self.down_set(mask) == mask

    def maximal_elements(self, mask: ElemSet) -> ElemSet:
        return elem_set(x for x in elements(mask) if self.up_masks[x] & mask == 1 << x)

    def minimal_elements(self, mask: ElemSet) -> ElemSet:
        return elem_set(x for x in elements(mask) if self.down_masks[x] & mask == 1 << x)

    def comparable(self, x: int, y: int) -> bool:
        return bool(self.leq[x, y] or self.leq[y, x])

    def is_chain(self, mask: ElemSet) -> bool:
        items = elements(mask)
        return all(self.comparable(x, y) for i, x in enumerate(items) for y in items[i + 1:])

    def is_directed(self, mask: ElemSet) -> bool:
        items = elements(mask)
        return bool(items) and all(
            self.up_masks[x] & self.up_masks[y] & mask
            for i, x in enumerate(items) for y in items[i + 1:]
        )

    def is_ideal(self, mask: ElemSet) -> bool:
        return self.is_lower(mask) and self.is_directed(mask)

    def upper_bounds(self, mask: ElemSet) -> ElemSet:
        return reduce(lambda acc, x: acc & self.up_masks[x], elements(mask), self.full)

    def lower_bounds(self, mask: ElemSet) -> ElemSet:
        return reduce(lambda acc, x: acc & self.down_masks[x], elements(mask), self.full)

    def sup(self, mask: ElemSet) -> Optional[int]:
        bounds = self.upper_bounds(mask)
        return next((u for u in elements(bounds) if bounds & ~self.up_masks[u] == 0), None)

    def inf(self, mask: ElemSet) -> Optional[int]:
        bounds = self.lower_bounds(mask)
        return next((g for g in elements(bounds) if bounds & ~self.down_masks[g] == 0), None)

    def greatest(self, mask: ElemSet = None) -> Optional[int]:
        mask = self.full if mask is None else mask
        return next((x for x in elements(mask) if mask & ~self.down_masks[x] == 0), None)

    def least(self, mask: ElemSet = None) -> Optional[int]:
        mask = self.full if mask is None else mask
        return next((x for x in elements(mask) if mask & ~self.up_masks[x] == 0), None)

    def _all_pairs(self, predicate) -> bool:
        return all(predicate((1 << x) | (1 << y)) is not None for x in range(self.n) for y in range(x + 1, self.n))

    def is_inf_semilattice(self) -> bool:
        return self._all_pairs(self.inf)

    def is_sup_semilattice(self) -> bool:
        return self._all_pairs(self.sup)

    def is_lattice(self) -> bool:
        return self.is_inf_semilattice() and self.is_sup_semilattice()

    def directed_subsets(self) -> Iterator[ElemSet]:
        return filter(self.is_directed, range(1, self.full + 1))

    def is_dcpo(self) -> bool:
        return all(self.sup(mask) is not None for mask in self.directed_subsets())

    @cached_property
    def upper_sets(self) -> Tuple[ElemSet, ...]:
        return tuple(filter(self.is_upper, range(self.full + 1)))

    @cached_property
    def lower_sets(self) -> Tuple[ElemSet, ...]:
        return tuple(filter(self.is_lower, range(self.full + 1)))

    def extend_maximal(self, below: ElemSet) -> 'FinitePoset':
        '''
        New poset with one extra element placed above exactly ``below``.

        :param below: lower set of this poset
        '''
        matrix = np.zeros((self.n + 1, self.n + 1), dtype=bool)
        matrix[:self.n, :self.n] = self.leq
        matrix[elements(below), self.n] = True
        matrix[self.n, self.n] = True
        return FinitePoset(matrix)

    def relabel(self, perm: Sequence[int]) -> 'FinitePoset':
        """Poset where old element ``x`` is renamed ``perm[x]``."""
        matrix = np.zeros_like(self.leq)
        index = np.asarray(perm)
        matrix[np.ix_(index, index)] = self.leq
        return FinitePoset(matrix)

    @cached_property
    def canonical_key(self) -> Tuple[int, Tuple[int, ...]]:
        '''
        Isomorphism invariant key.

        Elements are grouped by their (down-set size, up-set size) level,
        the key is the lexicographically smallest tuple of up-set row masks
        over all relabelings respecting that grouping.
        '''
        level = [(popcount(self.down_masks[x]), popcount(self.up_masks[x])) for x in range(self.n)]
        order = sorted(range(self.n), key=level.__getitem__)
        blocks = [list(group) for _, group in groupby(order, key=level.__getitem__)]
        best = None
        for choice in product(*(permutations(block) for block in blocks)):
            sequence = list(chain.from_iterable(choice))
            position = {old: new for new, old in enumerate(sequence)}
            rows = tuple(
                elem_set(position[y] for y in elements(self.up_masks[old]))
                for old in sequence
            )
            if best is None or rows < best:
                best = rows
        return self.n, best

    def is_isomorphic(self, other: 'FinitePoset') -> bool:
        return self.canonical_key == other.canonical_key

    def to_dict(self) -> Dict:
        return {'n': self.n, 'leq': self.leq.tolist()}


@lru_cache(maxsize=None)
def _poset_classes(n: int) -> Tuple[FinitePoset, ...]:
    if n == 1:
        return (FinitePoset.chain(1),)
    found: Dict[Tuple, FinitePoset] = {}
    for smaller in _poset_classes(n - 1):
        for below in smaller.lower_sets:
            candidate = smaller.extend_maximal(below)
            found.setdefault(candidate.canonical_key, candidate)
    logger.debug('Found {} poset classes of size {}.'.format(len(found), n))
    return tuple(found[key] for key in sorted(found))


def enumerate_posets(n: int, cap: int = DEFAULT_POSET_CAP) -> Iterator[FinitePoset]:
    '''
    One representative per isomorphism class of posets with ``n`` elements.

    Every poset is a smaller poset plus a maximal element sitting over one
    of its lower sets, so classes are grown level by level and deduplicated
    by :attr:`FinitePoset.canonical_key`.
    '''
    if n < 1:
        raise InvalidParameter(f'poset size must be positive, got {n}')
    check_cap('max_poset_n', n, cap)
    return iter(_poset_classes(n))


class NiceFamily:
    """
    Nonempty family of distinct subsets of ``range(ground)`` closed under
    pairwise intersection. Members are addressed by their position.
    """

    def __init__(self, ground: int, members: Sequence[ElemSet]):
        members = tuple(int(m) for m in members)
        if not members:
            raise EmptyModel()
        if ground < 0 or any(m < 0 or m >> ground for m in members):
            raise InvalidParameter(f'members must be subsets of a {ground}-element ground set')
        if len(set(members)) != len(members):
            raise InvalidParameter('members must be distinct')
        self.ground = ground
        self.members = members
        self._index = {m: i for i, m in enumerate(members)}
        for i, x in enumerate(members):
            for j, y in enumerate(members[i + 1:], i + 1):
                if x & y not in self._index:
                    raise InvalidParameter(
                        f'intersection of members {i} and {j} is missing', witness=(i, j)
                    )

    @classmethod
    def from_sets(cls, ground: int, members: Iterable[Iterable[int]]) -> 'NiceFamily':
        return cls(ground, [elem_set(m) for m in members])

    def __len__(self) -> int:
        return len(self.members)

    def __repr__(self) -> Text:
        return f'NiceFamily(ground={self.ground}, members={[elements(m) for m in self.members]})'

    def index(self, mask: ElemSet) -> Optional[int]:
        return self._index.get(mask)

    @cached_property
    def poset(self) -> FinitePoset:
        size = len(self.members)
        matrix = np.array(
            [[x & ~y == 0 for y in self.members] for x in self.members], dtype=bool
        ).reshape(size, size)
        return FinitePoset(matrix)

    def meet(self, i: int, j: int) -> int:
        return self._index[self.members[i] & self.members[j]]

    def content(self, points: ElemSet) -> ElemSet:
        """Union of the members in ``points``."""
        return reduce(lambda acc, i: acc | self.members[i], elements(points), 0)

    def common(self, points: ElemSet) -> ElemSet:
        """Intersection of the members in ``points``."""
        return reduce(lambda acc, i: acc & self.members[i], elements(points), full_set(self.ground))

    def between(self, low: int, high: int) -> ElemSet:
        bottom, top = self.members[low], self.members[high]
        return elem_set(
            i for i, m in enumerate(self.members)
            if bottom & ~m == 0 and m & ~top == 0
        )

    @cached_property
    def canonical_key(self) -> Tuple[int, Tuple[ElemSet, ...]]:
        return self.ground, _family_key(self.ground, self.members)

    def to_dict(self) -> Dict:
        return {'ground': self.ground, 'members': [elements(m) for m in self.members]}


def _permute_mask(mask: ElemSet, perm: Sequence[int]) -> ElemSet:
    return elem_set(perm[x] for x in elements(mask))


def _family_key(ground: int, members: Sequence[ElemSet]) -> Tuple[ElemSet, ...]:
    return min(
        tuple(sorted(_permute_mask(m, perm) for m in members))
        for perm in permutations(range(ground))
    )


def enumerate_nice_families(ground: int, max_members: int, cap: int = None) -> Iterator[NiceFamily]:
    '''
    All intersection-closed families over ``range(ground)`` with at most
    ``max_members`` members, one per orbit of ground permutations.

    Families are grown in increasing mask order. A new mask ``x`` is only
    accepted when ``x & y`` is already chosen for every chosen ``y``, which
    is exact because ``x & y`` never exceeds either operand.
    '''
    if ground < 1 or max_members < 1:
        raise InvalidParameter('ground and max_members must be positive')
    check_cap('family_ground', ground)
    check_cap('family_members', max_members, cap)
    universe = full_set(ground) + 1
    found: Dict[Tuple, Tuple[ElemSet, ...]] = {}

    def extend(chosen: List[ElemSet], present: set, start: int):
        if chosen:
            found.setdefault(_family_key(ground, chosen), tuple(chosen))
        if len(chosen) == max_members:
            return
        for mask in range(start, universe):
            if all(mask & other in present for other in chosen):
                chosen.append(mask)
                present.add(mask)
                extend(chosen, present, mask + 1)
                present.discard(mask)
                chosen.pop()

    extend([], set(), 0)
    logger.debug('Found {} families over {} points.'.format(len(found), ground))
    return (NiceFamily(ground, found[key]) for key in sorted(found))
