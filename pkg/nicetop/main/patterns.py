"""
Pattern subrings of the n x n matrices over the fraction field of a valuation
domain with value group R.

Entry ``(i, j)`` of a pattern ring is the cut ideal of allowed ``(i, j)``
coefficients. Open families are unions of principal opens ``V(G)``, with
finitely many fixed generators and parametric pieces whose designated entry
runs through a chain of cut ideals.
"""
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Iterable, List, NamedTuple, Optional, Sequence, Text, Tuple

import numpy as np
import sympy

from .alexandroff import Irreducibility, SpaceModel, Sobriety
from .conditions import OpenLadder
from .exceptions import (
    EmptyFamily,
    InvalidParameter,
    NotDirected,
    PatternViolation,
    SizeMismatch,
    UnsupportedDescriptor,
)
from .utils import check_cap
from .valuation import CutIdeal, ParamIdealFamily, intersect_family, union_family

logger = logging.getLogger('nicetop')
Position = Tuple[int, int]
UNIT = CutIdeal.unit()


@dataclass(frozen=True)
class PatternRing:
    entries: Tuple[Tuple[CutIdeal, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.entries)
        if not rows or any(len(row) != len(rows) for row in rows):
            raise InvalidParameter('pattern must be a nonempty square matrix of cuts')
        object.__setattr__(self, 'entries', rows)

    @classmethod
    def full(cls, n: int) -> 'PatternRing':
        return cls(tuple((UNIT,) * n for _ in range(n)))

    @classmethod
    def from_dict(cls, data: Dict) -> 'PatternRing':
        ring = cls(tuple(tuple(CutIdeal.from_dict(cut) for cut in row) for row in data['entries']))
        if 'n' in data and data['n'] != ring.n:
            raise SizeMismatch(data['n'], ring.n)
        return ring

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, position: Position) -> CutIdeal:
        i, j = position
        return self.entries[i][j]

    def positions(self) -> Iterable[Position]:
        return ((i, j) for i in range(self.n) for j in range(self.n))

    def replace(self, position: Position, ideal: CutIdeal) -> 'PatternRing':
        i, j = position
        rows = [list(row) for row in self.entries]
        rows[i][j] = ideal
        return PatternRing(tuple(tuple(row) for row in rows))

    def _same_size(self, other: 'PatternRing') -> None:
        if self.n != other.n:
            raise SizeMismatch(self.n, other.n)

    def __le__(self, other: 'PatternRing') -> bool:
        self._same_size(other)
        return all(self[p] <= other[p] for p in self.positions())

    def __lt__(self, other: 'PatternRing') -> bool:
        return self != other and self <= other

    def __ge__(self, other: 'PatternRing') -> bool:
        return other <= self

    def __gt__(self, other: 'PatternRing') -> bool:
        return other < self

    def __and__(self, other: 'PatternRing') -> 'PatternRing':
        return intersect_rings(self, other)

    def entrywise_sum(self, other: 'PatternRing') -> 'PatternRing':
        self._same_size(other)
        return PatternRing(tuple(
            tuple(self[i, j] | other[i, j] for j in range(self.n)) for i in range(self.n)
        ))

    def agrees_off(self, other: 'PatternRing', position: Position, relation=CutIdeal.__le__) -> bool:
        """Compare every entry except ``position``."""
        return all(relation(self[p], other[p]) for p in self.positions() if p != position)

    def __str__(self) -> Text:
        return '[' + '; '.join(', '.join(str(cut) for cut in row) for row in self.entries) + ']'

    def to_dict(self) -> Dict:
        return {'n': self.n, 'entries': [[cut.to_dict() for cut in row] for row in self.entries]}


@dataclass
class PatternReport:
    multiplicatively_closed: bool = True
    unital: bool = True
    scalar_meet: bool = True
    spans: bool = True
    violations: List[Dict] = field(default_factory=list)

    @property
    def nice(self) -> bool:
        return self.scalar_meet and self.spans

    @property
    def valid(self) -> bool:
        return self.multiplicatively_closed and self.unital and self.nice

    def to_dict(self) -> Dict:
        return {
            'multiplicatively_closed': self.multiplicatively_closed,
            'unital': self.unital,
            'scalar_meet': self.scalar_meet,
            'spans': self.spans,
            'nice': self.nice,
            'violations': self.violations,
        }


def _closure_term(ring: PatternRing, i: int, j: int, k: int, substitute=None) -> Tuple[CutIdeal, CutIdeal]:
    look = substitute or ring.__getitem__
    return look((i, k)) * look((k, j)), look((i, j))


def _scalar_checks(ring: PatternRing, report: PatternReport) -> PatternReport:
    diagonal = [ring[i, i] for i in range(ring.n)]
    for i, cut in enumerate(diagonal):
        if not cut.contains(UNIT):
            report.unital = False
            report.violations.append({'kind': 'unital', 'witness': [i, i]})
    meet = diagonal[0]
    for cut in diagonal[1:]:
        meet = meet & cut
    if meet != UNIT:
        report.scalar_meet = False
        report.violations.append({'kind': 'scalar_meet', 'meet': str(meet)})
    for i, j in ring.positions():
        if ring[i, j].is_zero:
            report.spans = False
            report.violations.append({'kind': 'spans', 'witness': [i, j]})
    return report


def check_pattern(ring: PatternRing) -> PatternReport:
    '''
    Check a pattern for being a unital ring that meets the scalars in the
    valuation domain and spans the full matrix algebra.

    Closure needs ``I_ik * I_kj`` inside ``I_ij`` for every ``k``: the sum of
    the products is the largest of them since cuts are totally ordered.
    Violations carry the witness ``(i, j, k)``.
    '''
    report = PatternReport()
    n = ring.n
    for i in range(n):
        for j in range(n):
            for k in range(n):
                product, target = _closure_term(ring, i, j, k)
                if not target.contains(product):
                    report.multiplicatively_closed = False
                    report.violations.append({'kind': 'closure', 'witness': [i, j, k]})
    return _scalar_checks(ring, report)


def require_pattern(ring: PatternRing) -> PatternRing:
    report = check_pattern(ring)
    if not report.valid:
        raise PatternViolation(report.violations[0], witness=str(ring))
    return ring


def span_rank(ring: PatternRing) -> int:
    '''
    Rank over the fraction field of the scaled matrix units ``t**g * E_ij``,
    one for every nonzero entry ``Cut(g, .)``; ``t`` is a uniformizer-like
    symbol of positive value.
    '''
    t = sympy.Symbol('t', positive=True)
    vectors = []
    for i, j in ring.positions():
        cut = ring[i, j]
        if cut.is_zero:
            continue
        vector = [0] * (ring.n ** 2)
        vector[i * ring.n + j] = t ** sympy.Rational(cut.gamma.numerator, cut.gamma.denominator)
        vectors.append(vector)
    if not vectors:
        return 0
    return sympy.Matrix(vectors).rank()


def intersect_rings(first: PatternRing, second: PatternRing) -> PatternRing:
    first._same_size(second)  # pylint: disable=protected-access
    return PatternRing(tuple(
        tuple(first[i, j] & second[i, j] for j in range(first.n)) for i in range(first.n)
    ))


def union_directed(rings: Sequence[PatternRing]) -> PatternRing:
    '''
    Entrywise union of a directed list of pattern rings.

    :param rings: rings such that every pair lies below some listed ring
    '''
    rings = list(rings)
    if not rings:
        raise EmptyFamily()
    for ring in rings[1:]:
        rings[0]._same_size(ring)  # pylint: disable=protected-access
    for a, first in enumerate(rings):
        for b in range(a + 1, len(rings)):
            second = rings[b]
            if not any(first <= upper and second <= upper for upper in rings):
                raise NotDirected((a, b), witness=(a, b))
    result = rings[0]
    for ring in rings[1:]:
        result = result.entrywise_sum(ring)
    return result


@dataclass(frozen=True)
class ParamPatternFamily:
    """Rings ``G(t)``: ``base`` with the designated entry replaced by member ``t`` of ``family``."""
    base: PatternRing
    position: Position
    family: ParamIdealFamily

    def __post_init__(self):
        i, j = self.position
        if not (0 <= i < self.base.n and 0 <= j < self.base.n):
            raise InvalidParameter(f'position {self.position} is outside the matrix')
        if i == j:
            raise UnsupportedDescriptor('parametric diagonal entry', witness=self.position)

    @property
    def n(self) -> int:
        return self.base.n

    def member(self, t) -> PatternRing:
        return self.base.replace(self.position, self.family.member(t))

    def intersection_limit(self) -> PatternRing:
        return self.base.replace(self.position, intersect_family(self.family))

    def union_limit(self) -> PatternRing:
        return self.base.replace(self.position, union_family(self.family))

    def contains_member_below(self, ring: PatternRing) -> bool:
        """Whether some ``G(t)`` lies inside ``ring``."""
        return (
            self.base.agrees_off(ring, self.position)
            and self.family.exists_member_within(ring[self.position])
        )

    def check_members(self) -> PatternReport:
        '''
        Check every ``G(t)`` at once.

        A closure term holds the designated entry at most once on the
        product side. Terms with it only on the product side hold for all
        members iff they hold for the union of the chain, terms with it only
        as target iff they hold for the intersection, and terms with it on
        both sides do not depend on ``t``.
        '''
        upper = self.union_limit()
        lower = self.intersection_limit()
        sample = self.member(self.family.sample())
        report = PatternReport()
        n, p = self.n, self.position
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    on_left = p in ((i, k), (k, j))
                    on_right = p == (i, j)
                    ring = sample if on_left and on_right else upper if on_left else lower if on_right else sample
                    product, target = _closure_term(ring, i, j, k)
                    if not target.contains(product):
                        report.multiplicatively_closed = False
                        report.violations.append({'kind': 'closure', 'witness': [i, j, k]})
        return _scalar_checks(sample, report)

    def to_dict(self) -> Dict:
        return {'base': self.base.to_dict(), 'position': list(self.position), 'family': self.family.to_dict()}


@dataclass(frozen=True)
class SymbolicOpenFamily:
    """The open set ``union of V(G) over generators and over every G(t) of every piece``."""
    generators: Tuple[PatternRing, ...] = ()
    pieces: Tuple[ParamPatternFamily, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'generators', tuple(self.generators))
        object.__setattr__(self, 'pieces', tuple(self.pieces))
        sizes = {ring.n for ring in self.generators} | {piece.n for piece in self.pieces}
        if len(sizes) > 1:
            raise SizeMismatch(*sorted(sizes)[:2])

    @property
    def n(self) -> Optional[int]:
        for ring in self.generators:
            return ring.n
        for piece in self.pieces:
            return piece.n
        return None

    @property
    def is_empty(self) -> bool:
        return not self.generators and not self.pieces

    def to_dict(self) -> Dict:
        return {
            'generators': [ring.to_dict() for ring in self.generators],
            'pieces': [piece.to_dict() for piece in self.pieces],
        }


def member_of(family: SymbolicOpenFamily, ring: PatternRing) -> bool:
    if family.n is not None and family.n != ring.n:
        raise SizeMismatch(family.n, ring.n)
    return (
        any(generator <= ring for generator in family.generators)
        or any(piece.contains_member_below(ring) for piece in family.pieces)
    )


def infimum_of_open(family: SymbolicOpenFamily) -> PatternRing:
    '''
    Entrywise intersection of all members. Every member contains a generator
    or some ``G(t)``, so generators and piece limits are enough.
    '''
    if family.is_empty:
        raise EmptyFamily()
    rings = list(family.generators) + [piece.intersection_limit() for piece in family.pieces]
    result = rings[0]
    for ring in rings[1:]:
        result = result & ring
    return result


def _supported_piece(family: SymbolicOpenFamily) -> Optional[ParamPatternFamily]:
    if len(family.pieces) > 1:
        raise UnsupportedDescriptor('more than one parametric piece', witness=len(family.pieces))
    return family.pieces[0] if family.pieces else None


def minimal_members(family: SymbolicOpenFamily) -> List[PatternRing]:
    '''
    Minimal members of the open set. A nonconstant piece never contributes
    one: below any ``G(t)`` there is a deeper ``G(s)``.
    '''
    piece = _supported_piece(family)
    generators = list(dict.fromkeys(family.generators))
    if piece is not None and piece.family.is_constant:
        generators = list(dict.fromkeys(generators + [piece.member(piece.family.sample())]))
        piece = None
    minimal = []
    for ring in generators:
        if any(other < ring for other in generators):
            continue
        if piece is not None and piece.contains_member_below(ring):
            continue
        minimal.append(ring)
    return minimal


class MeetSweep(NamedTuple):
    closed: bool
    witness: Any = None


def meet_sweep(family: SymbolicOpenFamily, generator: PatternRing) -> MeetSweep:
    '''
    Decide whether ``generator & G(t)`` is a member for every ``t`` of the
    single piece.

    Parameters where ``G(t)`` contains the generator's designated entry give
    one constant ring. On the rest the meet runs through the piece chain
    itself: it is covered by the piece when the base sits inside the
    generator off the designated entry, and by a fixed generator ``h`` only
    when ``h`` lies inside the intersection limit there.
    '''
    piece = _supported_piece(family)
    p = piece.position
    chain = piece.family
    corner = generator[p]
    shared = intersect_rings(generator, piece.base)
    if chain.exists_member_containing(corner):
        constant = shared.replace(p, corner)
        if not member_of(family, constant):
            return MeetSweep(False, {'ring': str(constant), 'parameters': 'containing'})
    if not chain.exists_member_strictly_within(corner):
        return MeetSweep(True)
    if piece.base.agrees_off(generator, p):
        return MeetSweep(True)
    limit = intersect_family(chain)
    helpers = [h for h in family.generators if h.agrees_off(shared, p)]
    if any(limit.contains(h[p]) for h in helpers):
        return MeetSweep(True)
    floor = corner.gamma if not corner.is_zero else None
    blocking = [h[p].gamma for h in helpers if not h[p].is_zero]
    levels = [value for value in [floor] + blocking if value is not None]
    if chain.is_constant:
        t = chain.sample()
    elif levels:
        t = chain.deeper_than(max(levels))
    else:
        t = chain.sample()
    return MeetSweep(False, {'ring': str(shared.replace(p, chain.member(t))), 'parameter': str(t)})


def _nice(ring: PatternRing) -> bool:
    return check_pattern(ring).valid


def eval_open_conditions_symbolic(family: SymbolicOpenFamily) -> OpenLadder:
    '''
    Evaluate the open-set conditions exactly on a symbolic open family.

    A principal open is generated by the infimum, so principality and
    closure under arbitrary intersections both mean that the infimum is a
    member. The infimum generates the open set when either it is a member,
    or it is not a nice ring and every nice ring above it already lies above
    the piece base with arbitrarily deep members available.
    '''
    if family.is_empty:
        return OpenLadder.vacuous_ladder()
    piece = _supported_piece(family)
    infimum = infimum_of_open(family)
    principal = member_of(family, infimum)

    if principal:
        generates = True
    elif _nice(infimum):
        generates = False
    elif (
            piece is not None
            and piece.base.agrees_off(infimum, piece.position)
            and intersect_family(piece.family).is_zero
    ):
        generates = True
    else:
        raise UnsupportedDescriptor('infimum outside the nice rings', witness=str(infimum))

    meet_closed = all(
        member_of(family, first & second)
        for a, first in enumerate(family.generators)
        for second in family.generators[a + 1:]
    )
    if meet_closed and piece is not None:
        meet_closed = all(meet_sweep(family, generator).closed for generator in family.generators)

    return OpenLadder(
        principal=principal,
        intersection_closed=principal,
        infimum_generates=generates,
        infimum_bounded=generates,
        meet_closed=meet_closed,
        single_minimal=len(minimal_members(family)) <= 1,
    )


def _valid_domain_ideal(cut: CutIdeal, name: Text) -> CutIdeal:
    if cut.is_zero or not cut.is_domain_ideal():
        raise InvalidParameter(f'{name} must be a nonzero ideal of the valuation domain, got {cut}')
    return cut


def _corner_ring(corner: CutIdeal, below: CutIdeal) -> PatternRing:
    return PatternRing(((UNIT, corner), (below, UNIT)))


def infimum_escape_family(r0, j1: CutIdeal) -> SymbolicOpenFamily:
    '''
    Union of ``V(R_r)`` for ``0 < r < r0``, where ``R_r`` has the corner
    ``Cut(r, closed)`` above the diagonal and ``j1`` below it. The family is
    closed under finite intersections, its infimum ``R_r0`` is not a member.
    '''
    r0 = Fraction(r0)
    if r0 <= 0:
        raise InvalidParameter(f'r0 must be positive, got {r0}')
    j1 = _valid_domain_ideal(j1, 'J1')
    chain = ParamIdealFamily(slope=1, offset=0, lo=0, hi=r0)
    return SymbolicOpenFamily(pieces=(ParamPatternFamily(_corner_ring(UNIT, j1), (0, 1), chain),))


def unique_minimal_family(r0, j1: CutIdeal, j2: CutIdeal) -> SymbolicOpenFamily:
    '''
    The escape family together with ``V(R')``, where ``R'`` has the corner
    ``Cut(r0, closed)`` and the strictly larger ideal ``j2`` below the diagonal.
    ``R'`` is the only minimal member but meets every ``R_r`` outside the family.
    '''
    escape = infimum_escape_family(r0, j1)
    j2 = _valid_domain_ideal(j2, 'J2')
    if not j2 > j1:
        raise InvalidParameter(f'J2 = {j2} must strictly contain J1 = {j1}')
    special = _corner_ring(CutIdeal.closed(Fraction(r0)), j2)
    return SymbolicOpenFamily(generators=(special,), pieces=escape.pieces)


def vanishing_infimum_family(j1: CutIdeal) -> SymbolicOpenFamily:
    '''
    Union of ``V(R_t)`` for every ``t > 0``. The infimum has a zero corner,
    so it is not a nice ring although every nice ring above it is a member.
    '''
    j1 = _valid_domain_ideal(j1, 'J1')
    chain = ParamIdealFamily(slope=1, offset=0, lo=0, hi=None)
    return SymbolicOpenFamily(pieces=(ParamPatternFamily(_corner_ring(UNIT, j1), (0, 1), chain),))


def chain_ideal(k: int) -> CutIdeal:
    return CutIdeal.closed(Fraction(1, k))


def chain_ring(n: int, k: int) -> PatternRing:
    """All entries are the valuation domain except the last column above the corner."""
    last = n - 1
    return PatternRing(tuple(
        tuple(chain_ideal(k) if j == last and i != last else UNIT for j in range(n))
        for i in range(n)
    ))


def ascending_chain(n: int, depth: int) -> List[PatternRing]:
    if n < 2 or depth < 1:
        raise InvalidParameter(f'need n >= 2 and depth >= 1, got n={n}, depth={depth}')
    check_cap('chain_depth', depth)
    return [chain_ring(n, k) for k in range(1, depth + 1)]


class ChainUnion(NamedTuple):
    """Union of the closures of every ring of the ascending chain."""
    n: int


class ChainTruncation(NamedTuple):
    """Union of the closures of the first ``depth`` rings."""
    n: int
    depth: int


class PuncturedClosure(NamedTuple):
    """Closure of ``top`` without ``top`` itself."""
    top: PatternRing


class PrincipalClosure(NamedTuple):
    top: PatternRing


class AscendingChainSpace(SpaceModel):
    '''
    Symbolic model of the nice pattern rings of size ``n`` around the
    ascending chain. Points are :class:`PatternRing` values, closed sets are
    descriptors.
    '''
    finite = False

    def __init__(self, n: int):
        if n < 2:
            raise InvalidParameter(f'need n >= 2, got {n}')
        self.n = n

    def leq(self, x: PatternRing, y: PatternRing) -> bool:
        return x <= y

    def minimal_open(self, x: PatternRing) -> SymbolicOpenFamily:
        return SymbolicOpenFamily(generators=(x,))

    def closure_point(self, x: PatternRing) -> PrincipalClosure:
        return PrincipalClosure(x)

    def union_limit(self) -> CutIdeal:
        return union_family(ParamIdealFamily(slope=1, offset=0, lo=0, hi=None))

    def covering_index(self, ring: PatternRing) -> Optional[int]:
        '''
        Smallest ``k`` whose chain ring can lie above ``ring`` judging by the
        last column, ``None`` when no chain ring can.
        '''
        last = self.n - 1
        corner = [ring[i, last] for i in range(last)]
        if any(cut.is_zero or cut.gamma <= 0 for cut in corner):
            return None
        return max(1, math.ceil(1 / min(cut.gamma for cut in corner)))

    def contains(self, descriptor, ring: PatternRing) -> bool:
        if ring.n != self.n:
            raise SizeMismatch(self.n, ring.n)
        if isinstance(descriptor, (PrincipalClosure, ChainTruncation)):
            return ring <= self._top(descriptor) and _nice(ring)
        if isinstance(descriptor, PuncturedClosure):
            return ring < descriptor.top and _nice(ring)
        if isinstance(descriptor, ChainUnion):
            k = self.covering_index(ring)
            return k is not None and ring <= chain_ring(self.n, k) and _nice(ring)
        raise UnsupportedDescriptor(descriptor)

    def _top(self, descriptor) -> PatternRing:
        if isinstance(descriptor, ChainTruncation):
            return chain_ring(self.n, descriptor.depth)
        return descriptor.top

    def closure_of(self, descriptor):
        if isinstance(descriptor, (PrincipalClosure, ChainTruncation, ChainUnion, PuncturedClosure)):
            return descriptor
        if isinstance(descriptor, PatternRing):
            return PrincipalClosure(descriptor)
        raise UnsupportedDescriptor(descriptor)

    def supremum(self) -> PatternRing:
        """Entrywise union of the whole chain."""
        last, limit = self.n - 1, self.union_limit()
        ring = chain_ring(self.n, 1)
        for i in range(last):
            ring = ring.replace((i, last), limit)
        return ring

    def _punctured_witness(self, top: PatternRing) -> Tuple[PatternRing, PatternRing]:
        '''
        Two rings strictly below ``top`` whose entrywise sum is ``top``, so
        their only common upper bound inside the closure is ``top`` itself.
        One deepens the last row, the other the last column, both by one.
        '''
        if top.n != self.n:
            raise SizeMismatch(self.n, top.n)
        if not _nice(top):
            raise UnsupportedDescriptor('punctured closure of a ring outside the space', witness=str(top))
        last = self.n - 1
        deeper_row, deeper_column = top, top
        for j in range(last):
            cut = top[last, j]
            deeper_row = deeper_row.replace((last, j), CutIdeal(cut.gamma + 1, cut.bound))
        for i in range(last):
            cut = top[i, last]
            deeper_column = deeper_column.replace((i, last), CutIdeal(cut.gamma + 1, cut.bound))
        for witness in (deeper_row, deeper_column):
            require_pattern(witness)
        if deeper_row.entrywise_sum(deeper_column) != top:  # nocv
            raise PatternViolation('witnesses do not span the punctured ring', witness=str(top))
        return deeper_row, deeper_column

    def irreducibility_of(self, descriptor) -> Irreducibility:
        '''
        Sets with a generic point are irreducible. Two points of the chain
        union lie under the chain ring of the larger covering index, so the
        union is directed. A punctured closure splits along two witnesses.
        '''
        descriptor = self.closure_of(descriptor)
        if isinstance(descriptor, PuncturedClosure):
            return Irreducibility(False, self._punctured_witness(descriptor.top))
        if isinstance(descriptor, ChainUnion):
            return Irreducibility(True, {'bound': 'chain ring of the larger covering index'})
        return Irreducibility(self.generic_point_of(descriptor) is not None)

    def generic_point_of(self, descriptor) -> Optional[PatternRing]:
        '''
        A generic point lies above every point of the set. For the chain
        union that puts it above the supremum, which then belongs to the set
        too because the set is closed downwards.
        '''
        descriptor = self.closure_of(descriptor)
        if isinstance(descriptor, (PrincipalClosure, ChainTruncation)):
            top = self._top(descriptor)
            return top if _nice(top) else None
        if isinstance(descriptor, ChainUnion):
            supremum = self.supremum()
            return supremum if self.contains(descriptor, supremum) else None
        return None

    def closed_descriptors(self) -> Tuple:
        return ChainTruncation(self.n, 1), ChainUnion(self.n)

    def sobriety(self) -> Sobriety:
        for descriptor in self.closed_descriptors():
            if self.irreducibility_of(descriptor).irreducible and self.generic_point_of(descriptor) is None:
                return Sobriety(False, {
                    'closed_set': type(descriptor).__name__,
                    'n': self.n,
                    'supremum': str(self.supremum()),
                    'union_limit': str(self.union_limit()),
                })
        raise UnsupportedDescriptor('sobriety beyond the registered closed sets')


def sample_directed_families(rng: np.random.Generator, count: int, depth: int = 50) -> List[List[PatternRing]]:
    '''
    Random directed lists of pattern rings: subsets of the ascending chains
    and of the corner chains ``R_r``, shuffled.
    '''
    families = []
    for _ in range(count):
        size = int(rng.integers(1, 8))
        if rng.random() < 0.5:
            n = int(rng.integers(2, 4))
            picks = rng.choice(np.arange(1, depth + 1), size=min(size, depth), replace=False)
            rings = [chain_ring(n, int(k)) for k in picks]
        else:
            j1 = CutIdeal(Fraction(int(rng.integers(0, 5)), 2), 'open' if rng.random() < 0.5 else 'closed')
            picks = rng.choice(np.arange(1, 65), size=size, replace=False)
            rings = [_corner_ring(CutIdeal.closed(Fraction(int(k), 64)), j1) for k in picks]
        families.append(rings)
    return families
