"""
Fractional ideals of a valuation domain with value group R.

Every nonzero ideal is a cut of the value group: ``Cut(g, closed)`` holds the
elements of value at least ``g``, ``Cut(g, open)`` those of value above ``g``.
Cut points are kept as exact rationals.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Text, Tuple, Union

import numpy as np

from .constants import Bound
from .exceptions import DegenerateFamily, InvalidParameter, UnsupportedDescriptor
from .utils import check_cap

logger = logging.getLogger('nicetop')
Rational = Union[int, Fraction, Text]


def as_fraction(value: Optional[Rational]) -> Optional[Fraction]:
    if value is None or isinstance(value, Fraction):
        return value
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as err:
        raise InvalidParameter(f'{value!r} is not a rational number') from err


@dataclass(frozen=True)
class CutIdeal:
    gamma: Optional[Fraction] = None
    bound: Bound = Bound.CLOSED

    def __post_init__(self):
        object.__setattr__(self, 'gamma', as_fraction(self.gamma))
        object.__setattr__(self, 'bound', Bound(self.bound))
        if self.gamma is None:
            object.__setattr__(self, 'bound', Bound.CLOSED)

    @classmethod
    def zero(cls) -> 'CutIdeal':
        return cls(None)

    @classmethod
    def closed(cls, gamma: Rational) -> 'CutIdeal':
        return cls(gamma, Bound.CLOSED)

    @classmethod
    def open(cls, gamma: Rational) -> 'CutIdeal':
        return cls(gamma, Bound.OPEN)

    @classmethod
    def unit(cls) -> 'CutIdeal':
        return cls(0, Bound.CLOSED)

    @classmethod
    def parse(cls, text: Text) -> 'CutIdeal':
        '''
        Read the command line notation: ``zero``, ``2``, ``1/3`` (closed cuts)
        and ``>2`` (open cuts).
        '''
        text = str(text).strip()
        if text.lower() == 'zero':
            return cls.zero()
        if text.startswith('>'):
            return cls.open(text[1:].strip())
        return cls.closed(text)

    @classmethod
    def from_dict(cls, data: Dict) -> 'CutIdeal':
        if data.get('zero'):
            return cls.zero()
        return cls(data['gamma'], data.get('bound', Bound.CLOSED))

    @property
    def is_zero(self) -> bool:
        return self.gamma is None

    @property
    def is_closed(self) -> bool:
        return self.bound == Bound.CLOSED

    def is_unit(self) -> bool:
        return self == self.unit()

    def is_domain_ideal(self) -> bool:
        """True for the ideals of the valuation domain itself."""
        return self.is_zero or self.gamma >= 0

    def contains(self, other: 'CutIdeal') -> bool:
        if other.is_zero:
            return True
        if self.is_zero:
            return False
        if self.gamma != other.gamma:
            return self.gamma < other.gamma
        return self.is_closed or not other.is_closed

    def __le__(self, other: 'CutIdeal') -> bool:
        return other.contains(self)

    def __lt__(self, other: 'CutIdeal') -> bool:
        return self != other and other.contains(self)

    def __ge__(self, other: 'CutIdeal') -> bool:
        return self.contains(other)

    def __gt__(self, other: 'CutIdeal') -> bool:
        return self != other and self.contains(other)

    def multiply(self, other: 'CutIdeal') -> 'CutIdeal':
        if self.is_zero or other.is_zero:
            return self.zero()
        bound = Bound.CLOSED if self.is_closed and other.is_closed else Bound.OPEN
        return CutIdeal(self.gamma + other.gamma, bound)

    def intersect(self, other: 'CutIdeal') -> 'CutIdeal':
        return other if self.contains(other) else self

    def sum(self, other: 'CutIdeal') -> 'CutIdeal':
        return self if self.contains(other) else other

    __mul__ = multiply
    __and__ = intersect
    __or__ = sum

    def __str__(self) -> Text:
        if self.is_zero:
            return 'zero'
        return ('' if self.is_closed else '>') + str(self.gamma)

    def __repr__(self) -> Text:
        return f'CutIdeal({self})'

    def to_dict(self) -> Dict:
        if self.is_zero:
            return {'zero': True}
        return {'gamma': str(self.gamma), 'bound': self.bound.value}


@dataclass(frozen=True)
class ParamIdealFamily:
    '''
    The chain ``t -> Cut(slope * t + offset, bound)`` for ``t`` in the open
    interval ``(lo, hi)``. ``None`` stands for an infinite end.
    '''
    slope: Fraction
    offset: Fraction
    lo: Optional[Fraction]
    hi: Optional[Fraction]
    bound: Bound = Bound.CLOSED

    def __post_init__(self):
        for name in ('slope', 'offset', 'lo', 'hi'):
            object.__setattr__(self, name, as_fraction(getattr(self, name)))
        object.__setattr__(self, 'bound', Bound(self.bound))
        if self.slope is None or self.offset is None:
            raise InvalidParameter('slope and offset are required')
        if self.lo is not None and self.hi is not None and self.lo >= self.hi:
            raise DegenerateFamily(self.lo, self.hi)

    def gamma(self, t: Rational) -> Fraction:
        return self.slope * as_fraction(t) + self.offset

    def inside(self, t: Rational) -> bool:
        t = as_fraction(t)
        return (self.lo is None or t > self.lo) and (self.hi is None or t < self.hi)

    def member(self, t: Rational) -> CutIdeal:
        if not self.inside(t):
            raise InvalidParameter(f'parameter {t} is outside ({self.lo}, {self.hi})')
        return CutIdeal(self.gamma(t), self.bound)

    @property
    def is_constant(self) -> bool:
        return self.slope == 0

    def value_range(self) -> Tuple[Optional[Fraction], Optional[Fraction]]:
        '''
        Infimum and supremum of the cut points, ``None`` when infinite.
        Neither is attained unless the family is constant.
        '''
        if self.is_constant:
            return self.offset, self.offset
        ends = [None if t is None else self.gamma(t) for t in (self.lo, self.hi)]
        return tuple(ends) if self.slope > 0 else tuple(reversed(ends))

    def sample(self) -> Fraction:
        """Some parameter inside the interval."""
        if self.lo is not None and self.hi is not None:
            return (self.lo + self.hi) / 2
        if self.lo is not None:
            return self.lo + 1
        if self.hi is not None:
            return self.hi - 1
        return Fraction(0)

    def parameter_for(self, gamma: Fraction) -> Fraction:
        return (gamma - self.offset) / self.slope

    def deeper_than(self, gamma: Fraction) -> Fraction:
        '''
        Parameter whose member has a cut point strictly above ``gamma``.

        :param gamma: value below the supremum of the family
        '''
        _, top = self.value_range()
        if top is not None and top <= gamma:
            raise InvalidParameter(f'no member lies strictly inside the cut {gamma}')
        target = gamma + 1 if top is None else (gamma + top) / 2
        low, _ = self.value_range()
        if low is not None and target <= low:
            return self.sample()
        return self.parameter_for(target)

    def exists_member_containing(self, ideal: CutIdeal) -> bool:
        if self.is_constant:
            return self.member(self.sample()).contains(ideal)
        low, _ = self.value_range()
        return ideal.is_zero or low is None or low < ideal.gamma

    def exists_member_within(self, ideal: CutIdeal) -> bool:
        if self.is_constant:
            return ideal.contains(self.member(self.sample()))
        _, top = self.value_range()
        return not ideal.is_zero and (top is None or top > ideal.gamma)

    def exists_member_strictly_within(self, ideal: CutIdeal) -> bool:
        if self.is_constant:
            return ideal > self.member(self.sample())
        return self.exists_member_within(ideal)

    def to_dict(self) -> Dict:
        as_text = lambda value: None if value is None else str(value)
        return {
            'slope': str(self.slope),
            'offset': str(self.offset),
            'lo': as_text(self.lo),
            'hi': as_text(self.hi),
            'bound': self.bound.value,
        }


def intersect_family(family: ParamIdealFamily) -> CutIdeal:
    '''
    Intersection of every member of a chain. The supremum of the cut
    points is never attained, so the limit cut is closed.
    '''
    if family.is_constant:
        return family.member(family.sample())
    _, top = family.value_range()
    if top is None:
        return CutIdeal.zero()
    return CutIdeal.closed(top)


def union_family(family: ParamIdealFamily) -> CutIdeal:
    if family.is_constant:
        return family.member(family.sample())
    low, _ = family.value_range()
    if low is None:
        raise UnsupportedDescriptor('union of an unbounded ideal chain', witness=family.to_dict())
    return CutIdeal.open(low)


@dataclass
class OracleReport:
    pairs: int
    q: int
    bound: int
    checked: Dict[Text, int] = field(default_factory=dict)
    mismatches: List[Dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> Dict:
        return {
            'pairs': self.pairs,
            'grid_q': self.q,
            'grid_bound': self.bound,
            'checked': dict(sorted(self.checked.items())),
            'mismatches': self.mismatches,
        }


class GridOracle:
    '''
    Independent setwise model of cut ideals: the value set of an ideal is
    sampled on the grid ``(1/q)Z`` within ``[-B, B]``.

    Products are Minkowski sums of value sets. They are computed on the half
    step grid so that the smallest value of an open cut is not doubled, and
    read back on the coarse grid.
    '''
    __slots__ = ('q', 'bound', 'coarse', 'fine', 'length', '_spectra')

    def __init__(self, q: int = 64, bound: int = 16):
        if q < 1 or bound < 1:
            raise InvalidParameter('grid step and bound must be positive')
        self.q = check_cap('grid_q', q)
        self.bound = check_cap('grid_bound', bound)
        self.coarse = np.arange(-bound * q, bound * q + 1)
        self.fine = np.arange(-2 * bound * q, 2 * bound * q + 1)
        self.length = 1 << (2 * len(self.fine) - 2).bit_length()
        self._spectra = {}

    def _values(self, ideal: CutIdeal, grid: np.ndarray, scale: int) -> np.ndarray:
        if ideal.is_zero:
            return np.zeros(grid.shape, dtype=bool)
        threshold = ideal.gamma * scale
        if ideal.is_closed:
            return grid >= threshold
        return grid > threshold

    def values(self, ideal: CutIdeal) -> np.ndarray:
        return self._values(ideal, self.coarse, self.q)

    def _spectrum(self, ideal: CutIdeal) -> np.ndarray:
        if ideal not in self._spectra:
            values = self._values(ideal, self.fine, 2 * self.q).astype(float)
            self._spectra[ideal] = np.fft.rfft(values, self.length)
        return self._spectra[ideal]

    def product(self, left: CutIdeal, right: CutIdeal) -> np.ndarray:
        convolved = np.fft.irfft(self._spectrum(left) * self._spectrum(right), self.length)
        hits = convolved > 0.5
        # index i + j of the convolution holds the value (i + j - 2 * offset) / (2q)
        offset = 2 * self.bound * self.q
        return hits[2 * self.coarse + 2 * offset]

    def setwise(self, operation: Text, left: CutIdeal, right: CutIdeal) -> np.ndarray:
        if operation == 'multiply':
            return self.product(left, right)
        if operation == 'intersect':
            return self.values(left) & self.values(right)
        if operation == 'sum':
            return self.values(left) | self.values(right)
        raise InvalidParameter(f'unknown operation {operation}')

    def agrees(self, operation: Text, left: CutIdeal, right: CutIdeal) -> bool:
        exact = getattr(left, operation)(right)
        return bool(np.array_equal(self.values(exact), self.setwise(operation, left, right)))

    def random_cut(self, rng: np.random.Generator) -> CutIdeal:
        if rng.random() < 0.05:
            return CutIdeal.zero()
        half = self.bound * self.q // 2
        gamma = Fraction(int(rng.integers(-half, half)), self.q)
        return CutIdeal(gamma, Bound.OPEN if rng.random() < 0.5 else Bound.CLOSED)


def run_grid_oracle(pairs: int, q: int = 64, bound: int = 16, seed: int = 0) -> OracleReport:
    '''
    Compare cut arithmetic with the grid oracle on random pairs.

    :param pairs: number of random pairs
    :param q: grid denominator
    :param bound: grid half width
    :param seed: random seed
    '''
    check_cap('pairs', pairs)
    oracle = GridOracle(q, bound)
    rng = np.random.default_rng(seed)
    report = OracleReport(pairs=pairs, q=q, bound=bound)
    for _ in range(pairs):
        left, right = oracle.random_cut(rng), oracle.random_cut(rng)
        for operation in ('multiply', 'intersect', 'sum'):
            report.checked[operation] = report.checked.get(operation, 0) + 1
            if not oracle.agrees(operation, left, right):
                report.mismatches.append({
                    'operation': operation, 'left': str(left), 'right': str(right)
                })
    if report.mismatches:
        logger.warning('Grid oracle disagrees on {} cases.'.format(len(report.mismatches)))
    return report
