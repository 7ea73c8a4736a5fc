"""
Open and closed condition ladders, exhaustive finite sweeps and the
symbolic certificates for the implications that do not reverse.
"""
import logging
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Sequence, Text, Tuple

import numpy as np

from .alexandroff import (
    FamilySpace,
    FiniteSpace,
    components_by_definition,
    enumerate_topologies,
    intersection_of_nonempty_opens,
    irreducible_components,
    is_irreducible,
    is_irreducible_by_cover,
    is_sober,
    specialization_order,
    topology_from_order,
)
from .conditions import ClosedLadder, IrreducibleOpenLadder, OpenLadder, Violation
from .constants import EXHAUSTIVE_COVER_POINTS
from .exceptions import EmptySet, ImplicationViolation, NotClosed, NotOpen, UnsupportedDescriptor
from .order import ElemSet, FinitePoset, NiceFamily, elements, popcount, submasks
from .patterns import (
    AscendingChainSpace,
    ChainTruncation,
    ChainUnion,
    SymbolicOpenFamily,
    check_pattern,
    chain_ring,
    eval_open_conditions_symbolic,
    infimum_escape_family,
    infimum_of_open,
    meet_sweep,
    member_of,
    minimal_members,
    sample_directed_families,
    union_directed,
    unique_minimal_family,
    vanishing_infimum_family,
)
from .utils import check_cap
from .valuation import CutIdeal

logger = logging.getLogger('nicetop')


def _has(points: ElemSet, x: Optional[int]) -> bool:
    return x is not None and bool(points >> x & 1)


def _pairs(items: Sequence[int]) -> List[ElemSet]:
    return [(1 << x) | (1 << y) for i, x in enumerate(items) for y in items[i + 1:]]


def _finite(model) -> FiniteSpace:
    if not getattr(model, 'finite', False):
        raise UnsupportedDescriptor('finite evaluation on {}'.format(type(model).__name__))
    return model


@dataclass
class LadderReport:
    model: Dict = field(default_factory=dict)
    models: int = 1
    checked: int = 0
    violations: List[Violation] = field(default_factory=list)
    reversal_certificates: List[Dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, statement: Text, points: Any, **detail) -> None:
        if isinstance(points, int):
            points = elements(points)
        violation = Violation(statement, points, detail, self.model)
        logger.warning('Violation of "{}" on {}: {}'.format(statement, points, detail))
        self.violations.append(violation)

    def raise_for_violations(self) -> None:
        if self.violations:
            raise ImplicationViolation(len(self.violations), self.violations[0].statement,
                                       witness=self.violations[0])

    def to_dict(self) -> Dict:
        return {
            'model': self.model,
            'models': self.models,
            'checked': self.checked,
            'violations': [v.to_dict() for v in self.violations],
            'reversal_certificates': self.reversal_certificates,
        }


def merge_reports(reports: Iterable[LadderReport]) -> LadderReport:
    merged = LadderReport(model={'kind': 'sweep'}, models=0)
    for report in reports:
        merged.models += report.models
        merged.checked += report.checked
        merged.violations.extend(report.violations)
        merged.reversal_certificates.extend(report.reversal_certificates)
    return merged


def eval_open_ladder(model, points) -> OpenLadder:
    '''
    Evaluate the six open-set conditions, from principality down to having
    at most one minimal element.

    :param model: finite model, ignored for symbolic families
    :param points: upper set as a mask, or a :class:`SymbolicOpenFamily`
    '''
    if isinstance(points, SymbolicOpenFamily):
        return eval_open_conditions_symbolic(points)
    poset = _finite(model).poset
    if not poset.is_upper(points):
        raise NotOpen(elements(points), witness=points)
    if not points:
        return OpenLadder.vacuous_ladder()
    inf_table = model.inf_table
    items = elements(points)
    infimum = inf_table[points]
    return OpenLadder(
        principal=any(poset.up_masks[r] == points for r in items),
        intersection_closed=all(_has(points, inf_table[sub]) for sub in submasks(points)),
        infimum_generates=infimum is not None and poset.up_masks[infimum] == points,
        infimum_bounded=infimum is not None and not poset.up_masks[infimum] & ~points,
        meet_closed=all(_has(points, inf_table[pair]) for pair in _pairs(items)),
        single_minimal=popcount(poset.minimal_elements(points)) <= 1,
    )


def eval_closed_ladder(model, points: ElemSet) -> ClosedLadder:
    poset = _finite(model).poset
    if not poset.is_lower(points):
        raise NotClosed(elements(points), witness=points)
    if not points:
        return ClosedLadder.vacuous_ladder()
    sup_table, inf_table = model.sup_table, model.inf_table
    items = elements(points)
    pairs = _pairs(items)
    supremum = sup_table[points]
    join_closed = all(_has(points, sup_table[pair]) for pair in pairs)
    return ClosedLadder(
        principal=any(poset.down_masks[r] == points for r in items),
        sups_inside=all(_has(points, sup_table[sub]) for sub in submasks(points)),
        sup_generates=supremum is not None and poset.down_masks[supremum] == points,
        sup_bounded=supremum is not None and not poset.down_masks[supremum] & ~points,
        join_closed=join_closed,
        single_maximal=popcount(poset.maximal_elements(points)) <= 1,
        ideal=poset.is_ideal(points),
        sublattice=join_closed and all(_has(points, inf_table[pair]) for pair in pairs),
    )


def eval_irreducible_open(model, points: ElemSet) -> IrreducibleOpenLadder:
    poset = _finite(model).poset
    if not poset.is_upper(points):
        raise NotOpen(elements(points), witness=points)
    if not points:
        raise EmptySet()
    sup_table = model.sup_table
    closure = poset.down_set(points)
    return IrreducibleOpenLadder(
        greatest=poset.greatest(points) is not None,
        closure_principal=any(down == closure for down in poset.down_masks),
        unique_maximal=popcount(poset.maximal_elements(points)) == 1,
        irreducible=is_irreducible(model, points).irreducible,
        join_closed=all(_has(points, sup_table[pair]) for pair in _pairs(elements(points))),
        all_sups=all(sup_table[sub] is not None for sub in submasks(points)),
    )


def _check_opens(model: FamilySpace, report: LadderReport) -> None:
    poset = model.poset
    top_layer = poset.maximal_elements(poset.full)
    for points in poset.upper_sets:
        report.checked += 1
        ladder = eval_open_ladder(model, points)
        for pair in ladder.broken():
            report.add('open ladder', points, implication=list(pair), ladder=ladder.to_dict())
        if not points:
            continue
        irreducible = eval_irreducible_open(model, points)
        if not irreducible.agree:
            report.add('irreducible open', points, ladder=irreducible.flags())
        maximal = poset.maximal_elements(points)
        if not maximal or maximal & ~top_layer:
            report.add('maximal member of open', points, maximal=elements(maximal))
        below = [x for x in elements(points) if not poset.up_masks[x] & maximal]
        if below:
            report.add('maximal member above', points, members=below)


def _check_closeds(model: FamilySpace, report: LadderReport) -> None:
    for points in model.poset.lower_sets:
        report.checked += 1
        ladder = eval_closed_ladder(model, points)
        for pair in ladder.broken():
            report.add('closed ladder', points, implication=list(pair), ladder=ladder.to_dict())


def _check_subsets(model: FamilySpace, report: LadderReport) -> None:
    '''
    Bounds versus extremal points on every nonempty subset, and unions of
    directed subsets against their suprema.
    '''
    poset, family = model.poset, model.family
    for points in range(1, poset.full + 1):
        report.checked += 1
        has_lower = bool(poset.lower_bounds(points))
        if has_lower != (model.inf_table[points] is not None):
            report.add('infimum existence', points, lower_bounds=has_lower)
        has_upper = bool(poset.upper_bounds(points))
        supremum = model.sup_table[points]
        if has_upper != (supremum is not None):
            report.add('supremum existence', points, upper_bounds=has_upper)
        if poset.is_directed(points):
            union = family.index(family.content(points))
            if union is None or union != supremum:
                report.add('directed union', points, union=union, supremum=supremum)


def _check_components(model: FamilySpace, report: LadderReport) -> None:
    poset = model.poset
    report.checked += 1
    components = sorted(irreducible_components(model))
    if components != components_by_definition(model):
        report.add('irreducible components', poset.full, components=components)
    covered = 0
    for i, first in enumerate(components):
        covered |= first
        if any(i != j and not first & ~second for j, second in enumerate(components)):
            report.add('incomparable components', first)
    if covered != poset.full:
        report.add('components cover', covered)


def _check_greatest(model: FamilySpace, report: LadderReport) -> None:
    poset = model.poset
    report.checked += 1
    greatest = poset.greatest()
    core = intersection_of_nonempty_opens(model)
    expected = 0 if greatest is None else 1 << greatest
    if core != expected:
        report.add('intersection of nonempty opens', core, greatest=greatest)
    if (greatest is not None) != poset.is_lattice():
        report.add('lattice with greatest member', poset.full, greatest=greatest)


def verify_ladders(model: FamilySpace) -> LadderReport:
    '''
    Check every stated implication on a finite family model: both ladders on
    every open and closed set, the irreducible-open equivalences, bounds and
    extremal points, directed unions, components and the greatest member.
    '''
    if not isinstance(model, FamilySpace):
        raise UnsupportedDescriptor('ladder sweep of {}'.format(type(model).__name__))
    report = LadderReport(model=model.describe())
    _check_opens(model, report)
    _check_closeds(model, report)
    _check_subsets(model, report)
    _check_components(model, report)
    _check_greatest(model, report)
    logger.debug('Checked {} statements on {}.'.format(report.checked, model.family))
    return report


def verify_order_model(poset: FinitePoset) -> LadderReport:
    model = FiniteSpace(poset)
    report = LadderReport(model=model.describe())
    report.checked += 1
    if specialization_order(topology_from_order(poset)) != poset:
        report.add('order round trip', poset.full)
    report.checked += 1
    sobriety = is_sober(model)
    if not sobriety.sober:
        report.add('finite sobriety', sobriety.certificate)
    report.checked += 1
    if sorted(irreducible_components(model)) != components_by_definition(model):
        report.add('irreducible components', poset.full)
    if poset.n <= EXHAUSTIVE_COVER_POINTS:
        for points in range(1, poset.full + 1):
            report.checked += 1
            directed = is_irreducible(model, points).irreducible
            if directed != is_irreducible_by_cover(model, points).irreducible:
                report.add('irreducibility forms', points, directed=directed)
    report.checked += 1
    if not poset.is_dcpo():
        report.add('finite dcpo', poset.full)
    return report


def verify_topologies(n: int) -> Tuple[LadderReport, Dict[Text, int]]:
    report = LadderReport(model={'kind': 'topologies', 'n': n})
    counts = {'topologies': 0, 't0': 0}
    for topology in enumerate_topologies(n):
        counts['topologies'] += 1
        if not topology.is_t0():
            continue
        counts['t0'] += 1
        report.checked += 1
        if topology_from_order(specialization_order(topology)) != topology:
            report.add('topology round trip', topology.min_open)
    return report, counts


@dataclass
class CollapseReport:
    '''
    Counts of condition pairs where a weaker condition holds while a
    stronger one fails. Every count stays at zero on finite models.
    '''
    models: int = 0
    opens: int = 0
    closeds: int = 0
    reversals: Dict[Text, int] = field(default_factory=dict)

    @property
    def collapsed(self) -> bool:
        return not any(self.reversals.values())

    def count(self, kind: Text, flags: Dict[Text, bool]) -> None:
        names = list(flags)
        for i, stronger in enumerate(names):
            for weaker in names[i + 1:]:
                key = f'{kind}: {weaker} without {stronger}'
                self.reversals[key] = self.reversals.get(key, 0) + int(flags[weaker] and not flags[stronger])

    def merge(self, other: 'CollapseReport') -> 'CollapseReport':
        reversals = dict(self.reversals)
        for key, value in other.reversals.items():
            reversals[key] = reversals.get(key, 0) + value
        return CollapseReport(
            self.models + other.models, self.opens + other.opens, self.closeds + other.closeds, reversals
        )

    def to_dict(self) -> Dict:
        data = asdict(self)
        data['reversals'] = dict(sorted(self.reversals.items()))
        data['collapsed'] = self.collapsed
        return data


def finite_collapse_facts(models: Iterable[FiniteSpace]) -> CollapseReport:
    '''
    Evaluate both ladders on every nonempty open and closed set. On finite
    models every condition of a ladder implies every other, so no reversal
    counterexample can be finite.
    '''
    report = CollapseReport()
    for model in models:
        report.models += 1
        poset = _finite(model).poset
        for points in poset.upper_sets:
            if points:
                report.opens += 1
                report.count('open', eval_open_ladder(model, points).flags())
        for points in poset.lower_sets:
            if points:
                report.closeds += 1
                report.count('closed', eval_closed_ladder(model, points).flags())
    return report


def family_chunk(chunk: Sequence[Tuple[int, Tuple[ElemSet, ...]]]) -> Tuple[LadderReport, CollapseReport]:
    spaces = [FamilySpace(NiceFamily(ground, members)) for ground, members in chunk]
    return merge_reports(verify_ladders(space) for space in spaces), finite_collapse_facts(spaces)


def poset_chunk(chunk: Sequence[Tuple[int, ...]]) -> LadderReport:
    return merge_reports(verify_order_model(FinitePoset.from_relation(matrix)) for matrix in chunk)


@dataclass
class Certificate:
    name: Text
    claim: Text
    subject: Dict
    checks: Dict[Text, bool]
    ladder: Optional[Dict] = None
    data: Dict = field(default_factory=dict)

    @property
    def verified(self) -> bool:
        return all(self.checks.values())

    def to_dict(self) -> Dict:
        return {**asdict(self), 'verified': self.verified}


def _pieces_valid(family: SymbolicOpenFamily) -> bool:
    return (
        all(piece.check_members().valid for piece in family.pieces)
        and all(check_pattern(ring).valid for ring in family.generators)
    )


def vanishing_certificate(j1: CutIdeal = CutIdeal.closed(1)) -> Certificate:
    family = vanishing_infimum_family(j1)
    ladder = eval_open_conditions_symbolic(family)
    infimum = infimum_of_open(family)
    return Certificate(
        name='infimum_generates-not-intersection_closed',
        claim='the infimum generates the open set but is not a nice ring',
        subject=family.to_dict(),
        ladder=ladder.to_dict(),
        checks={
            'members_valid': _pieces_valid(family),
            'infimum_generates': ladder.infimum_generates,
            'not_intersection_closed': not ladder.intersection_closed,
            'infimum_not_member': not member_of(family, infimum),
            'infimum_not_nice': not check_pattern(infimum).nice,
        },
        data={'infimum': infimum.to_dict()},
    )


def escape_certificate(r0=1, j1: CutIdeal = CutIdeal.closed(2)) -> Certificate:
    family = infimum_escape_family(r0, j1)
    ladder = eval_open_conditions_symbolic(family)
    infimum = infimum_of_open(family)
    piece = family.pieces[0]
    expected = piece.base.replace(piece.position, CutIdeal.closed(Fraction(r0)))
    return Certificate(
        name='meet_closed-not-infimum_bounded',
        claim='closed under finite intersections while the infimum escapes the open set',
        subject=family.to_dict(),
        ladder=ladder.to_dict(),
        checks={
            'members_valid': _pieces_valid(family),
            'infimum_is_limit_ring': infimum == expected,
            'infimum_not_member': not member_of(family, infimum),
            'meet_closed': ladder.meet_closed,
            'not_infimum_bounded': not ladder.infimum_bounded,
        },
        data={'infimum': infimum.to_dict()},
    )


def unique_minimal_certificate(r0=1, j1: CutIdeal = CutIdeal.closed(2),
                               j2: CutIdeal = CutIdeal.closed(1)) -> Certificate:
    family = unique_minimal_family(r0, j1, j2)
    ladder = eval_open_conditions_symbolic(family)
    special = family.generators[0]
    minimal = minimal_members(family)
    sweep = meet_sweep(family, special)
    return Certificate(
        name='single_minimal-not-meet_closed',
        claim='one minimal member whose meets with the chain leave the open set',
        subject=family.to_dict(),
        ladder=ladder.to_dict(),
        checks={
            'members_valid': _pieces_valid(family),
            'unique_minimal': minimal == [special],
            'meets_escape': not sweep.closed,
            'single_minimal': ladder.single_minimal,
            'not_meet_closed': not ladder.meet_closed,
        },
        data={'minimal': [ring.to_dict() for ring in minimal], 'escape': sweep.witness},
    )


def chain_certificate(n: int = 3, depth: int = 50) -> Certificate:
    '''
    The union of the closures of an ascending chain of pattern rings is
    closed and irreducible without a generic point. Every truncation has
    its last ring as generic point.
    '''
    check_cap('chain_depth', depth)
    space = AscendingChainSpace(n)
    rings = [chain_ring(n, k) for k in range(1, depth + 1)]
    limit = space.union_limit()
    last = n - 1
    limit_ring = space.supremum()
    strict = sum(1 for low, high in zip(rings, rings[1:] + [limit_ring]) if low < high)
    union = ChainUnion(n)
    truncations_generic = all(
        space.generic_point_of(ChainTruncation(n, k)) == rings[k - 1]
        and all(space.contains(ChainTruncation(n, k), ring) for ring in rings[:k])
        and (k == depth or not space.contains(ChainTruncation(n, k), rings[k]))
        for k in range(1, depth + 1)
    )
    return Certificate(
        name='closed-irreducible-without-generic-point',
        claim='the union of the closures of an ascending chain has no generic point',
        subject={'n': n, 'depth': depth},
        checks={
            'members_valid': all(check_pattern(ring).valid for ring in rings),
            'strict_chain': strict == depth,
            'truncations_generic': truncations_generic,
            'union_irreducible': space.irreducibility_of(union).irreducible,
            'no_generic_point': space.generic_point_of(union) is None,
            'no_member_contains_chain': not any(ring[0, last].contains(limit) for ring in rings),
            'supremum_outside_union': check_pattern(limit_ring).valid and not space.contains(union, limit_ring),
            'not_sober': not space.sobriety().sober,
        },
        data={'strict_inclusions': strict, 'union_limit': str(limit)},
    )


def search_reversals() -> List[Certificate]:
    certificates = [vanishing_certificate(), escape_certificate(), unique_minimal_certificate()]
    for certificate in certificates:
        if not certificate.verified:
            logger.warning('Certificate {} failed: {}'.format(certificate.name, certificate.checks))
    return certificates


def verify_directed_unions(count: int, seed: int = 0) -> LadderReport:
    '''
    Entrywise unions of random directed lists of pattern rings must be
    valid patterns equal to the largest ring of the list.
    '''
    check_cap('pattern_families', count)
    report = LadderReport(model={'kind': 'pattern chains', 'seed': seed}, models=count)
    rng = np.random.default_rng(seed)
    for number, rings in enumerate(sample_directed_families(rng, count)):
        report.checked += 1
        union = union_directed(rings)
        top = next((ring for ring in rings if all(other <= ring for other in rings)), None)
        if union != top or not check_pattern(union).valid:
            report.add('directed pattern union', [number], union=str(union))
    return report
