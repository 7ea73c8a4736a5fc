import io
import json
import re
import shutil
from fractions import Fraction
from pathlib import Path
from tempfile import mkdtemp
from unittest import skipIf

import numpy as np
from django.conf import settings
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import override_settings
from hypothesis import given, settings as hypothesis_settings, strategies as st
from hypothesis.extra.django import TestCase as HypothesisDjangoTestCase
from rest_framework.exceptions import ValidationError
from vstutils.tests import BaseTestCase as VSTBaseTestCase

from nicetop.main import exceptions as ex
from nicetop.main.alexandroff import (
    AlexTopology,
    FamilySpace,
    FiniteSpace,
    closure_set,
    components_by_definition,
    enumerate_topologies,
    generic_point,
    intersection_of_nonempty_opens,
    irreducible_components,
    is_irreducible,
    is_irreducible_by_cover,
    is_sober,
    specialization_order,
    topology_from_order,
    v_of,
)
from nicetop.main.conditions import ClosedLadder, OpenLadder
from nicetop.main.constants import EXAMPLE_ALIASES, POSET_COUNTS, Bound, ExampleName, OutputFormat
from nicetop.main.ladders import (
    CollapseReport,
    LadderReport,
    chain_certificate,
    escape_certificate,
    eval_closed_ladder,
    eval_irreducible_open,
    eval_open_ladder,
    finite_collapse_facts,
    search_reversals,
    unique_minimal_certificate,
    vanishing_certificate,
    verify_directed_unions,
    verify_ladders,
    verify_order_model,
    verify_topologies,
)
from nicetop.main.order import (
    FinitePoset,
    NiceFamily,
    elem_set,
    elements,
    enumerate_nice_families,
    enumerate_posets,
)
from nicetop.main.patterns import (
    UNIT,
    AscendingChainSpace,
    ChainTruncation,
    ChainUnion,
    ParamPatternFamily,
    PatternRing,
    PrincipalClosure,
    PuncturedClosure,
    SymbolicOpenFamily,
    ascending_chain,
    chain_ring,
    check_pattern,
    eval_open_conditions_symbolic,
    infimum_escape_family,
    infimum_of_open,
    intersect_rings,
    meet_sweep,
    member_of,
    minimal_members,
    require_pattern,
    sample_directed_families,
    span_rank,
    union_directed,
    unique_minimal_family,
    vanishing_infimum_family,
)
from nicetop.main.reports import Report
from nicetop.main.serializers import (
    CutSerializer,
    FamilySerializer,
    PatternRingSerializer,
    PosetSerializer,
    TopologySerializer,
    build,
    load_spectral_fixtures,
)
from nicetop.main.spectra import (
    LazyChainModel,
    PrimePrefixRule,
    SpectralModel,
    check_lo_nonexistence,
    closed_set_lo,
    fixture_models,
    lo_from_cofinite,
    maximal_covers,
    realized_covers,
    refine,
    satisfies_lo,
)
from nicetop.main.utils import SweepExecutor, check_cap, chunked
from nicetop.main.valuation import (
    CutIdeal,
    GridOracle,
    ParamIdealFamily,
    intersect_family,
    run_grid_oracle,
    union_family,
)


TEST_DATA_DIR = Path(__file__).parent.absolute() / 'test_data'
ANSI = re.compile(r'\x1b\[[0-9;]*m')


def use_temp_dir(func):
    """
    Decorator which makes temp directory and removes
    it after successful execution or error.
    """

    def wrapper(*args, **kwargs):
        temp_dir = mkdtemp()
        try:
            return func(*args, temp_dir=temp_dir, **kwargs)
        finally:
            shutil.rmtree(temp_dir)

    return wrapper


@st.composite
def posets(draw, max_n=5):
    n = draw(st.integers(1, max_n))
    pairs = [(x, y) for x in range(n) for y in range(x + 1, n)]
    covers = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return FinitePoset.from_covers(n, covers)


cuts = st.one_of(
    st.just(CutIdeal.zero()),
    st.builds(CutIdeal, st.fractions(min_value=-8, max_value=8, max_denominator=6), st.sampled_from(Bound)),
)
grid_cuts = st.one_of(
    st.just(CutIdeal.zero()),
    st.builds(CutIdeal, st.integers(-64, 64).map(lambda k: Fraction(k, 16)), st.sampled_from(Bound)),
)


def diamond_poset():
    return FinitePoset.from_covers(4, [(0, 1), (0, 2), (1, 3), (2, 3)])


def vee_poset():
    return FinitePoset.from_covers(3, [(0, 1), (0, 2)])


def corner_ring(corner, below):
    return PatternRing(((UNIT, corner), (below, UNIT)))


class OrderTestCase(VSTBaseTestCase):
    def test_poset_counts(self):
        for n in range(1, 6):
            classes = list(enumerate_posets(n))
            self.assertEqual(len(classes), POSET_COUNTS[n], n)
            keys = {poset.canonical_key for poset in classes}
            self.assertEqual(len(keys), len(classes))

    @skipIf(not settings.VERIFY['full_sweep'], 'Full sweeps are disabled')
    def test_poset_counts_six(self):
        classes = list(enumerate_posets(6))
        self.assertEqual(len(classes), POSET_COUNTS[6])
        self.assertEqual(len({poset.canonical_key for poset in classes}), 318)

    def test_enumeration_limits(self):
        with self.assertRaises(ex.InvalidParameter):
            list(enumerate_posets(0))
        with self.assertRaises(ex.CapExceeded):
            enumerate_posets(8)
        with self.assertRaises(ex.CapExceeded):
            enumerate_posets(5, cap=4)

    def test_relation_validation(self):
        with self.assertRaises(ex.ReflexivityViolation) as err:
            FinitePoset.from_relation([[False]])
        self.assertEqual(err.exception.witness, (0, 0))

        with self.assertRaises(ex.AntisymmetryViolation) as err:
            FinitePoset.from_relation([[True, True], [True, True]])
        self.assertEqual(err.exception.witness, (0, 1))

        with self.assertRaises(ex.TransitivityViolation) as err:
            FinitePoset.from_relation([[True, True, False], [False, True, True], [False, False, True]])
        self.assertEqual(err.exception.witness, (0, 2))

        with self.assertRaises(ex.InvalidParameter):
            FinitePoset.from_relation([[True, False]])
        with self.assertRaises(ex.EmptyModel):
            FinitePoset.from_relation(np.zeros((0, 0), dtype=bool))

    def test_bounds_and_semilattices(self):
        chain = FinitePoset.chain(3)
        self.assertEqual(FinitePoset.from_covers(3, [(0, 1), (1, 2)]), chain)
        self.assertEqual(len(chain.upper_sets), 4)
        self.assertTrue(chain.is_chain(chain.full))

        diamond = diamond_poset()
        self.assertTrue(diamond.is_lattice())
        self.assertEqual(diamond.sup(elem_set([1, 2])), 3)
        self.assertEqual(diamond.inf(elem_set([1, 2])), 0)

        vee = vee_poset()
        self.assertTrue(vee.is_inf_semilattice())
        self.assertFalse(vee.is_sup_semilattice())
        self.assertIsNone(vee.sup(elem_set([1, 2])))
        self.assertIsNone(vee.greatest())
        self.assertEqual(vee.least(), 0)
        self.assertFalse(vee.is_directed(0))
        self.assertFalse(vee.is_directed(vee.full))
        self.assertTrue(vee.is_ideal(elem_set([0, 1])))
        self.assertTrue(vee.is_dcpo())
        self.assertEqual(vee.up_set(elem_set([0])), vee.full)
        self.assertEqual(vee.up_set(0b010), 0b010)
        self.assertEqual(vee.down_set(elem_set([1, 2])), vee.full)
        self.assertEqual(vee.down_set(0b010), 0b011)

    def test_isomorphism(self):
        chain = FinitePoset.chain(3)
        reversed_chain = chain.relabel([2, 1, 0])
        self.assertNotEqual(chain, reversed_chain)
        self.assertTrue(chain.is_isomorphic(reversed_chain))
        self.assertFalse(chain.is_isomorphic(FinitePoset.antichain(3)))

    def test_nice_families(self):
        family = NiceFamily.from_sets(2, [[], [0], [1], [0, 1]])
        self.assertEqual(family.poset, diamond_poset())
        self.assertEqual(family.between(0, 3), 0b1111)
        self.assertEqual(family.between(1, 3), 0b1010)
        self.assertEqual(family.meet(1, 2), 0)
        self.assertEqual(family.content(0b0110), 0b11)
        self.assertEqual(family.to_dict(), {'ground': 2, 'members': [[], [0], [1], [0, 1]]})

        with self.assertRaises(ex.InvalidParameter) as err:
            NiceFamily.from_sets(2, [[0], [1]])
        self.assertEqual(err.exception.witness, (0, 1))
        with self.assertRaises(ex.InvalidParameter):
            NiceFamily.from_sets(2, [[0], [0]])
        with self.assertRaises(ex.InvalidParameter):
            NiceFamily.from_sets(1, [[1]])
        with self.assertRaises(ex.EmptyModel):
            NiceFamily.from_sets(2, [])

    def test_family_enumeration(self):
        self.assertEqual(len(list(enumerate_nice_families(1, 2))), 3)
        self.assertEqual(len(list(enumerate_nice_families(2, 1))), 3)
        with self.assertRaises(ex.CapExceeded):
            list(enumerate_nice_families(2, 11))

    def test_masks(self):
        self.assertEqual(elem_set([0, 3]), 0b1001)
        self.assertEqual(elements(0b1001), [0, 3])
        self.assertEqual(elements(0), [])


class AlexandroffTestCase(HypothesisDjangoTestCase, VSTBaseTestCase):
    def test_order_round_trip(self):
        for n in range(1, 5):
            for poset in enumerate_posets(n):
                topology = topology_from_order(poset)
                self.assertTrue(topology.is_t0())
                self.assertEqual(specialization_order(topology), poset)

    def test_topology_counts(self):
        expected = {1: (1, 1), 2: (4, 3), 3: (29, 19), 4: (355, 219)}
        for n, (total, t0) in expected.items():
            topologies = list(enumerate_topologies(n))
            self.assertEqual(len(topologies), total, n)
            self.assertEqual(sum(t.is_t0() for t in topologies), t0, n)
        with self.assertRaises(ex.InvalidParameter):
            list(enumerate_topologies(5))

    def test_topology_validation(self):
        topology = AlexTopology.from_opens(2, [0, 0b10, 0b11])
        self.assertEqual(topology.min_open, (0b11, 0b10))
        self.assertEqual(topology.closeds(), [0, 0b01, 0b11])

        with self.assertRaises(ex.NotATopology):
            AlexTopology.from_opens(2, [0, 0b01, 0b10])
        with self.assertRaises(ex.NotATopology) as err:
            AlexTopology.from_opens(3, [0, 0b001, 0b010, 0b111])
        self.assertEqual(err.exception.witness, (0b001, 0b010))
        with self.assertRaises(ex.NotT0) as err:
            specialization_order(AlexTopology.from_opens(2, [0, 0b11]))
        self.assertEqual(err.exception.witness, (0, 1))

    def test_irreducibility(self):
        model = FiniteSpace(vee_poset())
        self.assertEqual(is_irreducible(model, 0b110), (False, (1, 2)))
        self.assertEqual(is_irreducible(model, 0b111), (False, (1, 2)))
        self.assertTrue(is_irreducible(model, 0b011).irreducible)
        for points in range(1, 8):
            self.assertEqual(
                is_irreducible(model, points).irreducible,
                is_irreducible_by_cover(model, points).irreducible,
                points,
            )
        with self.assertRaises(ex.EmptySet):
            is_irreducible(model, 0)
        with self.assertRaises(ex.EmptySet):
            is_irreducible_by_cover(model, 0)
        self.assertEqual(closure_set(model, 0b100), 0b101)
        self.assertEqual(closure_set(model, 0b001), 0b001)

    def test_irreducibility_agrees_with_covers(self):
        for n in range(1, 6):
            for poset in enumerate_posets(n):
                model = FiniteSpace(poset)
                for closed in poset.lower_sets:
                    if not closed:
                        continue
                    by_directedness = is_irreducible(model, closed)
                    by_cover = is_irreducible_by_cover(model, closed)
                    self.assertEqual(by_directedness.irreducible, by_cover.irreducible, (poset, closed))
                    if not by_cover.irreducible:
                        first, second = by_cover.witness
                        self.assertFalse(closed & ~(first | second))

    def test_components_and_generic_points(self):
        model = FiniteSpace(vee_poset())
        self.assertEqual(sorted(irreducible_components(model)), [0b011, 0b101])
        self.assertEqual(components_by_definition(model), [0b011, 0b101])
        self.assertEqual(generic_point(model, 0b011), 1)
        self.assertEqual(generic_point(model, 0b001), 0)
        self.assertIsNone(generic_point(model, 0b111))
        with self.assertRaises(ex.NotClosed):
            generic_point(model, 0b010)
        self.assertTrue(is_sober(model).sober)

        self.assertEqual(intersection_of_nonempty_opens(FiniteSpace(FinitePoset.chain(3))), 0b100)
        self.assertEqual(intersection_of_nonempty_opens(model), 0)

    def test_family_space(self):
        model = FamilySpace(NiceFamily.from_sets(2, [[], [0], [1], [0, 1]]))
        self.assertEqual(v_of(model, elem_set([0])), 0b1010)
        self.assertEqual(v_of(model, 0), 0b1111)
        with self.assertRaises(ex.InvalidParameter):
            v_of(model, 0b100)
        self.assertEqual(model.describe()['kind'], 'family')

    def test_empty_model(self):
        with self.assertRaises(ex.EmptyModel):
            FiniteSpace(FinitePoset(np.zeros((0, 0), dtype=bool)))

    @given(posets())
    @hypothesis_settings(max_examples=60, deadline=None)
    def test_random_posets(self, poset):
        model = FiniteSpace(poset)
        self.assertEqual(specialization_order(topology_from_order(poset)), poset)
        self.assertTrue(is_sober(model).sober)
        self.assertEqual(sorted(irreducible_components(model)), components_by_definition(model))
        for points in range(1, poset.full + 1):
            self.assertEqual(
                is_irreducible(model, points).irreducible,
                is_irreducible_by_cover(model, points).irreducible,
            )


class ValuationTestCase(HypothesisDjangoTestCase, VSTBaseTestCase):
    def test_parse(self):
        self.assertEqual(CutIdeal.parse('>2'), CutIdeal.open(2))
        self.assertEqual(CutIdeal.parse('1/3'), CutIdeal.closed(Fraction(1, 3)))
        self.assertTrue(CutIdeal.parse('zero').is_zero)
        with self.assertRaises(ex.InvalidParameter):
            CutIdeal.parse('abc')
        self.assertEqual(str(CutIdeal.open(2)), '>2')
        self.assertEqual(str(CutIdeal.closed(Fraction(1, 3))), '1/3')
        self.assertEqual(str(CutIdeal.zero()), 'zero')

    def test_ordering(self):
        self.assertTrue(CutIdeal.closed(1).contains(CutIdeal.open(1)))
        self.assertFalse(CutIdeal.open(1).contains(CutIdeal.closed(1)))
        self.assertTrue(CutIdeal.closed(2) < CutIdeal.closed(1))
        self.assertTrue(CutIdeal.zero() < CutIdeal.open(5))
        self.assertTrue(CutIdeal.unit().is_unit())
        self.assertTrue(CutIdeal.open(0).is_domain_ideal())
        self.assertFalse(CutIdeal.closed(-1).is_domain_ideal())

    def test_arithmetic(self):
        self.assertEqual(CutIdeal.closed(1) * CutIdeal.open(2), CutIdeal.open(3))
        self.assertEqual(CutIdeal.closed(1) * CutIdeal.closed(2), CutIdeal.closed(3))
        self.assertTrue((CutIdeal.zero() * CutIdeal.closed(1)).is_zero)
        self.assertEqual(CutIdeal.closed(1) & CutIdeal.open(1), CutIdeal.open(1))
        self.assertEqual(CutIdeal.closed(1) | CutIdeal.closed(2), CutIdeal.closed(1))
        self.assertEqual(CutIdeal.from_dict(CutIdeal.open(Fraction(1, 2)).to_dict()), CutIdeal.open(Fraction(1, 2)))

    def test_parametric_family(self):
        family = ParamIdealFamily(slope=1, offset=0, lo=0, hi=2)
        self.assertEqual(family.value_range(), (0, 2))
        self.assertEqual(family.member(1), CutIdeal.closed(1))
        with self.assertRaises(ex.InvalidParameter):
            family.member(2)
        self.assertEqual(intersect_family(family), CutIdeal.closed(2))
        self.assertEqual(union_family(family), CutIdeal.open(0))
        self.assertFalse(family.exists_member_containing(CutIdeal.closed(0)))
        self.assertTrue(family.exists_member_containing(CutIdeal.closed(1)))
        self.assertFalse(family.exists_member_within(CutIdeal.closed(2)))
        self.assertTrue(family.exists_member_within(CutIdeal.closed(1)))
        self.assertEqual(family.deeper_than(Fraction(1)), Fraction(3, 2))
        self.assertTrue(family.exists_member_strictly_within(CutIdeal.closed(1)))
        self.assertFalse(family.exists_member_strictly_within(CutIdeal.closed(2)))

        unbounded = ParamIdealFamily(slope=1, offset=0, lo=0, hi=None)
        self.assertTrue(intersect_family(unbounded).is_zero)
        with self.assertRaises(ex.UnsupportedDescriptor):
            union_family(ParamIdealFamily(slope=-1, offset=0, lo=0, hi=None))

        constant = ParamIdealFamily(slope=0, offset=3, lo=None, hi=None)
        self.assertEqual(intersect_family(constant), CutIdeal.closed(3))
        self.assertEqual(union_family(constant), CutIdeal.closed(3))
        self.assertTrue(constant.exists_member_within(CutIdeal.closed(3)))
        self.assertFalse(constant.exists_member_strictly_within(CutIdeal.closed(3)))
        self.assertTrue(constant.exists_member_strictly_within(CutIdeal.closed(2)))

        with self.assertRaises(ex.DegenerateFamily):
            ParamIdealFamily(slope=1, offset=0, lo=1, hi=1)

    def test_grid_oracle(self):
        report = run_grid_oracle(200, q=16, bound=8, seed=1)
        self.assertTrue(report.ok, report.mismatches)
        self.assertEqual(report.checked, {'multiply': 200, 'intersect': 200, 'sum': 200})
        with self.assertRaises(ex.CapExceeded):
            GridOracle(q=512)

        oracle, rng = GridOracle(16, 8), np.random.default_rng(3)
        drawn = [oracle.random_cut(rng) for _ in range(200)]
        for cut in drawn:
            if not cut.is_zero:
                self.assertTrue(-4 <= cut.gamma < 4, cut)
                self.assertEqual((cut.gamma * 16).denominator, 1, cut)
        self.assertEqual({cut.bound for cut in drawn if not cut.is_zero}, {Bound.OPEN, Bound.CLOSED})

    @skipIf(not settings.VERIFY['full_sweep'], 'Full sweeps are disabled')
    def test_grid_oracle_full(self):
        report = run_grid_oracle(10000, seed=settings.ORACLE['seed'])
        self.assertTrue(report.ok, report.mismatches[:5])
        self.assertEqual(report.checked, {'multiply': 10000, 'intersect': 10000, 'sum': 10000})

    @given(cuts, cuts)
    @hypothesis_settings(max_examples=200, deadline=None)
    def test_cut_laws(self, left, right):
        self.assertTrue(left.contains(right) or right.contains(left))
        self.assertEqual(left * right, right * left)
        self.assertTrue((left & right) <= left)
        self.assertTrue(left <= (left | right))
        self.assertEqual(left * CutIdeal.unit(), left)

    @given(grid_cuts, grid_cuts)
    @hypothesis_settings(max_examples=100, deadline=None)
    def test_grid_agreement(self, left, right):
        oracle = GridOracle(16, 8)
        for operation in ('multiply', 'intersect', 'sum'):
            self.assertTrue(oracle.agrees(operation, left, right), (operation, left, right))


class PatternTestCase(VSTBaseTestCase):
    def test_check_pattern(self):
        self.assertTrue(check_pattern(PatternRing.full(2)).valid)

        report = check_pattern(corner_ring(CutIdeal.closed(-1), UNIT))
        self.assertFalse(report.multiplicatively_closed)
        self.assertEqual(report.violations[0], {'kind': 'closure', 'witness': [0, 0, 1]})

        sparse = PatternRing.full(2).replace((0, 1), CutIdeal.zero())
        self.assertFalse(check_pattern(sparse).spans)
        self.assertFalse(check_pattern(sparse).nice)
        self.assertEqual(span_rank(sparse), 3)
        self.assertEqual(span_rank(PatternRing.full(2)), 4)

        shrunk = PatternRing.full(2).replace((1, 1), CutIdeal.closed(1))
        self.assertFalse(check_pattern(shrunk).unital)

        with self.assertRaises(ex.InvalidParameter):
            PatternRing(((UNIT, UNIT),))
        with self.assertRaises(ex.SizeMismatch):
            PatternRing.full(2) <= PatternRing.full(3)  # pylint: disable=expression-not-assigned

    def test_directed_unions(self):
        self.assertEqual(union_directed([chain_ring(3, 1), chain_ring(3, 2)]), chain_ring(3, 2))
        with self.assertRaises(ex.NotDirected):
            union_directed([
                corner_ring(CutIdeal.closed(1), CutIdeal.closed(2)),
                corner_ring(CutIdeal.closed(2), CutIdeal.closed(1)),
            ])
        with self.assertRaises(ex.EmptyFamily):
            union_directed([])
        self.assertTrue(verify_directed_unions(50, seed=0).ok)

        self.assertEqual(intersect_rings(chain_ring(3, 1), chain_ring(3, 2)), chain_ring(3, 1))
        with self.assertRaises(ex.SizeMismatch):
            intersect_rings(chain_ring(2, 1), chain_ring(3, 1))
        families = sample_directed_families(np.random.default_rng(0), 20)
        self.assertEqual(len(families), 20)
        for rings in families:
            union = union_directed(rings)
            self.assertTrue(all(ring <= union for ring in rings))

    def test_parametric_pieces(self):
        base = corner_ring(UNIT, CutIdeal.closed(2))
        chain = ParamIdealFamily(slope=1, offset=0, lo=0, hi=1)
        with self.assertRaises(ex.UnsupportedDescriptor):
            ParamPatternFamily(base, (0, 0), chain)
        with self.assertRaises(ex.InvalidParameter):
            ParamPatternFamily(base, (2, 0), chain)
        piece = ParamPatternFamily(base, (0, 1), chain)
        self.assertTrue(piece.check_members().valid)
        self.assertEqual(piece.member(Fraction(1, 2))[0, 1], CutIdeal.closed(Fraction(1, 2)))

    def test_infimum_escape(self):
        family = infimum_escape_family(1, CutIdeal.closed(2))
        infimum = infimum_of_open(family)
        self.assertEqual(infimum, corner_ring(CutIdeal.closed(1), CutIdeal.closed(2)))
        self.assertFalse(member_of(family, infimum))
        self.assertTrue(member_of(family, corner_ring(CutIdeal.closed(Fraction(1, 2)), CutIdeal.closed(2))))
        ladder = eval_open_conditions_symbolic(family)
        self.assertEqual(ladder.flags(), {
            'principal': False,
            'intersection_closed': False,
            'infimum_generates': False,
            'infimum_bounded': False,
            'meet_closed': True,
            'single_minimal': True,
        })
        self.assertEqual(ladder.broken(), [])
        self.assertEqual(minimal_members(family), [])
        with self.assertRaises(ex.SizeMismatch):
            member_of(family, PatternRing.full(3))

    def test_escape_parameters(self):
        radii = (Fraction(1, 4), Fraction(1, 2), 1, 2, 3)
        ideals = (CutIdeal.closed(0), CutIdeal.open(0), CutIdeal.closed(Fraction(1, 2)), CutIdeal.open(2))
        for r0 in radii:
            for j1 in ideals:
                with self.subTest(r0=r0, j1=str(j1)):
                    certificate = escape_certificate(r0, j1)
                    self.assertTrue(certificate.verified, certificate.checks)
                    infimum = infimum_of_open(infimum_escape_family(r0, j1))
                    self.assertEqual(infimum, corner_ring(CutIdeal.closed(Fraction(r0)), j1))

    def test_unique_minimal(self):
        family = unique_minimal_family(1, CutIdeal.closed(2), CutIdeal.closed(1))
        special = corner_ring(CutIdeal.closed(1), CutIdeal.closed(1))
        self.assertEqual(minimal_members(family), [special])
        sweep = meet_sweep(family, special)
        self.assertFalse(sweep.closed)
        self.assertEqual(sweep.witness['parameters'], 'containing')
        ladder = eval_open_ladder(None, family)
        self.assertFalse(ladder.meet_closed)
        self.assertTrue(ladder.single_minimal)

        with self.assertRaises(ex.InvalidParameter):
            unique_minimal_family(1, CutIdeal.closed(1), CutIdeal.closed(1))
        with self.assertRaises(ex.InvalidParameter):
            infimum_escape_family(0, CutIdeal.closed(1))
        with self.assertRaises(ex.InvalidParameter):
            infimum_escape_family(1, CutIdeal.zero())

    def test_vanishing_infimum(self):
        family = vanishing_infimum_family(CutIdeal.closed(1))
        infimum = infimum_of_open(family)
        self.assertTrue(infimum[0, 1].is_zero)
        ladder = eval_open_conditions_symbolic(family)
        self.assertTrue(ladder.infimum_generates)
        self.assertFalse(ladder.principal)
        self.assertEqual(ladder.broken(), [])

    def test_constant_piece(self):
        constant = ParamIdealFamily(slope=0, offset=1, lo=0, hi=1)
        piece = ParamPatternFamily(corner_ring(UNIT, CutIdeal.closed(2)), (0, 1), constant)
        family = SymbolicOpenFamily(pieces=(piece,))
        self.assertEqual(minimal_members(family), [corner_ring(CutIdeal.closed(1), CutIdeal.closed(2))])
        ladder = eval_open_conditions_symbolic(family)
        self.assertTrue(all(ladder.flags().values()))

    def test_symbolic_edge_cases(self):
        empty = SymbolicOpenFamily()
        self.assertTrue(eval_open_conditions_symbolic(empty).vacuous)
        with self.assertRaises(ex.EmptyFamily):
            infimum_of_open(empty)
        with self.assertRaises(ex.SizeMismatch):
            SymbolicOpenFamily(generators=(PatternRing.full(2), PatternRing.full(3)))
        escape = infimum_escape_family(1, CutIdeal.closed(2))
        with self.assertRaises(ex.UnsupportedDescriptor):
            minimal_members(SymbolicOpenFamily(pieces=escape.pieces * 2))

    def test_ascending_chain(self):
        rings = ascending_chain(3, 5)
        self.assertTrue(all(low < high for low, high in zip(rings, rings[1:])))
        with self.assertRaises(ex.InvalidParameter):
            ascending_chain(1, 5)
        with self.assertRaises(ex.CapExceeded):
            ascending_chain(3, 501)

        space = AscendingChainSpace(3)
        self.assertTrue(space.contains(ChainUnion(3), chain_ring(3, 7)))
        self.assertFalse(space.contains(ChainUnion(3), PatternRing.full(3)))
        self.assertTrue(space.contains(ChainTruncation(3, 4), rings[2]))
        self.assertTrue(is_irreducible(space, ChainUnion(3)).irreducible)
        self.assertIsNone(generic_point(space, ChainUnion(3)))
        self.assertEqual(generic_point(space, ChainTruncation(3, 4)), rings[3])
        self.assertFalse(space.irreducibility_of(PuncturedClosure(rings[0])).irreducible)
        self.assertEqual(space.closure_of(rings[0]), PrincipalClosure(rings[0]))
        self.assertFalse(is_sober(space).sober)
        with self.assertRaises(ex.UnsupportedDescriptor):
            space.closure_of('chain')

    def test_punctured_closure_witnesses(self):
        space = AscendingChainSpace(2)
        for top in (corner_ring(CutIdeal.closed(1), CutIdeal.closed(1)),
                    corner_ring(CutIdeal.open(Fraction(1, 2)), CutIdeal.closed(3))):
            punctured = PuncturedClosure(top)
            result = space.irreducibility_of(punctured)
            self.assertFalse(result.irreducible)
            first, second = result.witness
            for witness in (first, second):
                self.assertTrue(check_pattern(witness).valid, witness)
                self.assertTrue(witness < top, witness)
                self.assertTrue(space.contains(punctured, witness))
            self.assertEqual(first.entrywise_sum(second), top)
            self.assertFalse(space.contains(punctured, top))

        chain_space = AscendingChainSpace(3)
        first, second = chain_space.irreducibility_of(PuncturedClosure(chain_ring(3, 1))).witness
        self.assertEqual(first.entrywise_sum(second), chain_ring(3, 1))
        self.assertTrue(chain_space.contains(PuncturedClosure(chain_ring(3, 1)), first))

        with self.assertRaises(ex.UnsupportedDescriptor):
            space.irreducibility_of(PuncturedClosure(PatternRing.full(2).replace((0, 1), CutIdeal.zero())))
        with self.assertRaises(ex.SizeMismatch):
            space.irreducibility_of(PuncturedClosure(chain_ring(3, 1)))

    def test_chain_union_membership(self):
        space = AscendingChainSpace(3)
        self.assertEqual(space.covering_index(chain_ring(3, 7)), 7)
        self.assertEqual(space.covering_index(chain_ring(3, 1)), 1)
        self.assertIsNone(space.covering_index(space.supremum()))
        self.assertIsNone(space.covering_index(PatternRing.full(3)))

        small = AscendingChainSpace(2)
        union = ChainUnion(2)
        self.assertFalse(small.contains(union, corner_ring(CutIdeal.zero(), UNIT)))
        self.assertFalse(small.contains(union, corner_ring(CutIdeal.open(0), UNIT)))
        self.assertFalse(small.contains(union, corner_ring(CutIdeal.closed(0), UNIT)))
        self.assertTrue(small.contains(union, corner_ring(CutIdeal.open(Fraction(1, 3)), UNIT)))
        self.assertTrue(small.contains(union, corner_ring(CutIdeal.closed(5), CutIdeal.closed(2))))
        with self.assertRaises(ex.SizeMismatch):
            small.contains(union, chain_ring(3, 1))

    def test_sobriety_from_chain_union(self):
        for n in (2, 3, 4):
            space = AscendingChainSpace(n)
            supremum = space.supremum()
            self.assertTrue(check_pattern(supremum).valid)
            self.assertTrue(all(chain_ring(n, k) < supremum for k in (1, 2, 50)))
            self.assertFalse(space.contains(ChainUnion(n), supremum))
            self.assertIsNone(space.generic_point_of(ChainUnion(n)))
            self.assertTrue(space.irreducibility_of(ChainUnion(n)).irreducible)
            result = is_sober(space)
            self.assertFalse(result.sober)
            self.assertEqual(result.certificate['closed_set'], 'ChainUnion')
            self.assertEqual(result.certificate['n'], n)

    def test_require_pattern(self):
        ring = corner_ring(CutIdeal.closed(1), CutIdeal.closed(2))
        self.assertIs(require_pattern(ring), ring)
        with self.assertRaises(ex.PatternViolation):
            require_pattern(corner_ring(CutIdeal.closed(-1), UNIT))


class LadderTestCase(VSTBaseTestCase):
    def setUp(self):
        super().setUp()
        self.vee = FamilySpace(NiceFamily.from_sets(2, [[], [0], [1]]))

    def test_ladder_records(self):
        self.assertEqual(OpenLadder(intersection_closed=False).broken(), [('principal', 'intersection_closed')])
        self.assertEqual(OpenLadder(principal=False).broken(), [('principal', 'intersection_closed')])
        self.assertEqual(OpenLadder(principal=False, intersection_closed=False).broken(), [])
        self.assertEqual(ClosedLadder(join_closed=False).broken(), [
            ('sup_bounded', 'join_closed'),
        ])
        self.assertEqual(ClosedLadder.vacuous_ladder().broken(), [])

    def test_open_set_without_least_member(self):
        ladder = eval_open_ladder(self.vee, 0b110)
        self.assertFalse(any(ladder.flags().values()))
        irreducible = eval_irreducible_open(self.vee, 0b110)
        self.assertTrue(irreducible.agree)
        self.assertFalse(irreducible.greatest)
        self.assertTrue(all(eval_open_ladder(self.vee, 0b010).flags().values()))
        self.assertTrue(eval_open_ladder(self.vee, 0).vacuous)

    def test_closed_ladder(self):
        ladder = eval_closed_ladder(self.vee, 0b111)
        self.assertFalse(any(ladder.flags().values()))
        self.assertTrue(all(eval_closed_ladder(self.vee, 0b011).flags().values()))

    def test_ladder_errors(self):
        with self.assertRaises(ex.NotOpen):
            eval_open_ladder(self.vee, 0b001)
        with self.assertRaises(ex.NotClosed):
            eval_closed_ladder(self.vee, 0b010)
        with self.assertRaises(ex.EmptySet):
            eval_irreducible_open(self.vee, 0)
        with self.assertRaises(ex.UnsupportedDescriptor):
            eval_open_ladder(AscendingChainSpace(3), 1)
        with self.assertRaises(ex.UnsupportedDescriptor):
            verify_ladders(FiniteSpace(FinitePoset.chain(2)))

    def test_family_sweep(self):
        spaces = [FamilySpace(family) for family in enumerate_nice_families(3, 5)]
        for space in spaces:
            report = verify_ladders(space)
            self.assertTrue(report.ok, report.to_dict())
            self.assertGreater(report.checked, 0)
        collapse = finite_collapse_facts(spaces)
        self.assertTrue(collapse.collapsed)
        self.assertEqual(collapse.models, len(spaces))
        self.assertIn('open: single_minimal without principal', collapse.reversals)

    def test_order_models(self):
        for n in range(1, 5):
            for poset in enumerate_posets(n):
                self.assertTrue(verify_order_model(poset).ok)
        report, counts = verify_topologies(3)
        self.assertTrue(report.ok)
        self.assertEqual(counts, {'topologies': 29, 't0': 19})

    def test_violation_reports(self):
        report = LadderReport(model={'kind': 'manual'})
        with self.assertLogs('nicetop', level='WARNING'):
            report.add('manual', 0b11, reason='test')
        self.assertEqual(report.violations[0].points, [0, 1])
        with self.assertRaises(ex.ImplicationViolation):
            report.raise_for_violations()

        merged = CollapseReport(reversals={'a': 0}).merge(CollapseReport(models=1, reversals={'a': 1}))
        self.assertFalse(merged.collapsed)
        self.assertEqual(merged.to_dict()['reversals'], {'a': 1})

    def test_certificates(self):
        certificates = search_reversals()
        self.assertEqual([c.name for c in certificates], [
            'infimum_generates-not-intersection_closed',
            'meet_closed-not-infimum_bounded',
            'single_minimal-not-meet_closed',
        ])
        for certificate in certificates:
            self.assertTrue(certificate.verified, certificate.checks)
        self.assertTrue(vanishing_certificate(CutIdeal.open(0)).verified)
        self.assertTrue(escape_certificate(Fraction(1, 2), CutIdeal.open(0)).verified)
        self.assertTrue(unique_minimal_certificate(2, CutIdeal.closed(3), CutIdeal.open(1)).verified)

    def test_chain_certificate(self):
        certificate = chain_certificate(3, 20)
        self.assertTrue(certificate.verified, certificate.checks)
        self.assertEqual(certificate.data['strict_inclusions'], 20)
        self.assertEqual(certificate.to_dict()['verified'], True)
        for n in (2, 3):
            certificate = chain_certificate(n, 50)
            self.assertTrue(certificate.verified, (n, certificate.checks))
            self.assertEqual(certificate.data['strict_inclusions'], 50)
            self.assertTrue(certificate.checks['no_generic_point'])
            self.assertTrue(certificate.checks['not_sober'])

    @skipIf(not settings.VERIFY['full_sweep'], 'Full sweeps are disabled')
    def test_family_sweep_full(self):
        spaces = [FamilySpace(family) for family in enumerate_nice_families(4, 6)]
        self.assertTrue(spaces)
        for space in spaces:
            report = verify_ladders(space)
            self.assertTrue(report.ok, report.to_dict())
        collapse = finite_collapse_facts(spaces)
        self.assertTrue(collapse.collapsed)
        self.assertEqual(collapse.models, len(spaces))


class SpectraTestCase(VSTBaseTestCase):
    def setUp(self):
        super().setUp()
        self.fixtures = {
            name: (model, expected)
            for name, model, expected in load_spectral_fixtures(TEST_DATA_DIR / 'spectra.yml')
        }
        self.diamond = self.fixtures['diamond'][0]

    def test_fixtures(self):
        for name, (model, expected) in self.fixtures.items():
            members = [i for i in range(len(model.family)) if satisfies_lo(model, i)]
            self.assertEqual(members, expected['lo_members'], name)
            self.assertEqual(check_lo_nonexistence(model).artifact, expected['artifact'], name)
            for oracle, path in expected.get('paths', {}).items():
                refined = SpectralModel(model.family, model.primes, model.cover, oracle)
                found = lo_from_cofinite(refined, expected['start'])
                self.assertEqual(found.path, path, (name, oracle))
                self.assertEqual(found.steps, len(path) - 1)

    def test_artifact(self):
        model, _ = self.fixtures['uncovered_prime']
        with self.assertLogs('nicetop', level='WARNING'):
            report = check_lo_nonexistence(model)
        self.assertTrue(report.no_lo_member)
        self.assertFalse(report.no_maximal_cover)
        self.assertEqual(realized_covers(model), [0b00, 0b01])
        self.assertEqual(maximal_covers(model), [0b01])
        self.assertIsNone(closed_set_lo(model, 0b01))
        with self.assertRaises(ex.OracleViolation):
            lo_from_cofinite(model, 1)

    def test_refine_errors(self):
        with self.assertRaises(ex.AlreadyCovered):
            refine(self.diamond, 0, 0)
        with self.assertRaises(ex.InvalidParameter):
            refine(self.diamond, 3, 5)
        with self.assertRaises(ex.UnknownMember):
            refine(self.diamond, 9, 1)

    def test_adversarial_oracles(self):
        family, cover = self.diamond.family, self.diamond.cover
        for answer in (lambda model, member, prime: member, lambda model, member, prime: 2, lambda *args: 99):
            model = SpectralModel(family, 3, cover, answer)
            with self.assertRaises(ex.OracleViolation):
                refine(model, 3, 1)

    def test_model_validation(self):
        family = self.diamond.family
        with self.assertRaises(ex.InvalidParameter) as err:
            SpectralModel(family, 2, [0b01, 0b01, 0b01, 0b11])
        self.assertEqual(err.exception.witness, (0, 3))
        with self.assertRaises(ex.SizeMismatch):
            SpectralModel(family, 2, [0b01])
        with self.assertRaises(ex.CapExceeded):
            SpectralModel(family, 7, [0] * 4)
        with self.assertRaises(ex.InvalidParameter):
            SpectralModel(family, 0, [0] * 4)
        with self.assertRaises(ex.UnknownBackend):
            SpectralModel(family, 3, self.diamond.cover, 'missing')

    def test_closed_sets(self):
        self.assertEqual(closed_set_lo(self.diamond, 0b0011), 0)
        with self.assertRaises(ex.EmptyClosedSet):
            closed_set_lo(self.diamond, 0)
        with self.assertRaises(ex.NotClosed):
            closed_set_lo(self.diamond, 0b0010)

    def test_generated_fixtures(self):
        for model in fixture_models(10, primes=3, seed=4):
            self.assertTrue(satisfies_lo(model, model.family.poset.least()))
            for member in range(len(model.family)):
                path = lo_from_cofinite(model, member)
                self.assertTrue(satisfies_lo(model, path.member))
                self.assertLessEqual(path.steps, len(model.missing(member)))

    def test_lazy_chain(self):
        model = LazyChainModel('PRIME_PREFIX', depth_cap=100)
        report = check_lo_nonexistence(model, 100)
        self.assertEqual(report.kind, 'lazy')
        self.assertTrue(report.no_lo_member)
        self.assertTrue(report.no_maximal_cover)
        self.assertTrue(report.descending_below_every_member)
        self.assertTrue(report.descending_in_every_closed)
        self.assertEqual(report.detail['strict_steps'], 99)
        self.assertEqual(report.detail['largest_cover'], 100)
        self.assertEqual(report.detail['horizon'], 101)

        pairs = LazyChainModel('prime_pairs', depth_cap=10).check()
        self.assertEqual(pairs.detail['largest_cover'], 20)
        self.assertEqual(pairs.detail['horizon'], 22)
        self.assertTrue(pairs.no_lo_member)

        class StalledRule(PrimePrefixRule):
            def cover(self, k):
                return frozenset(self.primes(min(k, 3)))

        stalled = LazyChainModel(StalledRule(), depth_cap=10).check()
        self.assertFalse(stalled.no_lo_member)
        self.assertFalse(stalled.no_maximal_cover)
        self.assertFalse(stalled.descending_in_every_closed)
        self.assertEqual(stalled.detail['horizon'], 3)
        self.assertEqual(stalled.detail['strict_steps'], 9)
        self.assertEqual(PrimePrefixRule().primes(5), [2, 3, 5, 7, 11])

        with self.assertRaises(ex.DepthExceeded):
            list(model.iterate(101))
        with self.assertRaises(ex.InvalidParameter):
            model.check(1)
        with self.assertRaises(ex.CapExceeded):
            LazyChainModel(PrimePrefixRule(), depth_cap=10001)
        with self.assertRaises(ex.UnknownBackend):
            LazyChainModel('missing')


class SerializerTestCase(VSTBaseTestCase):
    def test_poset(self):
        poset = build(PosetSerializer, {'n': 2, 'leq': [[True, True], [False, True]]})
        self.assertEqual(poset, FinitePoset.chain(2))
        with self.assertRaises(ex.SizeMismatch):
            build(PosetSerializer, {'n': 3, 'leq': [[True, True], [False, True]]})
        with self.assertRaises(ValidationError):
            build(PosetSerializer, {'n': 'x', 'leq': []})

    def test_family_and_topology(self):
        family = build(FamilySerializer, {'ground': 2, 'members': [[], [0]]})
        self.assertEqual(len(family), 2)
        topology = build(TopologySerializer, {'n': 2, 'opens': [[], [1], [0, 1]]})
        self.assertEqual(TopologySerializer(topology).data, {'n': 2, 'opens': [[], [1], [0, 1]]})

    def test_cuts_and_rings(self):
        self.assertEqual(build(CutSerializer, {'gamma': '1/2', 'bound': 'open'}), CutIdeal.open(Fraction(1, 2)))
        self.assertTrue(build(CutSerializer, {'zero': True}).is_zero)
        with self.assertRaises(ValidationError):
            build(CutSerializer, {})
        with self.assertRaises(ValidationError):
            build(CutSerializer, {'gamma': '1', 'bound': 'half'})
        ring = chain_ring(2, 3)
        self.assertEqual(build(PatternRingSerializer, ring.to_dict()), ring)


class UtilsTestCase(VSTBaseTestCase):
    def test_caps(self):
        self.assertEqual(check_cap('workers', 4), 4)
        with self.assertRaises(ex.CapExceeded):
            check_cap('workers', 65)
        with self.assertRaises(ex.CapExceeded):
            check_cap('max_poset_n', 5, 4)

    def test_sweep_executor(self):
        self.assertEqual(chunked([1, 2, 3, 4, 5], 2), [[1, 2], [3, 4], [5]])
        self.assertEqual(SweepExecutor(2).map(sum, [[1, 2], [3]]), [3, 3])
        self.assertEqual(SweepExecutor().map(sum, [[1, 2]]), [3])
        with self.assertRaises(ex.InvalidParameter):
            SweepExecutor(0)

    def test_enums(self):
        self.assertEqual(Bound.get_values_list(), ['closed', 'open'])
        self.assertEqual(OutputFormat.get_values_list(), ['text', 'json'])
        self.assertEqual(ExampleName.get_values_list(), ['2.7', '2.7p', '2.13'])
        self.assertEqual(set(EXAMPLE_ALIASES.values()), set(ExampleName.get_values_list()))

    @use_temp_dir
    def test_report(self, temp_dir):
        report = Report('verify', {'max_n': 1})
        report.add_result('posets', {'classes': {'1': 1}})
        self.assertTrue(report.ok)
        report.add_result('broken', [], failures=2)
        self.assertFalse(report.ok)
        path = Path(temp_dir) / 'report.json'
        report.write('json', str(path))
        data = json.loads(path.read_text())
        self.assertEqual(data['schema'], 1)
        self.assertEqual(data['tool'], 'nicetop verify')
        self.assertEqual(data['version'], settings.NICETOP_VERSION)
        self.assertFalse(data['ok'])
        self.assertEqual(list(data), sorted(data))
        self.assertIn('posets:', report.render('text'))


class CommandTestCase(VSTBaseTestCase):
    def _call(self, *args):
        out = io.StringIO()
        call_command(*args, stdout=out)
        return ANSI.sub('', out.getvalue())

    def _json(self, *args):
        return json.loads(self._call(*args, '--format', 'json'))

    @use_temp_dir
    def test_verify(self, temp_dir):
        path = str(Path(temp_dir) / 'verify.json')
        out = self._call('verify', '--max-n', '4', '--format', 'json', '--output', path)
        self.assertEqual(out, 'Report written to {}.\n'.format(path))
        with open(path, encoding='utf-8') as fd:
            data = json.load(fd)
        self.assertTrue(data['ok'])
        self.assertEqual(data['tool'], 'nicetop verify')
        self.assertEqual(data['config']['max_n'], 4)
        self.assertEqual(data['results']['posets']['classes'], {'1': 1, '2': 2, '3': 5, '4': 16})
        self.assertEqual(data['results']['posets']['violations'], [])
        self.assertEqual(data['results']['topologies']['counts'], {
            '1': {'topologies': 1, 't0': 1},
            '2': {'topologies': 4, 't0': 3},
            '3': {'topologies': 29, 't0': 19},
            '4': {'topologies': 355, 't0': 219},
        })

    def test_verify_families(self):
        data = self._json(
            'verify', '--max-n', '2', '--families', '--ground', '3', '--max-members', '4',
            '--oracle', '--pairs', '50', '--patterns', '20',
        )
        self.assertTrue(data['ok'])
        self.assertTrue(data['results']['families']['collapse']['collapsed'])
        self.assertEqual(data['results']['families']['violations'], [])
        self.assertEqual(data['results']['oracle']['mismatches'], [])
        self.assertEqual(data['results']['patterns']['families'], 20)

    @override_settings(VERIFY={**settings.VERIFY, 'max_poset_n': 3})
    def test_verify_caps(self):
        with self.assertRaises(CommandError) as err:
            self._call('verify', '--max-n', '4')
        self.assertEqual(err.exception.returncode, 1)
        with self.assertRaises(CommandError):
            self._call('verify', '--families', '--ground', '9')

    def test_verify_limits_first(self):
        target = 'nicetop.main.management.commands.verify.enumerate_posets'
        for args in (('--max-n', '99'), ('--families', '--max-members', '99'), ('--oracle', '--grid-q', '999')):
            with self.patch(target) as enumerate_mock:
                with self.assertRaises(CommandError) as err:
                    self._call('verify', *args)
            self.assertEqual(err.exception.returncode, 1)
            enumerate_mock.assert_not_called()

    def test_examples(self):
        data = self._json('example', '2.7')
        self.assertEqual(data['certificates'][0]['name'], 'meet_closed-not-infimum_bounded')
        self.assertTrue(data['certificates'][0]['verified'])
        data = self._json('example', 'infimum-escape', '--r0', '1/2', '--j1', '>0')
        self.assertTrue(data['ok'])
        data = self._json('example', '2.7p', '--j2', '1/2')
        self.assertTrue(data['certificates'][0]['verified'])
        data = self._json('example', 'unique-minimal')
        self.assertTrue(data['certificates'][0]['verified'])
        data = self._json('example', '2.7p', '--r0', '1', '--j1', '3', '--j2', '2')
        self.assertTrue(data['certificates'][0]['checks']['not_meet_closed'])
        data = self._json('example', 'ascending-chain', '--depth', '10')
        self.assertEqual(data['certificates'][0]['data']['strict_inclusions'], 10)
        self.assertIn('ok: true', self._call('example', 'ascending-chain', '--depth', '5'))
        data = self._json('example', '2.13', '--n', '2')
        self.assertEqual(data['certificates'][0]['data']['strict_inclusions'], 50)
        self.assertTrue(data['certificates'][0]['checks']['not_sober'])

        with self.assertRaises(CommandError) as err:
            self._call('example', 'unique-minimal', '--j1', '1', '--j2', '2')
        self.assertEqual(err.exception.returncode, 1)

    def test_search(self):
        data = self._json('search', 'reversals')
        self.assertTrue(data['ok'])
        self.assertEqual(len(data['certificates']), 3)
        data = self._json('search', 'collapse', '--ground', '2', '--max-members', '4')
        self.assertTrue(data['results']['collapse']['collapsed'])

    def test_spectra(self):
        data = self._json('spectra', 'demo', '--models', '5', '--primes', '3')
        self.assertTrue(data['ok'])
        self.assertEqual(len(data['results']['fixtures']), 5)
        data = self._json('spectra', 'lazy', '--depth', '50', '--rule', 'prime_pairs')
        self.assertTrue(data['results']['lazy']['no_maximal_cover'])
        self.assertEqual(data['results']['lazy']['depth'], 50)

        with self.assertRaises(CommandError) as err:
            self._call('spectra', 'lazy', '--depth', '101')
        self.assertEqual(err.exception.returncode, 1)
        with self.assertRaises(CommandError):
            self._call('spectra', 'demo', '--oracle', 'nope')
