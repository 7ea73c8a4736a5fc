from django.conf import settings

from ...constants import TOPOLOGY_POINTS
from ...ladders import (
    CollapseReport,
    family_chunk,
    merge_reports,
    poset_chunk,
    verify_directed_unions,
    verify_topologies,
)
from ...order import enumerate_nice_families, enumerate_posets
from ...utils import SweepExecutor, check_cap, chunked, logger
from ...valuation import run_grid_oracle
from ..base import ReportCommand


def _violations(report, limit: int = 10):
    return [violation.to_dict() for violation in report.violations[:limit]]


class Command(ReportCommand):
    help = 'Exhaustive verification sweeps over finite models.'
    command = 'verify'
    config_keys = (
        'max_n', 'families', 'ground', 'max_members', 'oracle',
        'pairs', 'grid_q', 'grid_bound', 'seed', 'patterns',
    )

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument(
            '--max-n', type=int, dest='max_n', default=settings.VERIFY['max_poset_n'],
            help='Sweep posets up to this size.'
        )
        parser.add_argument('--families', action='store_true', help='Sweep intersection-closed families.')
        parser.add_argument('--ground', type=int, default=settings.VERIFY['family_ground'])
        parser.add_argument(
            '--max-members', type=int, dest='max_members', default=settings.VERIFY['family_members']
        )
        parser.add_argument('--oracle', action='store_true', help='Compare cut arithmetic with the grid oracle.')
        parser.add_argument('--pairs', type=int, default=settings.ORACLE['pairs'])
        parser.add_argument('--grid-q', type=int, dest='grid_q', default=settings.ORACLE['grid_q'])
        parser.add_argument('--grid-bound', type=int, dest='grid_bound', default=settings.ORACLE['grid_bound'])
        parser.add_argument('--seed', type=int, default=settings.ORACLE['seed'])
        parser.add_argument(
            '--patterns', type=int, default=0,
            help='Number of random directed pattern-ring families to check.'
        )

    def _chunks(self, items, executor):
        return chunked(items, max(1, len(items) // (executor.workers * 4)))

    def sweep_posets(self, report, executor, max_n):
        classes, ladder_reports = {}, []
        for n in range(1, max_n + 1):
            matrices = [poset.leq.tolist() for poset in enumerate_posets(n, cap=settings.VERIFY['max_poset_n'])]
            classes[str(n)] = len(matrices)
            ladder_reports.extend(executor.map(poset_chunk, self._chunks(matrices, executor)))
        merged = merge_reports(ladder_reports)
        logger.info('Swept {} posets, {} violations.'.format(merged.models, len(merged.violations)))
        report.add_result('posets', {
            'classes': classes,
            'checked': merged.checked,
            'violations': _violations(merged),
        }, failures=len(merged.violations))

    def sweep_topologies(self, report, max_n):
        counts, reports = {}, []
        for n in range(1, min(max_n, TOPOLOGY_POINTS) + 1):
            ladder_report, counts[str(n)] = verify_topologies(n)
            reports.append(ladder_report)
        merged = merge_reports(reports)
        report.add_result('topologies', {
            'counts': counts,
            'checked': merged.checked,
            'violations': _violations(merged),
        }, failures=len(merged.violations))

    def sweep_families(self, report, executor, ground, max_members):
        check_cap('family_ground', ground, settings.VERIFY['family_ground'])
        families = [
            (family.ground, family.members)
            for family in enumerate_nice_families(ground, max_members, cap=settings.VERIFY['family_members'])
        ]
        results = executor.map(family_chunk, self._chunks(families, executor))
        merged = merge_reports(ladder for ladder, _ in results)
        collapse = CollapseReport()
        for _, part in results:
            collapse = collapse.merge(part)
        logger.info('Swept {} families, {} violations.'.format(len(families), len(merged.violations)))
        report.add_result('families', {
            'models': merged.models,
            'checked': merged.checked,
            'violations': _violations(merged),
            'collapse': collapse.to_dict(),
        }, failures=len(merged.violations) + int(not collapse.collapsed))

    def check_limits(self, options):
        check_cap('max_poset_n', options['max_n'], settings.VERIFY['max_poset_n'])
        if options['families']:
            check_cap('family_ground', options['ground'], settings.VERIFY['family_ground'])
            check_cap('family_members', options['max_members'], settings.VERIFY['family_members'])
        if options['oracle']:
            check_cap('pairs', options['pairs'])
            check_cap('grid_q', options['grid_q'])
            check_cap('grid_bound', options['grid_bound'])
        if options['patterns']:
            check_cap('pattern_families', options['patterns'], settings.VERIFY['pattern_families'])

    def run(self, report, **options):
        self.check_limits(options)
        executor = SweepExecutor(options['workers'])
        self.sweep_posets(report, executor, options['max_n'])
        self.sweep_topologies(report, options['max_n'])
        if options['families']:
            self.sweep_families(report, executor, options['ground'], options['max_members'])
        if options['oracle']:
            oracle = run_grid_oracle(options['pairs'], options['grid_q'], options['grid_bound'], options['seed'])
            report.add_result('oracle', oracle.to_dict(), failures=len(oracle.mismatches))
        if options['patterns']:
            unions = verify_directed_unions(options['patterns'], options['seed'])
            report.add_result('patterns', {
                'families': unions.models,
                'checked': unions.checked,
                'violations': _violations(unions),
            }, failures=len(unions.violations))
