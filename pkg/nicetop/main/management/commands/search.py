from django.conf import settings

from ...ladders import CollapseReport, family_chunk, search_reversals
from ...order import enumerate_nice_families
from ...utils import SweepExecutor, check_cap, chunked
from ..base import ReportCommand


class Command(ReportCommand):
    help = 'Reversal certificates and finite collapse facts.'
    command = 'search'
    config_keys = ('what', 'ground', 'max_members')

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('what', choices=('reversals', 'collapse'))
        parser.add_argument('--ground', type=int, default=settings.VERIFY['family_ground'])
        parser.add_argument(
            '--max-members', type=int, dest='max_members', default=settings.VERIFY['family_members']
        )

    def run(self, report, **options):
        report.add_certificates(search_reversals())
        if options['what'] != 'collapse':
            return
        check_cap('family_ground', options['ground'], settings.VERIFY['family_ground'])
        families = [
            (family.ground, family.members)
            for family in enumerate_nice_families(
                options['ground'], options['max_members'], cap=settings.VERIFY['family_members']
            )
        ]
        executor = SweepExecutor(options['workers'])
        collapse = CollapseReport()
        for _, part in executor.map(family_chunk, chunked(families, max(1, len(families) // executor.workers))):
            collapse = collapse.merge(part)
        report.add_result('collapse', collapse.to_dict(), failures=int(not collapse.collapsed))
