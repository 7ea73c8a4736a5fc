from django.conf import settings

from ...constants import EXAMPLE_ALIASES, ExampleName
from ...ladders import chain_certificate, escape_certificate, unique_minimal_certificate
from ...utils import check_cap
from ...valuation import CutIdeal, as_fraction
from ..base import ReportCommand


class Command(ReportCommand):
    help = 'Build a symbolic example family and check its certificate.'
    command = 'example'
    config_keys = ('name', 'r0', 'j1', 'j2', 'n', 'depth')

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('name', choices=ExampleName.get_values_list() + list(EXAMPLE_ALIASES))
        parser.add_argument('--r0', default='1', help='Upper end of the corner parameters.')
        parser.add_argument('--j1', default='2', help='Ideal below the diagonal, e.g. "2", "1/2", ">0".')
        parser.add_argument('--j2', default='1', help='Larger ideal of the extra generator.')
        parser.add_argument('--n', type=int, default=3, help='Matrix size of the ascending chain.')
        parser.add_argument('--depth', type=int, default=settings.VERIFY['chain_depth'])

    def run(self, report, **options):
        name = ExampleName(EXAMPLE_ALIASES.get(options['name'], options['name']))
        if name == ExampleName.ASCENDING_CHAIN:
            depth = check_cap('chain_depth', options['depth'], settings.VERIFY['chain_depth'])
            certificate = chain_certificate(options['n'], depth)
        elif name == ExampleName.INFIMUM_ESCAPE:
            certificate = escape_certificate(as_fraction(options['r0']), CutIdeal.parse(options['j1']))
        else:
            certificate = unique_minimal_certificate(
                as_fraction(options['r0']), CutIdeal.parse(options['j1']), CutIdeal.parse(options['j2'])
            )
        report.add_certificates([certificate])
