from django.conf import settings

from ...order import elements
from ...spectra import (
    LazyChainModel,
    check_lo_nonexistence,
    closed_set_lo,
    fixture_models,
    lo_from_cofinite,
    satisfies_lo,
)
from ...utils import check_cap
from ..base import ReportCommand


def demo_model(model):
    '''
    Walk every member to a lying-over member and look for one inside every
    nonempty closed set.
    '''
    failures = 0
    steps = []
    for member in range(len(model.family)):
        path = lo_from_cofinite(model, member)
        steps.append(path.steps)
        failures += int(path.steps > len(model.missing(member)))
    for closed in model.family.poset.lower_sets:
        if not closed:
            continue
        found = closed_set_lo(model, closed)
        failures += int(found is None or not closed >> found & 1 or not satisfies_lo(model, found))
    return {
        'members': len(model.family),
        'steps': steps,
        'lo': check_lo_nonexistence(model).to_dict(),
        'failures': failures,
    }


class Command(ReportCommand):
    help = 'Prime-cover fixtures and lazily generated descending chains.'
    command = 'spectra'
    config_keys = ('mode', 'primes', 'models', 'seed', 'oracle', 'depth', 'rule')

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('mode', choices=('demo', 'lazy'))
        parser.add_argument('--primes', type=int, default=settings.SPECTRA['primes'])
        parser.add_argument('--models', type=int, default=20, help='Number of generated fixtures.')
        parser.add_argument('--seed', type=int, default=settings.ORACLE['seed'])
        parser.add_argument('--oracle', default=settings.SPECTRA['oracle'], help='Refinement oracle backend.')
        parser.add_argument('--depth', type=int, default=settings.VERIFY['lazy_depth'])
        parser.add_argument('--rule', default=settings.SPECTRA['rule'], help='Lazy chain rule backend.')

    def run(self, report, **options):
        if options['mode'] == 'lazy':
            depth = check_cap('lazy_depth', options['depth'], settings.VERIFY['lazy_depth'])
            lazy = check_lo_nonexistence(LazyChainModel(options['rule'], depth), depth)
            flags = (lazy.no_maximal_cover, lazy.descending_below_every_member, lazy.descending_in_every_closed)
            report.add_result('lazy', lazy.to_dict(), failures=int(not all(flags)))
            return
        models = []
        for model in fixture_models(options['models'], options['primes'], options['seed'], oracle=options['oracle']):
            result = demo_model(model)
            result['cover'] = {str(i): elements(c) for i, c in enumerate(model.cover)}
            models.append(result)
        report.add_result('fixtures', models, failures=sum(m['failures'] for m in models))
