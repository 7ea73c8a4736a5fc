# pylint: disable=no-member,invalid-name,import-error
import numpy
import sympy
from django.conf import settings
from django.core.management.base import CommandError
from rest_framework.exceptions import ValidationError
from vstutils.management.commands._base import BaseCommand as _BaseCommand

from ..constants import OutputFormat
from ..exceptions import NTException
from ..reports import Report


class BaseCommand(_BaseCommand):

    def _get_versions(self):
        versions = super()._get_versions()
        versions['numpy'] = numpy.__version__
        versions['sympy'] = sympy.__version__
        return versions


class ReportCommand(BaseCommand):
    '''
    Command producing a :class:`Report`. Subclasses fill the report in
    :meth:`run` and list the echoed options in ``config_keys``.
    '''
    command = None
    config_keys = ()

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument(
            '--format', choices=OutputFormat.get_values_list(), default=settings.VERIFY['format'],
            help='Report format.'
        )
        parser.add_argument('--output', default=None, help='Write the report to this path.')
        parser.add_argument(
            '--workers', type=int, default=settings.VERIFY['workers'],
            help='Worker processes for sweeps (NICETOP_THREADS overrides the default).'
        )

    def run(self, report: Report, **options):  # nocv
        raise NotImplementedError

    def handle(self, *args, **options):
        super().handle(*args, **options)
        report = Report(self.command, {key: options[key] for key in self.config_keys + ('workers',)})
        try:
            self.run(report, **options)
        except (NTException, ValidationError) as err:
            raise CommandError(str(err), returncode=1) from err
        text = report.write(options['format'], options['output'])
        if options['output']:
            self._print('Report written to {}.'.format(options['output']), 'SUCCESS')
        else:
            self.stdout.write(text)
        if not report.ok:
            raise CommandError('{} checks failed.'.format(report.failures), returncode=2)
