"""
Run reports shared by the management commands.
"""
import json
import time
from typing import Any, Dict, Iterable, Text

from django.conf import settings

from .constants import REPORT_SCHEMA, OutputFormat
from .utils import dump_yaml


class Report:
    '''
    Versioned result document. Everything except ``timing`` depends on the
    configuration only, JSON output has sorted keys.
    '''
    __slots__ = ('command', 'config', 'results', 'certificates', 'started', 'failures')

    def __init__(self, command: Text, config: Dict[Text, Any]):
        self.command = command
        self.config = dict(config)
        self.results: Dict[Text, Any] = {}
        self.certificates = []
        self.failures = 0
        self.started = time.monotonic()

    def add_result(self, name: Text, value: Any, failures: int = 0) -> None:
        self.results[name] = value
        self.failures += failures

    def add_certificates(self, certificates: Iterable) -> None:
        for certificate in certificates:
            self.certificates.append(certificate.to_dict())
            self.failures += int(not certificate.verified)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> Dict[Text, Any]:
        return {
            'schema': REPORT_SCHEMA,
            'tool': 'nicetop {}'.format(self.command),
            'version': settings.NICETOP_VERSION,
            'config': self.config,
            'results': self.results,
            'certificates': self.certificates,
            'ok': self.ok,
            'timing': {'seconds': round(time.monotonic() - self.started, 3)},
        }

    def summary(self) -> Dict[Text, Any]:
        data = self.to_dict()
        data['certificates'] = {
            c['name']: 'verified' if c['verified'] else 'FAILED' for c in self.certificates
        }
        return data

    def render(self, output_format: Text = OutputFormat.TEXT.value) -> Text:
        if OutputFormat(output_format) == OutputFormat.JSON:
            return json.dumps(self.to_dict(), sort_keys=True, indent=2, default=str)
        return dump_yaml(self.summary())

    def write(self, output_format: Text, path: Text = None) -> Text:
        text = self.render(output_format)
        if path:
            with open(path, 'w', encoding='utf-8') as fd:
                fd.write(text + '\n')
        return text
