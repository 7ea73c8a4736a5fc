# Test wiring: run the Django/vstutils TestCase suite in tests.py under pytest
# with the same environment `python -m nicetop test` would set up.
import django
from django.test.utils import setup_test_environment, teardown_test_environment

import nicetop  # noqa: F401  (prepare_environment sets DJANGO_SETTINGS_MODULE)


def pytest_configure(config):
    django.setup()
    setup_test_environment()
    from django.test.utils import setup_databases
    config._nicetop_db = setup_databases(verbosity=0, interactive=False)


def pytest_unconfigure(config):
    from django.test.utils import teardown_databases
    db_cfg = getattr(config, '_nicetop_db', None)
    if db_cfg is not None:
        teardown_databases(db_cfg, verbosity=0)
    teardown_test_environment()
