"""
### Nicetop is a workbench for the Alexandroff topology on nice subalgebras.

* Finite posets and intersection-closed families, checked exhaustively.
* Exact cut-ideal pattern rings over a real-valued valuation domain.
* Abstract lying-over models of prime spectra.

"""

import os
import warnings
try:
    from vstutils.environment import prepare_environment, cmd_execution
except ImportError:
    warnings.warn('"vstutils" was not installed', ImportWarning)
    prepare_environment = lambda *args, **kwargs: ()
    cmd_execution = prepare_environment

default_settings = {
    # django settings module
    "DJANGO_SETTINGS_MODULE": os.getenv(
        "DJANGO_SETTINGS_MODULE", 'nicetop.main.settings'
    ),
    # VSTUTILS settings
    "VST_PROJECT": os.getenv("VST_PROJECT", 'nicetop'),
    "VST_ROOT_URLCONF": os.getenv("VST_ROOT_URLCONF", 'vstutils.urls'),
}

__version__ = "1.0.0"

prepare_environment(**default_settings)
