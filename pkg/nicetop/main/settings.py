from vstutils.settings import *

NICETOP_VERSION = PROJECT_VERSION

# Nicetop apps
INSTALLED_APPS += [
    '{}.main'.format(VST_PROJECT_LIB_NAME),
]


# Verification caps
class VerifySection(BaseAppendSection):
    types_map = {
        'max_poset_n': cconfig.IntType(),
        'family_ground': cconfig.IntType(),
        'family_members': cconfig.IntType(),
        'chain_depth': cconfig.IntType(),
        'lazy_depth': cconfig.IntType(),
        'pattern_families': cconfig.IntType(),
        'workers': cconfig.IntType(),
        'format': cconfig.StrType(),
        'full_sweep': cconfig.BoolType(),
    }

    def all(self):
        data = super().all()
        data['workers'] = int(os.getenv('NICETOP_THREADS', data.get('workers', 1)))
        full_sweep = os.getenv('NICETOP_FULL_SWEEP')
        if full_sweep is not None:
            data['full_sweep'] = full_sweep.lower() in ('1', 'true', 'yes', 'on')
        data.setdefault('full_sweep', False)
        return data


class OracleSection(BaseAppendSection):
    types_map = {
        'grid_q': cconfig.IntType(),
        'grid_bound': cconfig.IntType(),
        'pairs': cconfig.IntType(),
        'seed': cconfig.IntType(),
    }


class SpectraSection(BaseAppendSection):
    types_map = {
        'primes': cconfig.IntType(),
        'oracle': cconfig.StrType(),
        'rule': cconfig.StrType(),
    }


VERIFY = VerifySection('verify', config, config['verify']).all()
ORACLE = OracleSection('oracle', config, config['oracle']).all()
SPECTRA = SpectraSection('spectra', config, config['spectra']).all()

# Refinement oracles for spectral models
SPECTRAL_ORACLES = {
    "INTERSECTION": {
        "BACKEND": "{}.main.spectra.oracles.IntersectionOracle".format(VST_PROJECT_LIB_NAME),
    },
    "GREEDY": {
        "BACKEND": "{}.main.spectra.oracles.GreedyOracle".format(VST_PROJECT_LIB_NAME),
    },
}

# Generator rules for lazily evaluated descending chains
LAZY_CHAIN_RULES = {
    "PRIME_PREFIX": {
        "BACKEND": "{}.main.spectra.lazy.PrimePrefixRule".format(VST_PROJECT_LIB_NAME),
        "OPTIONS": {"step": 1},
    },
    "PRIME_PAIRS": {
        "BACKEND": "{}.main.spectra.lazy.PrimePrefixRule".format(VST_PROJECT_LIB_NAME),
        "OPTIONS": {"step": 2},
    },
}

# TEST settings
if "test" in sys.argv:
    VERIFY['workers'] = 1
    ORACLE['pairs'] = 2000
