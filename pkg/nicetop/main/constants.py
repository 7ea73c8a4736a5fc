from functools import lru_cache
from vstutils.utils import BaseEnum


class ValuesEnum(BaseEnum):
    @classmethod
    @lru_cache()
    def get_values_list(cls):
        return [x.value for x in cls]


class Bound(ValuesEnum):
    CLOSED = BaseEnum.LOWER
    OPEN = BaseEnum.LOWER


class OutputFormat(ValuesEnum):
    TEXT = BaseEnum.LOWER
    JSON = BaseEnum.LOWER


class ExampleName(ValuesEnum):
    INFIMUM_ESCAPE = '2.7'
    UNIQUE_MINIMAL = '2.7p'
    ASCENDING_CHAIN = '2.13'


EXAMPLE_ALIASES = {
    'infimum-escape': ExampleName.INFIMUM_ESCAPE.value,
    'unique-minimal': ExampleName.UNIQUE_MINIMAL.value,
    'ascending-chain': ExampleName.ASCENDING_CHAIN.value,
}


REPORT_SCHEMA = 1
DEFAULT_POSET_CAP = 6
EXHAUSTIVE_COVER_POINTS = 5
TOPOLOGY_POINTS = 4

HARD_LIMITS = {
    'max_poset_n': 7,
    'family_ground': 5,
    'family_members': 10,
    'chain_depth': 500,
    'lazy_depth': 10000,
    'pattern_families': 100000,
    'grid_q': 256,
    'grid_bound': 64,
    'pairs': 1000000,
    'workers': 64,
    'primes': 6,
}

# Known numbers of unlabelled posets, by size.
POSET_COUNTS = (1, 1, 2, 5, 16, 63, 318, 2045)
