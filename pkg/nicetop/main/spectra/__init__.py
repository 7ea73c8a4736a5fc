from ..utils import BackendHandlers
from .base import (
    LoPath,
    LoReport,
    SpectralModel,
    check_lo_nonexistence,
    closed_set_lo,
    fixture_models,
    lo_from_cofinite,
    maximal_covers,
    random_fixture,
    realized_covers,
    refine,
    satisfies_lo,
)
from .lazy import LazyChainModel, PrimePrefixRule

ORACLE_HANDLERS = BackendHandlers('SPECTRAL_ORACLES', 'Unknown refinement oracle.')
RULE_HANDLERS = BackendHandlers('LAZY_CHAIN_RULES', 'Unknown chain rule.')
