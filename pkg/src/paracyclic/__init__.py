"""
paracyclic
==========

Exact-arithmetic engine for truncated simplicial, duplicial, paracyclic and
cyclic modules: structure maps as matrices over Z, Q or Z/m, the operators
built from them, Dold–Kan decompositions and homology.

Quick start
-----------
>>> from paracyclic import CoefficientRing, default_registry, check_identity_suite
>>> M = default_registry().build("dual-numbers", CoefficientRing.rationals(), 3)
>>> check_identity_suite(M).passed
True
"""

from paracyclic.constructions import default_registry, duchain_to_duplicial, promote_simplicial
from paracyclic.core.config import EngineConfig
from paracyclic.core.errors import EngineError
from paracyclic.core.logging import get_logger, setup_logging
from paracyclic.linalg import CoefficientRing, Matrix
from paracyclic.modules import (
    DuchainComplex,
    Element,
    TruncatedDuplicialModule,
    check_identity_suite,
    classify_module,
    dk_decompose,
    dk_reconstruct,
    validate_relations,
)

__version__ = "0.1.0"

__all__ = [
    "CoefficientRing",
    "DuchainComplex",
    "Element",
    "EngineConfig",
    "EngineError",
    "Matrix",
    "TruncatedDuplicialModule",
    "__version__",
    "check_identity_suite",
    "classify_module",
    "default_registry",
    "dk_decompose",
    "dk_reconstruct",
    "duchain_to_duplicial",
    "get_logger",
    "promote_simplicial",
    "setup_logging",
    "validate_relations",
]
