from paracyclic.constructions.algebra import (
    AlgebraSpec,
    algebra_cyclic_module,
    dual_numbers,
    dual_numbers_sign_twist,
    ground_algebra,
    twisted_paracyclic_module,
)
from paracyclic.constructions.builtins import BuiltinRegistry, default_registry
from paracyclic.constructions.reconstruction import (
    duchain_to_duplicial,
    promote_simplicial,
    simplicial_part,
)
from paracyclic.constructions.representable import (
    presheaf_matrix,
    simplex_chains,
    twisted_circle_module,
)

__all__ = [
    "AlgebraSpec",
    "BuiltinRegistry",
    "algebra_cyclic_module",
    "default_registry",
    "dual_numbers",
    "dual_numbers_sign_twist",
    "duchain_to_duplicial",
    "ground_algebra",
    "presheaf_matrix",
    "promote_simplicial",
    "simplex_chains",
    "simplicial_part",
    "twisted_circle_module",
    "twisted_paracyclic_module",
]
