from paracyclic.modules.classify import (
    Classification,
    DegreeWitness,
    ModuleKind,
    classify_module,
)
from paracyclic.modules.dold_kan import (
    degenerate_basis,
    dk_basis_matrix,
    dk_coordinate_matrix,
    dk_decompose,
    dk_keys,
    dk_reconstruct,
    induced_duchain,
    normalized_basis,
    normalized_rank,
)
from paracyclic.modules.duplicial import (
    DKDecomposition,
    DuchainComplex,
    Element,
    Key,
    TruncatedDuplicialModule,
)
from paracyclic.modules.identities import (
    IDENTITIES,
    InversionRow,
    check_identity_suite,
    inversion_formula_resolution,
)
from paracyclic.modules.operators import (
    OPERATOR_NAMES,
    T_op,
    b_op,
    connes_B,
    d_op,
    delta_op,
    dold_puppe_projection,
    dwyer_kan,
    em_homotopy_phi,
    gs_D,
    karoubi,
    named_operator,
    pi_pq,
    sigma_op,
    t_inv_op,
    t_op,
)
from paracyclic.modules.relations import RELATIONS, validate_relations
from paracyclic.modules.report import CheckStatus, IdentityCheck, IdentityReport

__all__ = [
    "IDENTITIES",
    "OPERATOR_NAMES",
    "RELATIONS",
    "CheckStatus",
    "Classification",
    "DKDecomposition",
    "DegreeWitness",
    "DuchainComplex",
    "Element",
    "IdentityCheck",
    "IdentityReport",
    "InversionRow",
    "Key",
    "ModuleKind",
    "T_op",
    "TruncatedDuplicialModule",
    "b_op",
    "check_identity_suite",
    "classify_module",
    "connes_B",
    "d_op",
    "degenerate_basis",
    "delta_op",
    "dk_basis_matrix",
    "dk_coordinate_matrix",
    "dk_decompose",
    "dk_keys",
    "dk_reconstruct",
    "dold_puppe_projection",
    "dwyer_kan",
    "em_homotopy_phi",
    "gs_D",
    "induced_duchain",
    "inversion_formula_resolution",
    "karoubi",
    "named_operator",
    "normalized_basis",
    "normalized_rank",
    "pi_pq",
    "sigma_op",
    "t_inv_op",
    "t_op",
    "validate_relations",
]
