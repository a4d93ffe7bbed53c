from paracyclic.homology.compare import (
    HomologyComparison,
    hochschild_homology,
    normalized_vs_full_homology,
)
from paracyclic.homology.groups import (
    ChainComplex,
    HomologyGroup,
    chain_homology,
    homology_group,
    module_complex,
)
from paracyclic.homology.mixed import Flavor, MixedHomology, mixed_complex_homology

__all__ = [
    "ChainComplex",
    "Flavor",
    "HomologyComparison",
    "HomologyGroup",
    "MixedHomology",
    "chain_homology",
    "hochschild_homology",
    "homology_group",
    "mixed_complex_homology",
    "module_complex",
    "normalized_vs_full_homology",
]
