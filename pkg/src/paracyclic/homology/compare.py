"""(M, b) against (N(M), b), and Hochschild homology of small algebras."""

from __future__ import annotations

from dataclasses import dataclass

from paracyclic.constructions.algebra import (
    AlgebraSpec,
    algebra_cyclic_module,
    twisted_paracyclic_module,
)
from paracyclic.core.errors import DegreeOutOfRange
from paracyclic.core.logging import get_logger
from paracyclic.homology.groups import HomologyGroup, module_complex
from paracyclic.modules.duplicial import TruncatedDuplicialModule
from paracyclic.modules.operators import b_op, dold_puppe_projection, em_homotopy_phi

log = get_logger(__name__)


def _euler(groups: list[HomologyGroup]) -> int:
    return sum(-g.free_rank if g.degree % 2 else g.free_rank for g in groups)


@dataclass(frozen=True)
class HomologyComparison:
    full: tuple[HomologyGroup, ...]
    normalized: tuple[HomologyGroup, ...]
    homotopy_holds: bool

    @property
    def agrees(self) -> bool:
        return self.full == self.normalized

    @property
    def euler_full(self) -> int:
        return _euler(list(self.full))

    @property
    def euler_normalized(self) -> int:
        return _euler(list(self.normalized))

    def mismatches(self) -> list[int]:
        return [f.degree for f, g in zip(self.full, self.normalized) if f != g]


def _homotopy_holds(M: TruncatedDuplicialModule) -> bool:
    """b_{n+1}φ_n + φ_{n-1}b_n = p_n - 1 for every n < n_max."""
    for n in range(M.n_max):
        lhs = b_op(M, n + 1) @ em_homotopy_phi(M, n) + em_homotopy_phi(M, n - 1) @ b_op(M, n)
        if lhs != dold_puppe_projection(M, n) - M.identity(n):
            log.warning("%s: Eilenberg–MacLane homotopy fails at degree %d", M.name, n)
            return False
    return True


def normalized_vs_full_homology(M: TruncatedDuplicialModule) -> HomologyComparison:
    full = tuple(module_complex(M, "full").homologies())
    normalized = tuple(module_complex(M, "normalized").homologies())
    comparison = HomologyComparison(full, normalized, _homotopy_holds(M))
    log.info(
        "%s: full and normalized homology %s in degrees 0..%d",
        M.name,
        "agree" if comparison.agrees else "differ",
        M.n_max - 1,
    )
    return comparison


def hochschild_homology(algebra: AlgebraSpec, up_to: int) -> list[HomologyGroup]:
    """HH_0 … HH_up_to from the bar complex C_•(A) (twisted when σ is given)."""
    if up_to < 0:
        raise DegreeOutOfRange(f"up_to must be >= 0, got {up_to}")
    if algebra.automorphism is None:
        M = algebra_cyclic_module(algebra, up_to + 1)
    else:
        M = twisted_paracyclic_module(algebra, up_to + 1)
    return module_complex(M, "full").homologies()
