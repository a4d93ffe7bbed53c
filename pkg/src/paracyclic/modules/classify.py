"""Duplicial, paracyclic or cyclic: classification with per-degree witnesses.

A module is paracyclic when every available t_n is invertible and cyclic
when moreover every T_n is the identity.  Alongside, the restrictions of κ
and π to the normalized part are tested so that the equivalence between
invertibility of T and of κ|N can be read off the same report.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass
from enum import Enum

from paracyclic.core.errors import MissingExtraDegeneracy, UnsupportedRing
from paracyclic.core.logging import get_logger
from paracyclic.linalg import Matrix, is_invertible
from paracyclic.modules.dold_kan import restrict_to_normalized
from paracyclic.modules.duplicial import TruncatedDuplicialModule as Module
from paracyclic.modules.operators import T_op, dwyer_kan, karoubi, t_available, t_op

log = get_logger(__name__)


class ModuleKind(str, Enum):
    DUPLICIAL = "duplicial"
    PARACYCLIC = "paracyclic"
    CYCLIC = "cyclic"


@dataclass(frozen=True)
class DegreeWitness:
    """Facts at one degree; ``None`` means not decidable there (truncation or ring)."""

    degree: int
    t_invertible: bool | None
    T_identity: bool | None
    kappa_N_invertible: bool | None
    pi_N_invertible: bool | None
    pi_N_identity: bool | None


@dataclass(frozen=True)
class Classification:
    kind: ModuleKind
    witnesses: tuple[DegreeWitness, ...]

    @property
    def is_paracyclic(self) -> bool:
        return self.kind is not ModuleKind.DUPLICIAL

    @property
    def is_cyclic(self) -> bool:
        return self.kind is ModuleKind.CYCLIC

    def witness(self, n: int) -> DegreeWitness:
        return self.witnesses[n]


def _decide(compute: Callable[[], bool]) -> bool | None:
    try:
        return compute()
    except UnsupportedRing as exc:
        log.warning("classification datum undecidable: %s", exc)
        return None


def _on_normalized(M: Module, operator: Callable[[Module, int], Matrix], n: int) -> Matrix:
    return restrict_to_normalized(M, operator(M, n), n, n)


def _witness(M: Module, n: int) -> DegreeWitness:
    t_inv: bool | None = None
    T_id: bool | None = None
    kappa_inv: bool | None = None
    pi_inv: bool | None = None
    pi_id: bool | None = None
    if t_available(M, n):
        t_inv = _decide(lambda: is_invertible(t_op(M, n)))
        T_id = T_op(M, n).is_identity()
    if n < M.n_max:
        kappa_inv = _decide(lambda: is_invertible(_on_normalized(M, karoubi, n)))
        pi_inv = _decide(lambda: is_invertible(_on_normalized(M, dwyer_kan, n)))
        pi_id = _decide(lambda: _on_normalized(M, dwyer_kan, n).is_identity())
    return DegreeWitness(n, t_inv, T_id, kappa_inv, pi_inv, pi_id)


def classify_module(M: Module) -> Classification:
    """Classify a duplicial module; non-invertibility is a datum, never an error."""
    if not M.is_duplicial:
        raise MissingExtraDegeneracy(f"{M.name} is simplicial only; there is no t to classify")
    witnesses = tuple(_witness(M, n) for n in range(M.n_max + 1))
    if any(w.t_invertible is False for w in witnesses):
        kind = ModuleKind.DUPLICIAL
    elif all(w.T_identity is not False for w in witnesses):
        kind = ModuleKind.CYCLIC
    else:
        kind = ModuleKind.PARACYCLIC
    log.info("%s classified as %s", M.name, kind.value)
    return Classification(kind, witnesses)
