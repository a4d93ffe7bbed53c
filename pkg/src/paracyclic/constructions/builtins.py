"""
BuiltinRegistry — named module builders available without input files.

Every builder takes the coefficient ring, the truncation degree and the
twist scalar (used only by ``scalar-twisted-u``).  ``duchain-file`` is listed
for discoverability but needs an input file, so the CLI resolves it itself.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass

from paracyclic.constructions.algebra import (
    algebra_cyclic_module,
    dual_numbers,
    dual_numbers_sign_twist,
    ground_algebra,
    twisted_paracyclic_module,
)
from paracyclic.constructions.reconstruction import promote_simplicial
from paracyclic.constructions.representable import simplex_chains, twisted_circle_module
from paracyclic.core.errors import MalformedInput
from paracyclic.core.logging import get_logger
from paracyclic.linalg import CoefficientRing
from paracyclic.modules.duplicial import TruncatedDuplicialModule

log = get_logger(__name__)

Builder = Callable[[CoefficientRing, int, str], TruncatedDuplicialModule]

DUCHAIN_FILE = "duchain-file"


@dataclass(frozen=True)
class BuiltinInfo:
    name: str
    summary: str
    builder: Builder | None


class BuiltinRegistry:
    """Name → builder; registering an existing name replaces it."""

    def __init__(self) -> None:
        self._builders: dict[str, BuiltinInfo] = {}

    def register(self, name: str, summary: str, builder: Builder | None) -> None:
        if name in self._builders:
            log.debug("builtin '%s' replaced", name)
        self._builders[name] = BuiltinInfo(name, summary, builder)
        log.trace("registered builtin '%s'", name)  # type: ignore[attr-defined]

    def build(
        self, name: str, ring: CoefficientRing, n_max: int, twist: str = "2"
    ) -> TruncatedDuplicialModule:
        info = self.get(name)
        if info.builder is None:
            raise MalformedInput(f"builtin '{name}' needs an input file")
        log.debug("building builtin '%s' over %s up to degree %d", name, ring, n_max)
        return info.builder(ring, n_max, twist)

    def get(self, name: str) -> BuiltinInfo:
        try:
            return self._builders[name]
        except KeyError:
            known = ", ".join(self._builders)
            raise MalformedInput(f"unknown builtin '{name}'; expected one of {known}") from None

    def names(self) -> list[str]:
        return list(self._builders)

    def all(self) -> list[BuiltinInfo]:
        return list(self._builders.values())

    def __contains__(self, name: object) -> bool:
        return name in self._builders

    def __len__(self) -> int:
        return len(self._builders)

    def __repr__(self) -> str:
        return f"BuiltinRegistry({self.names()})"


def _simplex(k: int) -> Builder:
    return lambda ring, n_max, _: promote_simplicial(simplex_chains(k, n_max, ring))


def default_registry() -> BuiltinRegistry:
    registry = BuiltinRegistry()
    registry.register(
        "ground-ring",
        "cyclic module of the ground ring: ranks 1, every map the identity",
        lambda ring, n_max, _: algebra_cyclic_module(ground_algebra(ring), n_max),
    )
    for k in range(3):
        registry.register(
            f"simplex-{k}", f"chains on the standard {k}-simplex, promoted to cyclic", _simplex(k)
        )
    registry.register(
        "dual-numbers",
        "cyclic module of R[x]/(x²)",
        lambda ring, n_max, _: algebra_cyclic_module(dual_numbers(ring), n_max),
    )
    registry.register(
        "dual-numbers-twisted",
        "R[x]/(x²) twisted by σ(x) = -x",
        lambda ring, n_max, _: twisted_paracyclic_module(dual_numbers_sign_twist(ring), n_max),
    )
    registry.register(
        "scalar-twisted-u",
        "twisted circle module with T = u (u from --twist)",
        lambda ring, n_max, twist: twisted_circle_module(twist, n_max, ring),
    )
    registry.register(DUCHAIN_FILE, "reconstruction of a duchain complex read from --input", None)
    return registry
