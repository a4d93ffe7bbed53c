"""Finite truncations of the mixed complexes (M[u], b + uB) and (M[v], d + vD).

u has degree -2 and v degree +2; both are cut off at weight W (u^{W+1} = 0).

bB:  Tot_n = ⊕_{j<=W} u^j C_{n+2j}, differential b + uB, homological.
     Stable for -2W <= n <= n_max - 2W - 1.
dD:  Tot^n = ⊕_{j<=W} v^j C_{n-2j}, differential d + vD, cohomological.
     Stable for 0 <= n <= n_max - 1.

On the normalized carrier B and D are followed by p to land back in N.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass
from enum import Enum

from paracyclic.core.errors import DegreeOutOfRange, MissingExtraDegeneracy
from paracyclic.core.logging import get_logger
from paracyclic.homology.groups import Carrier, HomologyGroup, homology_group
from paracyclic.linalg import Matrix
from paracyclic.modules.dold_kan import normalized_rank, restrict_to_normalized
from paracyclic.modules.duplicial import TruncatedDuplicialModule as Module
from paracyclic.modules.operators import b_op, connes_B, d_op, dold_puppe_projection, gs_D

log = get_logger(__name__)


class Flavor(str, Enum):
    BB = "bB"
    DD = "dD"


@dataclass(frozen=True)
class MixedHomology:
    """Groups in the stable window, highest degree first."""

    flavor: Flavor
    weight: int
    carrier: str
    window: tuple[int, int]
    groups: tuple[HomologyGroup, ...]


class _Carrier:
    """Ranks and operators on M or on N(M)."""

    def __init__(self, M: Module, carrier: Carrier) -> None:
        self.M = M
        self.normalized = carrier == "normalized"

    def rank(self, k: int) -> int:
        if not 0 <= k <= self.M.n_max:
            return 0
        return normalized_rank(self.M, k) if self.normalized else self.M.ranks[k]

    def _restrict(self, op: Matrix, source: int, target: int, project: bool) -> Matrix:
        if not self.normalized:
            return op
        if project:
            op = dold_puppe_projection(self.M, target) @ op
        return restrict_to_normalized(self.M, op, source, target)

    def b(self, k: int) -> Matrix:
        return self._restrict(b_op(self.M, k), k, k - 1, project=False)

    def d(self, k: int) -> Matrix:
        return self._restrict(d_op(self.M, k), k, k + 1, project=True)

    def B(self, k: int) -> Matrix:
        return self._restrict(connes_B(self.M, k), k, k + 1, project=True)

    def D(self, k: int) -> Matrix:
        return self._restrict(gs_D(self.M, k), k, k - 1, project=True)


Component = Callable[[int], int]


def _total_map(
    C: _Carrier,
    weight: int,
    source: Component,
    target: Component,
    diagonal: Callable[[int], Matrix | None],
    raised: Callable[[int], Matrix | None],
) -> Matrix:
    """Block matrix: column j goes to row j by ``diagonal`` and to row j+1 by ``raised``.

    ``source(j)`` / ``target(j)`` give the carrier degree of weight-j components.
    """
    ring = C.M.ring
    col_sizes = [C.rank(source(j)) for j in range(weight + 1)]
    row_sizes = [C.rank(target(j)) for j in range(weight + 1)]
    grid: list[list[Matrix]] = [
        [Matrix.zero(ring, r, c) for c in col_sizes] for r in row_sizes
    ]
    for j in range(weight + 1):
        if not col_sizes[j]:
            continue
        if row_sizes[j]:
            block = diagonal(source(j))
            if block is not None:
                grid[j][j] = block
        if j < weight and row_sizes[j + 1]:
            block = raised(source(j))
            if block is not None:
                grid[j + 1][j] = block
    rows = [Matrix.hstack(ring, r, grid[i]) for i, r in enumerate(row_sizes)]
    return Matrix.vstack(ring, sum(col_sizes), rows)


def _bB(C: _Carrier, weight: int) -> tuple[tuple[int, int], Callable[[int], HomologyGroup]]:
    N = C.M.n_max
    low, high = -2 * weight, N - 2 * weight - 1

    def boundary(n: int) -> Matrix:
        # Tot_n → Tot_{n-1}
        return _total_map(
            C,
            weight,
            source=lambda j: n + 2 * j,
            target=lambda j: n - 1 + 2 * j,
            diagonal=lambda k: C.b(k) if k >= 1 else None,
            raised=lambda k: C.B(k) if k + 1 <= N else None,
        )

    def group(n: int) -> HomologyGroup:
        size = sum(C.rank(n + 2 * j) for j in range(weight + 1))
        return homology_group(C.M.ring, n, size, boundary(n), boundary(n + 1))

    return (low, high), group


def _dD(C: _Carrier, weight: int) -> tuple[tuple[int, int], Callable[[int], HomologyGroup]]:
    N = C.M.n_max
    low, high = 0, N - 1

    def coboundary(n: int) -> Matrix:
        # Tot^n → Tot^{n+1}
        return _total_map(
            C,
            weight,
            source=lambda j: n - 2 * j,
            target=lambda j: n + 1 - 2 * j,
            diagonal=lambda k: C.d(k) if k + 1 <= N else None,
            raised=lambda k: C.D(k) if k >= 1 else None,
        )

    def group(n: int) -> HomologyGroup:
        size = sum(C.rank(n - 2 * j) for j in range(weight + 1))
        return homology_group(C.M.ring, n, size, coboundary(n), coboundary(n - 1))

    return (low, high), group


def mixed_complex_homology(
    M: Module,
    flavor: Flavor | str = Flavor.BB,
    weight: int = 1,
    carrier: Carrier = "normalized",
) -> MixedHomology:
    """Homology of the weight-W truncation, reported only in its stable window."""
    flavor = Flavor(flavor)
    if weight < 0:
        raise DegreeOutOfRange(f"weight cutoff must be >= 0, got {weight}")
    if not M.is_duplicial:
        raise MissingExtraDegeneracy(f"{M.name} has no extra degeneracy; B and D are undefined")
    C = _Carrier(M, carrier)
    window, group = (_bB if flavor is Flavor.BB else _dD)(C, weight)
    low, high = window
    groups = tuple(group(n) for n in range(high, low - 1, -1))
    log.info(
        "%s: %s homology, W=%d, carrier=%s, window %d..%d",
        M.name, flavor.value, weight, carrier, low, high,
    )
    return MixedHomology(flavor, weight, carrier, window, groups)
