"""Homology groups of finite chain complexes over Z or a field.

Over a field H_n has dimension rank C_n - rank ∂_n - rank ∂_{n+1}.  Over Z
the free rank is the same number and the torsion is read off the Smith form
of ∂_{n+1}: ker ∂_n is a direct summand, so the torsion of coker ∂_{n+1} is
the torsion of H_n.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from typing import Literal

from paracyclic.core.errors import DegreeOutOfRange, NotAComplex
from paracyclic.core.logging import get_logger
from paracyclic.linalg import CoefficientRing, Matrix, rank, smith_normal_form
from paracyclic.modules.dold_kan import normalized_rank, restrict_to_normalized
from paracyclic.modules.duplicial import TruncatedDuplicialModule
from paracyclic.modules.operators import b_op

log = get_logger(__name__)

Carrier = Literal["full", "normalized"]


@dataclass(frozen=True)
class HomologyGroup:
    """free_rank copies of the ring plus ⊕ Z/torsion[i]; torsion divides upward."""

    degree: int
    free_rank: int
    torsion: tuple[int, ...] = ()

    @property
    def is_zero(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def format(self, ring: CoefficientRing) -> str:
        if self.is_zero:
            return "0"
        base = {"Z": "Z", "Q": "Q"}.get(str(ring), str(ring))
        parts = []
        if self.free_rank:
            parts.append(base if self.free_rank == 1 else f"{base}^{self.free_rank}")
        parts += [f"Z/{d}" for d in self.torsion]
        return " ⊕ ".join(parts)


def homology_group(
    ring: CoefficientRing,
    degree: int,
    rank_here: int,
    outgoing: Matrix,
    incoming: Matrix,
) -> HomologyGroup:
    """ker(outgoing) / im(incoming) at a single degree."""
    if outgoing.cols != rank_here or incoming.rows != rank_here:
        raise NotAComplex(f"differentials at degree {degree} do not meet a rank-{rank_here} module")
    if not (outgoing @ incoming).is_zero():
        raise NotAComplex(f"consecutive differentials at degree {degree} do not compose to zero")
    r_out, r_in = rank(outgoing), rank(incoming)
    torsion: tuple[int, ...] = ()
    if ring.is_integers and incoming.rows and incoming.cols:
        torsion = smith_normal_form(incoming).torsion
    group = HomologyGroup(degree, rank_here - r_out - r_in, torsion)
    log.trace("H at %d: %s", degree, group)  # type: ignore[attr-defined]
    return group


@dataclass(frozen=True)
class ChainComplex:
    """C_low … C_high with ∂_n : C_n → C_{n-1} for low < n <= high.

    ``complete`` declares C_{high+1} = 0, making H_high computable;
    otherwise the top degree is truncation and has no homology.
    """

    ring: CoefficientRing
    ranks: Mapping[int, int]
    differentials: Mapping[int, Matrix] = field(default_factory=dict)
    complete: bool = False
    name: str = "complex"

    def __post_init__(self) -> None:
        for n, m in self.differentials.items():
            if m.shape != (self.rank(n - 1), self.rank(n)):
                raise NotAComplex(
                    f"∂_{n} has shape {m.shape}, expected {(self.rank(n - 1), self.rank(n))}"
                )

    @property
    def low(self) -> int:
        return min(self.ranks, default=0)

    @property
    def high(self) -> int:
        return max(self.ranks, default=-1)

    def rank(self, n: int) -> int:
        return self.ranks.get(n, 0)

    def differential(self, n: int) -> Matrix:
        if n in self.differentials:
            return self.differentials[n]
        if n > self.high + (1 if self.complete else 0):
            raise DegreeOutOfRange(f"∂_{n} lies beyond the truncation of {self.name}")
        return Matrix.zero(self.ring, self.rank(n - 1), self.rank(n))

    def homology_degrees(self) -> range:
        return range(self.low, self.high + (1 if self.complete else 0))

    def homology(self, n: int) -> HomologyGroup:
        return chain_homology(self, n)

    def homologies(self) -> list[HomologyGroup]:
        return [chain_homology(self, n) for n in self.homology_degrees()]


def chain_homology(complex_: ChainComplex, n: int) -> HomologyGroup:
    """H_n = ker ∂_n / im ∂_{n+1}."""
    if n not in complex_.homology_degrees() and complex_.rank(n):
        raise DegreeOutOfRange(f"H_{n} of {complex_.name} depends on truncated degrees")
    if not complex_.rank(n):
        return HomologyGroup(n, 0)
    return homology_group(
        complex_.ring,
        n,
        complex_.rank(n),
        complex_.differential(n),
        complex_.differential(n + 1),
    )


def module_complex(M: TruncatedDuplicialModule, carrier: Carrier = "full") -> ChainComplex:
    """(M, b) or (N(M), b) in the normalized bases."""
    degrees = range(M.n_max + 1)
    if carrier == "full":
        ranks = {n: M.ranks[n] for n in degrees}
        diffs = {n: b_op(M, n) for n in range(1, M.n_max + 1)}
    else:
        ranks = {n: normalized_rank(M, n) for n in degrees}
        diffs = {
            n: restrict_to_normalized(M, b_op(M, n), n, n - 1) for n in range(1, M.n_max + 1)
        }
    return ChainComplex(M.ring, ranks, diffs, name=f"{carrier}({M.name})")
