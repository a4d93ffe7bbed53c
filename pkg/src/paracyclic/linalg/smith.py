"""Smith normal form over the integers with unimodular transforms.

``smith_normal_form(A)`` returns ``(S, U, V)`` with ``U @ A @ V == S``,
S diagonal with nonnegative entries, the nonzero invariants first.
"""

from __future__ import annotations

from dataclasses import dataclass

from sympy.polys.matrices.normalforms import smith_normal_decomp

from paracyclic.core.errors import UnsupportedRing
from paracyclic.core.logging import get_logger
from paracyclic.linalg.matrix import Matrix

log = get_logger(__name__)


@dataclass(frozen=True)
class SmithDecomposition:
    form: Matrix
    left: Matrix
    right: Matrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(int(self.form[i, i]) for i in range(min(self.form.shape)))

    @property
    def invariants(self) -> tuple[int, ...]:
        return tuple(d for d in self.diagonal if d != 0)

    @property
    def rank(self) -> int:
        return len(self.invariants)

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.invariants if d > 1)

    def __iter__(self):
        return iter((self.form, self.left, self.right))


def smith_normal_form(matrix: Matrix) -> SmithDecomposition:
    """Smith normal form of an integer matrix."""
    ring = matrix.ring
    if not ring.is_integers:
        raise UnsupportedRing(f"Smith normal form needs integer coefficients, got {ring}")
    form, left, right = smith_normal_decomp(matrix.rep)
    log.trace("smith normal form of %dx%d matrix", *matrix.shape)  # type: ignore[attr-defined]
    return SmithDecomposition(
        form=Matrix(ring, form), left=Matrix(ring, left), right=Matrix(ring, right)
    )
