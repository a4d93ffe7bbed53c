"""Cyclic and twisted paracyclic modules of finite-dimensional algebras.

C_n(A) = A^{⊗(n+1)} with basis words (a₀,…,a_n) of basis indices in
lexicographic order.  With an automorphism σ:

    ∂_i(a) = a₀⊗…⊗a_i a_{i+1}⊗…⊗a_n            0 <= i < n
    ∂_n(a) = σ⁻¹(a_n) a₀⊗a₁⊗…⊗a_{n-1}
    s_i(a) = a₀⊗…⊗a_i⊗1⊗a_{i+1}⊗…⊗a_n           0 <= i <= n
    s_{n+1}(a) = 1⊗a₁⊗…⊗a_n⊗σ(a₀)
    t(a) = a₁⊗…⊗a_n⊗σ(a₀)

σ = identity gives the cyclic module of A.
"""

from __future__ import annotations

from collections.abc import Callable, Iterator, Sequence
from dataclasses import dataclass
from itertools import product

from paracyclic.core.errors import (
    DegreeOutOfRange,
    InvalidAlgebra,
    NonInvertibleAutomorphism,
    NotInvertible,
)
from paracyclic.core.logging import get_logger
from paracyclic.linalg import CoefficientRing, Matrix, Scalar, invert
from paracyclic.modules.duplicial import TruncatedDuplicialModule

log = get_logger(__name__)

Word = tuple[int, ...]
Terms = Iterator[tuple[Scalar, Word]]


@dataclass(frozen=True)
class AlgebraSpec:
    """A k-dimensional unital algebra by structure constants.

    ``mult[i][j][l]`` is the coefficient of e_l in e_i·e_j; ``automorphism``
    acts on column vectors, so σ(e_j) = Σ_i automorphism[i, j] e_i.
    Construction validates unit, associativity and the automorphism.
    """

    ring: CoefficientRing
    dim: int
    unit: tuple[Scalar, ...]
    mult: tuple[tuple[tuple[Scalar, ...], ...], ...]
    automorphism: Matrix | None = None
    name: str = "algebra"

    @classmethod
    def build(
        cls,
        ring: CoefficientRing,
        unit: Sequence[Scalar | int | str],
        mult: Sequence[Sequence[Sequence[Scalar | int | str]]],
        automorphism: Sequence[Sequence[Scalar | int | str]] | None = None,
        name: str = "algebra",
    ) -> AlgebraSpec:
        dim = len(unit)
        if len(mult) != dim or any(
            len(row) != dim or any(len(c) != dim for c in row) for row in mult
        ):
            raise InvalidAlgebra(f"structure constants must be {dim}x{dim}x{dim}")
        scalar = ring.parse_scalar
        sigma = None
        if automorphism is not None:
            if len(automorphism) != dim or any(len(r) != dim for r in automorphism):
                raise InvalidAlgebra(f"automorphism must be {dim}x{dim}")
            sigma = Matrix.from_rows(ring, [[scalar(x) for x in r] for r in automorphism], dim)
        return cls(
            ring=ring,
            dim=dim,
            unit=tuple(scalar(x) for x in unit),
            mult=tuple(tuple(tuple(scalar(x) for x in c) for c in row) for row in mult),
            automorphism=sigma,
            name=name,
        )

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise InvalidAlgebra("an algebra needs dimension >= 1")
        self._check_unit()
        self._check_associative()
        if self.automorphism is not None:
            self._check_automorphism()

    # ------------------------------------------------------------------
    # Arithmetic on coordinate vectors
    # ------------------------------------------------------------------

    def basis(self, i: int) -> tuple[Scalar, ...]:
        r = self.ring
        return tuple(r.one if j == i else r.zero for j in range(self.dim))

    def multiply(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> tuple[Scalar, ...]:
        r, k = self.ring, self.dim
        out = [r.zero] * k
        for i in range(k):
            if r.is_zero(x[i]):
                continue
            for j in range(k):
                if r.is_zero(y[j]):
                    continue
                for l in range(k):
                    out[l] = out[l] + x[i] * y[j] * self.mult[i][j][l]
        return tuple(r.normalize(v) for v in out)

    @property
    def sigma(self) -> Matrix:
        return self.automorphism or Matrix.identity(self.ring, self.dim)

    @property
    def is_twisted(self) -> bool:
        return self.automorphism is not None and not self.automorphism.is_identity()

    # ------------------------------------------------------------------
    # Validation
    # ------------------------------------------------------------------

    def _check_unit(self) -> None:
        for i in range(self.dim):
            e = self.basis(i)
            if self.multiply(self.unit, e) != e or self.multiply(e, self.unit) != e:
                raise InvalidAlgebra(f"unit is not a two-sided identity on e_{i}")

    def _check_associative(self) -> None:
        for i, j, l in product(range(self.dim), repeat=3):
            a, b, c = self.basis(i), self.basis(j), self.basis(l)
            if self.multiply(self.multiply(a, b), c) != self.multiply(a, self.multiply(b, c)):
                raise InvalidAlgebra(f"product is not associative on (e_{i}, e_{j}, e_{l})")

    def _check_automorphism(self) -> None:
        sigma = self.sigma
        try:
            invert(sigma)
        except NotInvertible as exc:
            raise NonInvertibleAutomorphism(f"automorphism is not invertible: {exc}") from exc
        if sigma.apply(self.unit) != self.unit:
            raise InvalidAlgebra("automorphism does not fix the unit")
        for i, j in product(range(self.dim), repeat=2):
            lhs = sigma.apply(self.multiply(self.basis(i), self.basis(j)))
            rhs = self.multiply(sigma.column(i), sigma.column(j))
            if lhs != rhs:
                raise InvalidAlgebra(f"automorphism is not multiplicative on (e_{i}, e_{j})")


# ---------------------------------------------------------------------------
# Example algebras
# ---------------------------------------------------------------------------


def ground_algebra(ring: CoefficientRing) -> AlgebraSpec:
    return AlgebraSpec.build(ring, [1], [[[1]]], name="ground-ring")


def dual_numbers(ring: CoefficientRing) -> AlgebraSpec:
    """R[x]/(x²) on the basis 1, x."""
    mult = [[[1, 0], [0, 1]], [[0, 1], [0, 0]]]
    return AlgebraSpec.build(ring, [1, 0], mult, name="dual-numbers")


def dual_numbers_sign_twist(ring: CoefficientRing) -> AlgebraSpec:
    """R[x]/(x²) with σ(x) = -x."""
    base = dual_numbers(ring)
    return AlgebraSpec.build(
        ring,
        base.unit,
        base.mult,
        automorphism=[[1, 0], [0, -1]],
        name="dual-numbers-twisted",
    )


# ---------------------------------------------------------------------------
# Tensor modules
# ---------------------------------------------------------------------------


class _TensorMaps:
    """Structure maps of C_•(A) on basis words."""

    def __init__(self, algebra: AlgebraSpec, twisted: bool) -> None:
        self.algebra = algebra
        self.ring = algebra.ring
        sigma = algebra.sigma if twisted else Matrix.identity(self.ring, algebra.dim)
        self.sigma = sigma
        self.sigma_inv = invert(sigma)

    def _vector(self, x: Sequence[Scalar]) -> Iterator[tuple[Scalar, int]]:
        for l, c in enumerate(x):
            if not self.ring.is_zero(c):
                yield c, l

    def face(self, n: int, i: int) -> Callable[[Word], Terms]:
        A = self.algebra

        def inner(a: Word) -> Terms:
            for c, l in self._vector(A.multiply(A.basis(a[i]), A.basis(a[i + 1]))):
                yield c, a[:i] + (l,) + a[i + 2:]

        def wrap(a: Word) -> Terms:
            wrapped = A.multiply(self.sigma_inv.column(a[n]), A.basis(a[0]))
            for c, l in self._vector(wrapped):
                yield c, (l,) + a[1:n]

        return inner if i < n else wrap

    def degeneracy(self, n: int, i: int) -> Callable[[Word], Terms]:
        unit = self.algebra.unit

        def inner(a: Word) -> Terms:
            for c, l in self._vector(unit):
                yield c, a[: i + 1] + (l,) + a[i + 1:]

        def extra(a: Word) -> Terms:
            for c, l in self._vector(unit):
                for d, p in self._vector(self.sigma.column(a[0])):
                    yield c * d, (l,) + a[1:] + (p,)

        return inner if i <= n else extra

    def shift(self, a: Word) -> Terms:
        for c, p in self._vector(self.sigma.column(a[0])):
            yield c, a[1:] + (p,)

    def shift_inverse(self, a: Word) -> Terms:
        for c, p in self._vector(self.sigma_inv.column(a[-1])):
            yield c, (p,) + a[:-1]


def _words(k: int, n: int) -> list[Word]:
    return list(product(range(k), repeat=n + 1))


def _linear_map(
    ring: CoefficientRing, k: int, source: int, target: int, fn: Callable[[Word], Terms]
) -> Matrix:
    rows = k ** (target + 1)
    columns = []
    for word in _words(k, source):
        column = [ring.zero] * rows
        for c, image in fn(word):
            index = 0
            for letter in image:
                index = index * k + letter
            column[index] = ring.normalize(column[index] + c)
        columns.append(column)
    return Matrix.from_columns(ring, columns, rows)


def _tensor_module(algebra: AlgebraSpec, n_max: int, twisted: bool) -> TruncatedDuplicialModule:
    if n_max < 0:
        raise DegreeOutOfRange(f"n_max must be >= 0, got {n_max}")
    ring, k = algebra.ring, algebra.dim
    maps = _TensorMaps(algebra, twisted)
    face = [()] + [
        tuple(_linear_map(ring, k, n, n - 1, maps.face(n, i)) for i in range(n + 1))
        for n in range(1, n_max + 1)
    ]
    degen = [
        tuple(_linear_map(ring, k, n, n + 1, maps.degeneracy(n, i)) for i in range(n + 2))
        for n in range(n_max)
    ]
    t = tuple(_linear_map(ring, k, n, n, maps.shift) for n in range(n_max + 1))
    t_inv = tuple(_linear_map(ring, k, n, n, maps.shift_inverse) for n in range(n_max + 1))
    log.debug("%s: tensor module up to degree %d (twisted=%s)", algebra.name, n_max, twisted)
    return TruncatedDuplicialModule(
        ring=ring,
        n_max=n_max,
        ranks=tuple(k ** (n + 1) for n in range(n_max + 1)),
        face=tuple(face),
        degen=tuple(degen),
        t=t,
        t_inv=t_inv,
        name=algebra.name,
    )


def algebra_cyclic_module(algebra: AlgebraSpec, n_max: int) -> TruncatedDuplicialModule:
    """The cyclic module C_•(A); a non-trivial automorphism is rejected."""
    if algebra.is_twisted:
        raise InvalidAlgebra(f"{algebra.name} carries an automorphism; use the twisted module")
    return _tensor_module(algebra, n_max, twisted=False)


def twisted_paracyclic_module(algebra: AlgebraSpec, n_max: int) -> TruncatedDuplicialModule:
    """C_•(A) twisted by σ; T_n = σ^{⊗(n+1)}."""
    if algebra.automorphism is None:
        raise InvalidAlgebra(f"{algebra.name} has no automorphism to twist by")
    return _tensor_module(algebra, n_max, twisted=True)
