"""Morphisms of the periodic index category Λ∞ and its subcategories.

A morphism f: [m] → [n] is stored by its values on {0..m}; it extends to ℤ
by f(q(m+1) + r) = f(r) + q(n+1).  Membership in Λ∞ requires f monotone with
f(m) <= f(0) + n + 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations_with_replacement

from paracyclic.core.errors import DegreeMismatch, IndexOutOfRange, InvalidMorphism


class MorphismClass(str, Enum):
    DELTA = "Delta"
    LAMBDA_PLUS = "LambdaPlusOnly"
    LAMBDA_INFINITY = "LambdaInfinityOnly"


class GeneratorKind(str, Enum):
    FACE = "e"
    DEGENERACY = "h"
    SHIFT = "t"
    SHIFT_INVERSE = "t_inv"


@dataclass(frozen=True)
class IndexMorphism:
    m: int
    n: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.m < 0 or self.n < 0:
            raise InvalidMorphism(f"negative degree in [{self.m}] -> [{self.n}]")
        if len(self.values) != self.m + 1:
            raise InvalidMorphism(
                f"need {self.m + 1} values for a morphism out of [{self.m}], got {len(self.values)}"
            )
        if any(a > b for a, b in zip(self.values, self.values[1:])):
            raise InvalidMorphism(f"values {self.values} are not monotone")
        if self.values[-1] > self.values[0] + self.n + 1:
            raise InvalidMorphism(
                f"values {self.values} exceed one period of [{self.n}]"
            )

    @classmethod
    def of(cls, m: int, n: int, values: list[int] | tuple[int, ...]) -> IndexMorphism:
        return cls(m, n, tuple(int(v) for v in values))

    @classmethod
    def identity(cls, n: int) -> IndexMorphism:
        return cls(n, n, tuple(range(n + 1)))

    def __call__(self, j: int) -> int:
        q, r = divmod(j, self.m + 1)
        return self.values[r] + q * (self.n + 1)

    @property
    def is_identity(self) -> bool:
        return self.m == self.n and self.values == tuple(range(self.n + 1))

    def shifted(self, amount: int) -> IndexMorphism:
        """j ↦ f(j + amount), i.e. f ∘ τ^amount."""
        return IndexMorphism(self.m, self.n, tuple(self(j + amount) for j in range(self.m + 1)))

    def __str__(self) -> str:
        return f"[{self.m}]->[{self.n}] {list(self.values)}"


def compose(g: IndexMorphism, f: IndexMorphism) -> IndexMorphism:
    """g ∘ f, defined when f's codomain is g's domain."""
    if f.n != g.m:
        raise DegreeMismatch(f"cannot compose [{g.m}]->[{g.n}] after [{f.m}]->[{f.n}]")
    return IndexMorphism(f.m, g.n, tuple(g(v) for v in f.values))


def generator(kind: GeneratorKind | str, n: int, i: int = 0) -> IndexMorphism:
    """The generator ε_i^n, η_i^n, τ_n or τ_n⁻¹.

    ε_i^n : [n-1] → [n] skips i (0 <= i <= n, n >= 1);
    η_i^n : [n+1] → [n] repeats i (0 <= i <= n+1), η_{n+1}^n sends n+1 to n+1;
    τ_n   : j ↦ j + 1, τ_n⁻¹ : j ↦ j - 1.
    """
    kind = GeneratorKind(kind)
    if n < 0:
        raise IndexOutOfRange(f"negative degree {n}")
    if kind is GeneratorKind.FACE:
        if n < 1 or not 0 <= i <= n:
            raise IndexOutOfRange(f"face ε_{i}^{n} needs n >= 1 and 0 <= i <= n")
        return IndexMorphism(n - 1, n, tuple(j if j < i else j + 1 for j in range(n)))
    if kind is GeneratorKind.DEGENERACY:
        if not 0 <= i <= n + 1:
            raise IndexOutOfRange(f"degeneracy η_{i}^{n} needs 0 <= i <= {n + 1}")
        return IndexMorphism(n + 1, n, tuple(j if j <= i else j - 1 for j in range(n + 2)))
    if kind is GeneratorKind.SHIFT:
        return IndexMorphism(n, n, tuple(range(1, n + 2)))
    return IndexMorphism(n, n, tuple(range(-1, n)))


def classify(f: IndexMorphism) -> MorphismClass:
    if f.values[0] < 0:
        return MorphismClass.LAMBDA_INFINITY
    if f.values[-1] <= f.n:
        return MorphismClass.DELTA
    return MorphismClass.LAMBDA_PLUS


def in_lambda_plus(f: IndexMorphism) -> bool:
    return classify(f) is not MorphismClass.LAMBDA_INFINITY


def enumerate_delta(m: int, n: int) -> list[IndexMorphism]:
    """All monotone maps [m] → [n], lexicographically ordered."""
    return [
        IndexMorphism(m, n, values)
        for values in combinations_with_replacement(range(n + 1), m + 1)
    ]
