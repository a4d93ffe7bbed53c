"""Truncated duplicial modules and duchain complexes as matrix data.

Conventions
-----------
A module is a presheaf: the matrix of a structure map M(g) acts on column
vectors, so ``face[n][i]`` maps M_n → M_{n-1}.  ``degen[n]`` holds the inner
degeneracies s_{n,0..n} and, for duplicial modules, the extra degeneracy
s_{n,n+1} as its last entry.  ``t`` and ``t_inv`` are optional per degree.
"""

from __future__ import annotations

import threading
from collections.abc import Callable, Mapping, Sequence
from dataclasses import dataclass, field, replace
from typing import Any, TypeVar

from paracyclic.core.errors import (
    DegreeOutOfRange,
    IndexOutOfRange,
    InvalidDuchain,
    MissingExtraDegeneracy,
    ShapeMismatch,
)
from paracyclic.core.logging import get_logger
from paracyclic.linalg import CoefficientRing, Matrix, Scalar

log = get_logger(__name__)

T = TypeVar("T")
Key = tuple[int, ...]


def _check_shape(label: str, matrix: Matrix, rows: int, cols: int, ring: CoefficientRing) -> None:
    if matrix.ring != ring:
        raise ShapeMismatch(f"{label} is over {matrix.ring}, module is over {ring}")
    if matrix.shape != (rows, cols):
        raise ShapeMismatch(f"{label} has shape {matrix.shape}, expected {(rows, cols)}")


@dataclass(frozen=True, eq=False)
class TruncatedDuplicialModule:
    """Degrees 0..n_max of a (simplicial, duplicial, paracyclic) module.

    Parameters
    ----------
    ring:
        Coefficient ring of every matrix.
    n_max:
        Truncation degree.
    ranks:
        rank of M_n for 0 <= n <= n_max.
    face:
        ``face[n][i]`` for 0 <= i <= n; ``face[0]`` is empty.
    degen:
        ``degen[n]`` for 0 <= n < n_max, of length n+2 (duplicial) or n+1
        (simplicial only).
    t, t_inv:
        Optional stored t_n and t_n⁻¹, indexed by degree (empty tuple or
        ``None`` entries when absent).
    name:
        Label used in reports.
    """

    ring: CoefficientRing
    n_max: int
    ranks: tuple[int, ...]
    face: tuple[tuple[Matrix, ...], ...]
    degen: tuple[tuple[Matrix, ...], ...]
    t: tuple[Matrix | None, ...] = ()
    t_inv: tuple[Matrix | None, ...] = ()
    name: str = "module"
    _cache: dict[Any, Any] = field(default_factory=dict, repr=False, compare=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False, compare=False)

    def __post_init__(self) -> None:
        n_max, ranks, ring = self.n_max, self.ranks, self.ring
        if n_max < 0:
            raise DegreeOutOfRange(f"n_max must be >= 0, got {n_max}")
        if len(ranks) != n_max + 1 or any(r < 0 for r in ranks):
            raise ShapeMismatch(f"need {n_max + 1} nonnegative ranks, got {ranks}")
        if len(self.face) != n_max + 1:
            raise ShapeMismatch(f"need face lists for degrees 0..{n_max}")
        if len(self.degen) != n_max:
            raise ShapeMismatch(f"need degeneracy lists for degrees 0..{n_max - 1}")
        if self.face[0]:
            raise ShapeMismatch("degree 0 has no face maps")
        for n in range(1, n_max + 1):
            if len(self.face[n]) != n + 1:
                raise ShapeMismatch(f"degree {n} needs {n + 1} face maps")
            for i, f in enumerate(self.face[n]):
                _check_shape(f"face[{n}][{i}]", f, ranks[n - 1], ranks[n], ring)
        lengths = {len(self.degen[n]) - n for n in range(n_max)}
        if not lengths <= {1, 2} or len(lengths) > 1:
            raise ShapeMismatch("degeneracy lists must uniformly have length n+1 or n+2")
        for n in range(n_max):
            for i, s in enumerate(self.degen[n]):
                _check_shape(f"degen[{n}][{i}]", s, ranks[n + 1], ranks[n], ring)
        for label, maps in (("t", self.t), ("t_inv", self.t_inv)):
            if maps and len(maps) != n_max + 1:
                raise ShapeMismatch(f"{label} must list degrees 0..{n_max}")
            for n, m in enumerate(maps):
                if m is not None:
                    _check_shape(f"{label}[{n}]", m, ranks[n], ranks[n], ring)

    # ------------------------------------------------------------------
    # Structure
    # ------------------------------------------------------------------

    @property
    def is_duplicial(self) -> bool:
        if self.n_max == 0:
            return bool(self.t) and self.t[0] is not None
        return len(self.degen[0]) == 2

    @property
    def is_simplicial_only(self) -> bool:
        return not self.is_duplicial

    def check_degree(self, n: int, low: int = 0, high: int | None = None) -> None:
        high = self.n_max if high is None else high
        if not low <= n <= high:
            raise DegreeOutOfRange(f"degree {n} outside {low}..{high} (n_max={self.n_max})")

    def rank(self, n: int) -> int:
        """rank of M_n, with M_{-1} = 0."""
        if n == -1:
            return 0
        self.check_degree(n)
        return self.ranks[n]

    def face_map(self, n: int, i: int) -> Matrix:
        self.check_degree(n, 1)
        if not 0 <= i <= n:
            raise IndexOutOfRange(f"face ∂_{{{n},{i}}} needs 0 <= i <= {n}")
        return self.face[n][i]

    def degeneracy(self, n: int, i: int) -> Matrix:
        self.check_degree(n, 0, self.n_max - 1)
        if i == n + 1:
            return self.extra_degeneracy(n)
        if not 0 <= i <= n:
            raise IndexOutOfRange(f"degeneracy s_{{{n},{i}}} needs 0 <= i <= {n + 1}")
        return self.degen[n][i]

    def extra_degeneracy(self, n: int) -> Matrix:
        self.check_degree(n, 0, self.n_max - 1)
        if len(self.degen[n]) != n + 2:
            raise MissingExtraDegeneracy(f"{self.name} has no extra degeneracy s_{{{n},{n + 1}}}")
        return self.degen[n][n + 1]

    def stored_t(self, n: int) -> Matrix | None:
        return self.t[n] if self.t else None

    def stored_t_inv(self, n: int) -> Matrix | None:
        return self.t_inv[n] if self.t_inv else None

    def identity(self, n: int) -> Matrix:
        return Matrix.identity(self.ring, self.rank(n))

    def zero(self, target: int, source: int) -> Matrix:
        return Matrix.zero(self.ring, self.rank(target), self.rank(source))

    # ------------------------------------------------------------------
    # Cache
    # ------------------------------------------------------------------

    def cached(self, key: Any, compute: Callable[[], T]) -> T:
        """Memoize a pure computation; concurrent fills agree so the first wins."""
        try:
            return self._cache[key]
        except KeyError:
            pass
        value = compute()
        with self._lock:
            return self._cache.setdefault(key, value)

    # ------------------------------------------------------------------
    # Variants
    # ------------------------------------------------------------------

    def with_maps(
        self,
        *,
        face: Sequence[Sequence[Matrix]] | None = None,
        degen: Sequence[Sequence[Matrix]] | None = None,
        t: Sequence[Matrix | None] | None = None,
        t_inv: Sequence[Matrix | None] | None = None,
        name: str | None = None,
    ) -> TruncatedDuplicialModule:
        """Copy with some structure maps replaced (and an empty cache)."""
        return replace(
            self,
            face=self.face if face is None else tuple(tuple(x) for x in face),
            degen=self.degen if degen is None else tuple(tuple(x) for x in degen),
            t=self.t if t is None else tuple(t),
            t_inv=self.t_inv if t_inv is None else tuple(t_inv),
            name=self.name if name is None else name,
            _cache={},
            _lock=threading.Lock(),
        )

    def truncated(self, n_max: int) -> TruncatedDuplicialModule:
        """The same module forgetting degrees above *n_max*."""
        if not 0 <= n_max <= self.n_max:
            raise DegreeOutOfRange(f"cannot truncate degrees 0..{self.n_max} at {n_max}")
        if n_max == self.n_max:
            return self
        return TruncatedDuplicialModule(
            ring=self.ring,
            n_max=n_max,
            ranks=self.ranks[: n_max + 1],
            face=self.face[: n_max + 1],
            degen=self.degen[:n_max],
            t=self.t[: n_max + 1],
            t_inv=self.t_inv[: n_max + 1],
            name=self.name,
        )

    def over(self, ring: CoefficientRing) -> TruncatedDuplicialModule:
        """Change of coefficients along Z → Q or Z → Z/m."""

        def conv(m: Matrix | None) -> Matrix | None:
            return None if m is None else m.over(ring)

        return TruncatedDuplicialModule(
            ring=ring,
            n_max=self.n_max,
            ranks=self.ranks,
            face=tuple(tuple(m.over(ring) for m in fs) for fs in self.face),
            degen=tuple(tuple(m.over(ring) for m in ss) for ss in self.degen),
            t=tuple(conv(m) for m in self.t),
            t_inv=tuple(conv(m) for m in self.t_inv),
            name=self.name,
        )

    def __repr__(self) -> str:
        kind = "duplicial" if self.is_duplicial else "simplicial"
        return (
            f"TruncatedDuplicialModule({self.name!r}, {kind}, ring={self.ring}, "
            f"ranks={self.ranks})"
        )


@dataclass(frozen=True)
class Element:
    degree: int
    coords: tuple[Scalar, ...]

    @classmethod
    def zero(cls, module: TruncatedDuplicialModule, n: int) -> Element:
        return cls(n, (module.ring.zero,) * module.rank(n))

    @classmethod
    def basis(cls, module: TruncatedDuplicialModule, n: int, j: int) -> Element:
        ring = module.ring
        return cls(n, tuple(ring.one if k == j else ring.zero for k in range(module.rank(n))))

    def check(self, module: TruncatedDuplicialModule) -> None:
        if len(self.coords) != module.rank(self.degree):
            raise ShapeMismatch(
                f"element of degree {self.degree} has {len(self.coords)} coordinates, "
                f"rank is {module.rank(self.degree)}"
            )

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def format(self, ring: CoefficientRing) -> list[str]:
        return [ring.format(c) for c in self.coords]


@dataclass(frozen=True)
class DKDecomposition:
    """x = Σ s_{n-1,i₁}…s_{n-k,i_k} x_{i₁…i_k} with every x_key normalized."""

    degree: int
    components: Mapping[Key, Element]

    def ordered(self) -> list[tuple[Key, Element]]:
        return sorted(self.components.items(), key=lambda kv: (len(kv[0]), kv[0]))

    def nonzero(self) -> dict[Key, Element]:
        return {k: v for k, v in self.components.items() if not v.is_zero}


@dataclass(frozen=True, eq=False)
class DuchainComplex:
    """A graded module with differentials b (degree -1) and d (degree +1).

    ``b[n]`` for 0 <= n <= n_max (``b[0]`` maps to the zero module);
    ``d[n]`` for 0 <= n < n_max.  ``d_vanishes`` declares d ≡ 0 in every
    degree, including the unrecorded d_{n_max}.
    """

    ring: CoefficientRing
    n_max: int
    ranks: tuple[int, ...]
    b: tuple[Matrix, ...]
    d: tuple[Matrix, ...]
    d_vanishes: bool = False
    name: str = "duchain"

    def __post_init__(self) -> None:
        n_max, ranks, ring = self.n_max, self.ranks, self.ring
        if n_max < 0:
            raise InvalidDuchain(f"n_max must be >= 0, got {n_max}")
        if len(ranks) != n_max + 1 or any(r < 0 for r in ranks):
            raise InvalidDuchain(f"need {n_max + 1} nonnegative ranks, got {ranks}")
        if len(self.b) != n_max + 1 or len(self.d) != n_max:
            raise InvalidDuchain(f"need b[0..{n_max}] and d[0..{n_max - 1}]")
        try:
            for n, m in enumerate(self.b):
                _check_shape(f"b[{n}]", m, ranks[n - 1] if n else 0, ranks[n], ring)
            for n, m in enumerate(self.d):
                _check_shape(f"d[{n}]", m, ranks[n + 1], ranks[n], ring)
        except ShapeMismatch as exc:
            raise InvalidDuchain(str(exc)) from exc
        for n in range(2, n_max + 1):
            if not (self.b[n - 1] @ self.b[n]).is_zero():
                raise InvalidDuchain(f"b[{n - 1}]·b[{n}] ≠ 0")
        for n in range(n_max - 1):
            if not (self.d[n + 1] @ self.d[n]).is_zero():
                raise InvalidDuchain(f"d[{n + 1}]·d[{n}] ≠ 0")
        if self.d_vanishes and not all(m.is_zero() for m in self.d):
            raise InvalidDuchain("d_vanishes declared but some d[n] is nonzero")

    @classmethod
    def from_maps(
        cls,
        ring: CoefficientRing,
        ranks: Sequence[int],
        b: Mapping[int, Matrix] | None = None,
        d: Mapping[int, Matrix] | None = None,
        *,
        d_vanishes: bool = False,
        name: str = "duchain",
    ) -> DuchainComplex:
        """Fill unspecified differentials with zero maps."""
        ranks = tuple(ranks)
        n_max = len(ranks) - 1
        b = dict(b or {})
        d = dict(d or {})
        bs = tuple(
            b.get(n, Matrix.zero(ring, ranks[n - 1] if n else 0, ranks[n]))
            for n in range(n_max + 1)
        )
        ds = tuple(d.get(n, Matrix.zero(ring, ranks[n + 1], ranks[n])) for n in range(n_max))
        return cls(ring, n_max, ranks, bs, ds, d_vanishes=d_vanishes, name=name)

    def rank(self, n: int) -> int:
        return self.ranks[n] if 0 <= n <= self.n_max else 0

    def b_map(self, n: int) -> Matrix:
        if not 0 <= n <= self.n_max:
            raise DegreeOutOfRange(f"b[{n}] outside 0..{self.n_max}")
        return self.b[n]

    def d_map(self, n: int) -> Matrix:
        if 0 <= n < self.n_max:
            return self.d[n]
        if n == self.n_max and self.d_vanishes:
            return Matrix.zero(self.ring, 0, self.ranks[n])
        raise DegreeOutOfRange(f"d[{n}] outside 0..{self.n_max - 1}")
