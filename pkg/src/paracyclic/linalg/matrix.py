"""Dense exact matrices over a :class:`CoefficientRing`.

A matrix wraps a dense sympy ``DomainMatrix`` over ``ring.domain``.  Every
operation returns a new matrix with entries in canonical form, so ``==`` is
exact equality of linear maps.  Matrices act on column vectors; ``A @ B``
means "first B, then A".
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property

from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix

from paracyclic.core.errors import MalformedInput, ShapeMismatch
from paracyclic.linalg.ring import CoefficientRing, Scalar

Row = tuple[Scalar, ...]


@dataclass(frozen=True, eq=False)
class Matrix:
    ring: CoefficientRing
    rep: DomainMatrix

    def __post_init__(self) -> None:
        rep = self.rep
        if rep.domain != self.ring.domain:
            rep = rep.convert_to(self.ring.domain)
        rep = rep.to_dense()
        if self.ring.is_composite_modular:
            m = self.ring.modulus
            rep = DomainMatrix(
                [[ZZ(int(x) % m) for x in row] for row in rep.to_list()], rep.shape, ZZ
            )
        object.__setattr__(self, "rep", rep)

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def from_rows(
        cls,
        ring: CoefficientRing,
        rows: Sequence[Sequence[Scalar | int | str]],
        cols: int | None = None,
    ) -> Matrix:
        """Build from nested rows; ints and rational strings are converted."""
        if cols is None:
            if not rows:
                raise ShapeMismatch("column count is required for a matrix with no rows")
            cols = len(rows[0])
        if any(len(row) != cols for row in rows):
            raise ShapeMismatch(f"entries do not form a {len(rows)}x{cols} matrix")
        data = [[ring.to_domain(_convert(ring, x)) for x in row] for row in rows]
        return cls(ring, DomainMatrix(data, (len(data), cols), ring.domain))

    @classmethod
    def zero(cls, ring: CoefficientRing, rows: int, cols: int) -> Matrix:
        if rows < 0 or cols < 0:
            raise ShapeMismatch(f"negative shape {rows}x{cols}")
        return cls(ring, DomainMatrix.zeros((rows, cols), ring.domain))

    @classmethod
    def identity(cls, ring: CoefficientRing, n: int) -> Matrix:
        return cls(ring, DomainMatrix.eye(n, ring.domain))

    @classmethod
    def diagonal(cls, ring: CoefficientRing, values: Sequence[Scalar]) -> Matrix:
        n = len(values)
        diag = [ring.to_domain(ring.normalize(v)) for v in values]
        return cls(ring, DomainMatrix.diag(diag, ring.domain, (n, n)))

    @classmethod
    def from_columns(
        cls, ring: CoefficientRing, columns: Sequence[Sequence[Scalar]], rows: int
    ) -> Matrix:
        return cls.from_rows(ring, [[c[i] for c in columns] for i in range(rows)], len(columns))

    # ------------------------------------------------------------------
    # Access
    # ------------------------------------------------------------------

    @property
    def rows(self) -> int:
        return self.rep.shape[0]

    @property
    def cols(self) -> int:
        return self.rep.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rep.shape

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @cached_property
    def entries(self) -> tuple[Row, ...]:
        if not self.cols:
            return ((),) * self.rows
        conv = self.ring.from_domain
        return tuple(tuple(conv(x) for x in row) for row in self.rep.to_list())

    def __getitem__(self, key: tuple[int, int]) -> Scalar:
        i, j = key
        return self.entries[i][j]

    def column(self, j: int) -> tuple[Scalar, ...]:
        return tuple(row[j] for row in self.entries)

    def columns(self) -> list[tuple[Scalar, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def select_columns(self, indices: Iterable[int]) -> Matrix:
        return Matrix(self.ring, self.rep.extract(list(range(self.rows)), list(indices)))

    def select_rows(self, indices: Iterable[int]) -> Matrix:
        return Matrix(self.ring, self.rep.extract(list(indices), list(range(self.cols))))

    def is_zero(self) -> bool:
        return bool(self.rep.is_zero_matrix)

    def is_identity(self) -> bool:
        return self.is_square and self == Matrix.identity(self.ring, self.rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.shape == other.shape
            and self.rep.to_list() == other.rep.to_list()
        )

    def __hash__(self) -> int:
        return hash((self.ring, self.shape, self.entries))

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def _same_ring(self, other: Matrix) -> None:
        if self.ring != other.ring:
            raise ShapeMismatch(f"ring mismatch: {self.ring} vs {other.ring}")

    def __matmul__(self, other: Matrix) -> Matrix:
        self._same_ring(other)
        if self.cols != other.rows:
            raise ShapeMismatch(f"cannot multiply {self.shape} by {other.shape}")
        return Matrix(self.ring, self.rep.matmul(other.rep))

    def _check_same_shape(self, other: Matrix) -> None:
        self._same_ring(other)
        if self.shape != other.shape:
            raise ShapeMismatch(f"cannot add {self.shape} and {other.shape}")

    def __add__(self, other: Matrix) -> Matrix:
        self._check_same_shape(other)
        return Matrix(self.ring, self.rep.add(other.rep))

    def __sub__(self, other: Matrix) -> Matrix:
        self._check_same_shape(other)
        return Matrix(self.ring, self.rep.sub(other.rep))

    def __neg__(self) -> Matrix:
        return Matrix(self.ring, self.rep.neg())

    def scale(self, factor: Scalar) -> Matrix:
        ring = self.ring
        return Matrix(ring, self.rep.scalarmul(ring.to_domain(ring.normalize(factor))))

    def power(self, exponent: int) -> Matrix:
        if not self.is_square:
            raise ShapeMismatch(f"power of non-square {self.shape} matrix")
        if exponent < 0:
            raise ValueError("negative powers need linalg.invert")
        if self.ring.is_composite_modular:
            result = Matrix.identity(self.ring, self.rows)
            for _ in range(exponent):
                result = result @ self
            return result
        return Matrix(self.ring, self.rep.pow(exponent))

    def transpose(self) -> Matrix:
        return Matrix(self.ring, self.rep.transpose())

    def apply(self, vector: Sequence[Scalar]) -> tuple[Scalar, ...]:
        if len(vector) != self.cols:
            raise ShapeMismatch(f"vector of length {len(vector)} for {self.shape} matrix")
        return (self @ Matrix.from_rows(self.ring, [[v] for v in vector], 1)).column(0)

    def over(self, ring: CoefficientRing) -> Matrix:
        """Change of rings through the rational value of each entry."""
        if ring == self.ring:
            return self
        src = self.ring
        out = []
        for row in self.entries:
            new_row = []
            for x in row:
                q = src.to_rational(x)
                new_row.append(ring.from_rational(int(q.numerator), int(q.denominator)))
            out.append(new_row)
        return Matrix.from_rows(ring, out, self.cols)

    # ------------------------------------------------------------------
    # Blocks
    # ------------------------------------------------------------------

    @staticmethod
    def hstack(ring: CoefficientRing, rows: int, blocks: Sequence[Matrix]) -> Matrix:
        if any(b.rows != rows for b in blocks):
            raise ShapeMismatch("hstack blocks must share the row count")
        if not blocks:
            return Matrix.zero(ring, rows, 0)
        first, *rest = (b.rep for b in blocks)
        return Matrix(ring, first.hstack(*rest))

    @staticmethod
    def vstack(ring: CoefficientRing, cols: int, blocks: Sequence[Matrix]) -> Matrix:
        if any(b.cols != cols for b in blocks):
            raise ShapeMismatch("vstack blocks must share the column count")
        if not blocks:
            return Matrix.zero(ring, 0, cols)
        first, *rest = (b.rep for b in blocks)
        return Matrix(ring, first.vstack(*rest))

    @staticmethod
    def block_diagonal(ring: CoefficientRing, blocks: Sequence[Matrix]) -> Matrix:
        cols = sum(b.cols for b in blocks)
        band = []
        c0 = 0
        for b in blocks:
            left = Matrix.zero(ring, b.rows, c0)
            right = Matrix.zero(ring, b.rows, cols - c0 - b.cols)
            band.append(Matrix.hstack(ring, b.rows, [left, b, right]))
            c0 += b.cols
        return Matrix.vstack(ring, cols, band)

    # ------------------------------------------------------------------
    # Serialization
    # ------------------------------------------------------------------

    def to_strings(self) -> list[list[str]]:
        fmt = self.ring.format
        return [[fmt(x) for x in row] for row in self.entries]

    def __str__(self) -> str:
        if not self.rows:
            return f"[] ({self.rows}x{self.cols})"
        return "\n".join("[" + " ".join(row) + "]" for row in self.to_strings())

    def __repr__(self) -> str:
        return f"Matrix({self.ring}, {self.rows}x{self.cols}, {self.to_strings()})"


def _convert(ring: CoefficientRing, value: Scalar | int | str) -> Scalar:
    if isinstance(value, str):
        return ring.parse_scalar(value)
    if isinstance(value, bool):
        raise MalformedInput(f"boolean is not a ring element: {value!r}")
    if isinstance(value, int):
        return ring.from_int(value)
    return ring.normalize(value)


def vector(ring: CoefficientRing, values: Sequence[Scalar | int | str]) -> tuple[Scalar, ...]:
    return tuple(_convert(ring, v) for v in values)
