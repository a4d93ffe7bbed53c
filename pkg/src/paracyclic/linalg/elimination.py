"""Exact rank, kernel, inverse and left inverse over every supported ring.

Fields (Q, Z/p) go through sympy's ``rref``/``nullspace``/``inv``; the
integers through the Smith normal form; composite Z/m supports only
determinants and inverses (through the integer adjugate).
"""

from __future__ import annotations

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from paracyclic.core.errors import CompositeModulus, NotInvertible, ShapeMismatch
from paracyclic.linalg.matrix import Matrix
from paracyclic.linalg.ring import CoefficientRing, Scalar
from paracyclic.linalg.smith import smith_normal_form


def _over_field(matrix: Matrix) -> DomainMatrix:
    if matrix.ring.is_integers:
        return matrix.rep.convert_to(QQ)
    return matrix.rep


def _field_left_inverse(basis: Matrix) -> Matrix:
    ring = basis.ring
    n, k = basis.shape
    if n == 0 or k == 0:
        if k:
            raise NotInvertible(f"0x{k} matrix has no left inverse over {ring}", rank=0)
        return Matrix.zero(ring, 0, n)
    aug = basis.rep.hstack(DomainMatrix.eye(n, ring.domain).to_dense())
    reduced, pivots = aug.rref()
    leading = [p for p in pivots if p < k]
    if leading != list(range(k)):
        raise NotInvertible(f"{n}x{k} matrix has no left inverse over {ring}", rank=len(leading))
    return Matrix(ring, reduced.extract(list(range(k)), list(range(k, k + n))))


def _check_field_or_integers(matrix: Matrix, operation: str) -> None:
    ring = matrix.ring
    if ring.is_composite_modular:
        raise CompositeModulus(ring.modulus, operation)


# ---------------------------------------------------------------------------
# Public API
# ---------------------------------------------------------------------------


def rank(matrix: Matrix) -> int:
    _check_field_or_integers(matrix, "rank")
    if matrix.rows == 0 or matrix.cols == 0:
        return 0
    return len(_over_field(matrix).rref()[1])


def kernel_matrix(matrix: Matrix) -> Matrix:
    """Matrix whose columns form a basis of the kernel (a lattice basis over Z)."""
    _check_field_or_integers(matrix, "kernel")
    ring = matrix.ring
    if matrix.rows == 0:
        return Matrix.identity(ring, matrix.cols)
    if matrix.cols == 0:
        return Matrix.zero(ring, 0, 0)
    if ring.is_integers:
        snf = smith_normal_form(matrix)
        return snf.right.select_columns(range(snf.rank, matrix.cols))
    # rows of the nullspace: 1 at a free column, minus the reduced row at the pivots
    reduced, pivots = matrix.rep.rref()
    return Matrix(ring, reduced.nullspace_from_rref(pivots).transpose())


def kernel(matrix: Matrix) -> list[tuple[Scalar, ...]]:
    return kernel_matrix(matrix).columns()


def determinant(matrix: Matrix) -> Scalar:
    if not matrix.is_square:
        raise ShapeMismatch(f"determinant of non-square {matrix.shape} matrix")
    ring = matrix.ring
    if matrix.rows == 0:
        return ring.one
    # composite Z/m is stored as its integer lift
    return ring.normalize(ring.from_domain(matrix.rep.det()))


def is_invertible(matrix: Matrix) -> bool:
    return matrix.is_square and matrix.ring.is_unit(determinant(matrix))


def invert(matrix: Matrix) -> Matrix:
    """Two-sided inverse; raises NotInvertible with the determinant as witness."""
    if not matrix.is_square:
        raise ShapeMismatch(f"cannot invert non-square {matrix.shape} matrix")
    ring = matrix.ring
    det = determinant(matrix)
    if not ring.is_unit(det):
        raise NotInvertible(
            f"determinant {ring.format(det)} is not a unit in {ring}", determinant=det
        )
    if matrix.rows == 0:
        return matrix
    if ring.is_field:
        return Matrix(ring, matrix.rep.inv())
    rationals = CoefficientRing.rationals()
    rational_inverse = Matrix(rationals, matrix.rep.convert_to(QQ).inv())
    if ring.is_integers:
        return rational_inverse.over(ring)
    # Z/m: adjugate of the integer lift, scaled by det^{-1}
    adjugate = rational_inverse.scale(QQ(int(matrix.rep.det())))
    return adjugate.over(ring).scale(ring.inverse(det))


def left_inverse(basis: Matrix) -> Matrix:
    """L with ``L @ basis == I`` for a basis of a direct summand.

    Over Z this exists exactly when the Smith form of *basis* is ``[I; 0]``.
    """
    ring = basis.ring
    n, k = basis.shape
    if ring.is_composite_modular:
        raise CompositeModulus(ring.modulus, "left inverse")
    if ring.is_field:
        return _field_left_inverse(basis)
    snf = smith_normal_form(basis)
    if snf.diagonal != (1,) * k:
        raise NotInvertible(f"columns do not span a direct summand of Z^{n}", rank=snf.rank)
    return snf.right @ snf.left.select_rows(range(k))
