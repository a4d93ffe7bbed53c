"""Tests for coefficient rings, exact matrices, elimination and Smith normal form."""

import pytest

from paracyclic.core.errors import (
    CompositeModulus,
    MalformedInput,
    NotInvertible,
    ShapeMismatch,
    UnsupportedRing,
)
from paracyclic.linalg import (
    CoefficientRing,
    Matrix,
    determinant,
    invert,
    is_invertible,
    kernel,
    left_inverse,
    rank,
    smith_normal_form,
)


# ---------------------------------------------------------------------------
# Rings
# ---------------------------------------------------------------------------


class TestCoefficientRing:
    @pytest.mark.parametrize(
        "spec, expected", [("Z", "Z"), ("q", "Q"), ("Z/7", "Z/7"), ("ZZ", "Z")]
    )
    def test_parse(self, spec: str, expected: str):
        assert str(CoefficientRing.parse(spec)) == expected

    @pytest.mark.parametrize("spec", ["Z/x", ""])
    def test_parse_rejects(self, spec: str):
        with pytest.raises(MalformedInput):
            CoefficientRing.parse(spec)

    @pytest.mark.parametrize("spec", ["R", "Z/1", "Z/0"])
    def test_parse_unsupported(self, spec: str):
        with pytest.raises(UnsupportedRing):
            CoefficientRing.parse(spec)

    def test_sympy_domains(self, ZZ, QQ):
        assert ZZ.domain.is_ZZ and QQ.domain.is_QQ
        assert CoefficientRing.modular(7).domain.is_FiniteField
        assert CoefficientRing.modular(6).domain.is_ZZ

    def test_field_detection(self):
        assert CoefficientRing.parse("Q").is_field
        assert CoefficientRing.parse("Z/7").is_field
        assert not CoefficientRing.parse("Z").is_field
        assert CoefficientRing.parse("Z/6").is_composite_modular

    def test_rational_scalars(self, QQ):
        assert QQ.format(QQ.parse_scalar("-2/4")) == "-1/2"
        assert QQ.format(QQ.parse_scalar(3)) == "3"

    def test_integer_rejects_fraction(self, ZZ):
        with pytest.raises(MalformedInput):
            ZZ.parse_scalar("1/2")

    def test_modular_fraction(self):
        ring = CoefficientRing.modular(7)
        assert ring.parse_scalar("1/2") == 4
        with pytest.raises(MalformedInput):
            CoefficientRing.modular(6).parse_scalar("1/3")

    def test_units(self, ZZ, QQ):
        assert ZZ.is_unit(-1) and not ZZ.is_unit(2)
        assert QQ.is_unit(QQ.from_int(2))
        assert CoefficientRing.modular(6).is_unit(5)


# ---------------------------------------------------------------------------
# Matrices
# ---------------------------------------------------------------------------


class TestMatrix:
    def test_product_composes_right_to_left(self, ZZ):
        a = Matrix.from_rows(ZZ, [[1, 1]])
        b = Matrix.from_rows(ZZ, [[1], [2]])
        assert (a @ b) == Matrix.from_rows(ZZ, [[3]])
        assert (b @ a).shape == (2, 2)

    def test_shape_mismatch(self, ZZ):
        a = Matrix.identity(ZZ, 2)
        with pytest.raises(ShapeMismatch):
            a @ Matrix.identity(ZZ, 3)
        with pytest.raises(ShapeMismatch):
            a + Matrix.zero(ZZ, 2, 3)

    def test_ragged_rows(self, ZZ):
        with pytest.raises(ShapeMismatch):
            Matrix.from_rows(ZZ, [[1, 2], [3]])

    def test_modular_entries_are_canonical(self):
        ring = CoefficientRing.modular(5)
        m = Matrix.from_rows(ring, [[7, -1]])
        assert m.entries == ((2, 4),)

    def test_power_and_identity(self, ZZ):
        swap = Matrix.from_rows(ZZ, [[0, 1], [1, 0]])
        assert swap.power(2).is_identity()
        assert swap.power(0).is_identity()
        assert not swap.is_identity()

    def test_transpose_and_blocks(self, ZZ):
        m = Matrix.from_rows(ZZ, [[1, 2, 3]])
        assert m.transpose().shape == (3, 1)
        block = Matrix.block_diagonal(ZZ, [m, Matrix.identity(ZZ, 1)])
        assert block.shape == (2, 4)
        assert block[1, 3] == 1 and block[1, 0] == 0

    def test_change_of_rings(self, ZZ, QQ):
        m = Matrix.from_rows(ZZ, [[3, -1]])
        assert m.over(CoefficientRing.modular(2)).entries == ((1, 1),)
        assert m.over(QQ).to_strings() == [["3", "-1"]]

    def test_zero_rows_needs_columns(self, ZZ):
        with pytest.raises(ShapeMismatch):
            Matrix.from_rows(ZZ, [])
        assert Matrix.from_rows(ZZ, [], 2).shape == (0, 2)


# ---------------------------------------------------------------------------
# Elimination
# ---------------------------------------------------------------------------


class TestElimination:
    def test_kernel_of_row(self, QQ):
        m = Matrix.from_rows(QQ, [[1, 1]])
        basis = kernel(m)
        assert len(basis) == 1
        assert m.apply(basis[0]) == (QQ.zero,)

    def test_kernel_of_zero(self, QQ):
        assert len(kernel(Matrix.zero(QQ, 2, 2))) == 2

    def test_kernel_of_injective_integer_map(self, ZZ):
        assert kernel(Matrix.from_rows(ZZ, [[2]])) == []

    def test_rank(self, QQ, ZZ):
        assert rank(Matrix.from_rows(QQ, [[1, 2], [2, 4]])) == 1
        assert rank(Matrix.from_rows(ZZ, [[2, 0], [0, 3]])) == 2
        assert rank(Matrix.zero(QQ, 0, 3)) == 0

    def test_rank_over_composite_modulus(self):
        ring = CoefficientRing.modular(6)
        with pytest.raises(CompositeModulus):
            rank(Matrix.identity(ring, 2))

    def test_determinant(self, ZZ):
        assert determinant(Matrix.from_rows(ZZ, [[2, 1], [1, 1]])) == 1
        assert determinant(Matrix.from_rows(ZZ, [[0, 1], [1, 0]])) == -1

    def test_invert_identity(self, ZZ):
        assert invert(Matrix.identity(ZZ, 3)).is_identity()

    def test_invert_over_rationals(self, QQ):
        assert invert(Matrix.from_rows(QQ, [[2]])) == Matrix.from_rows(QQ, [["1/2"]])

    def test_invert_over_integers_fails(self, ZZ):
        with pytest.raises(NotInvertible) as info:
            invert(Matrix.from_rows(ZZ, [[2]]))
        assert info.value.determinant == 2

    def test_invert_over_composite_modulus(self):
        ring = CoefficientRing.modular(6)
        m = Matrix.from_rows(ring, [[5]])
        assert invert(m) == m
        assert not is_invertible(Matrix.from_rows(ring, [[2]]))

    def test_integer_inverse_is_exact(self, ZZ):
        m = Matrix.from_rows(ZZ, [[2, 1], [1, 1]])
        assert (m @ invert(m)).is_identity()

    def test_left_inverse_of_summand(self, ZZ):
        basis = Matrix.from_rows(ZZ, [[1, 0], [1, 1], [0, 0]])
        assert (left_inverse(basis) @ basis).is_identity()

    def test_left_inverse_needs_summand(self, ZZ):
        with pytest.raises(NotInvertible):
            left_inverse(Matrix.from_rows(ZZ, [[2], [0]]))

    def test_left_inverse_over_field(self, QQ):
        basis = Matrix.from_rows(QQ, [[2, 0], [1, 3], [0, 0]])
        assert (left_inverse(basis) @ basis).is_identity()
        with pytest.raises(NotInvertible) as info:
            left_inverse(Matrix.from_rows(QQ, [[1, 2], [2, 4]]))
        assert info.value.rank == 1

    def test_integer_kernel_is_a_lattice_basis(self, ZZ):
        assert kernel(Matrix.from_rows(ZZ, [[2, 4]])) in ([(-2, 1)], [(2, -1)])

    def test_kernel_over_prime_field(self):
        ring = CoefficientRing.modular(7)
        m = Matrix.from_rows(ring, [[1, 3, 2], [2, 6, 4]])
        assert m.rep.domain == ring.domain
        basis = kernel(m)
        assert len(basis) == 2 and rank(m) == 1
        assert all(m.apply(v) == (0, 0) for v in basis)

    def test_determinant_over_composite_modulus(self):
        ring = CoefficientRing.modular(6)
        assert determinant(Matrix.from_rows(ring, [[5, 1], [1, 5]])) == 0
        assert determinant(Matrix.from_rows(ring, [[5, 0], [0, 5]])) == 1


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------


class TestSmithNormalForm:
    @pytest.mark.parametrize(
        "rows, diagonal",
        [
            ([[2, 0], [0, 3]], (1, 6)),
            ([[1, 0], [0, 1]], (1, 1)),
            ([[0]], (0,)),
            ([[2, 4], [6, 8]], (2, 4)),
        ],
    )
    def test_diagonal(self, ZZ, rows, diagonal):
        assert smith_normal_form(Matrix.from_rows(ZZ, rows)).diagonal == diagonal

    def test_transforms(self, ZZ):
        a = Matrix.from_rows(ZZ, [[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
        form, left, right = smith_normal_form(a)
        assert left @ a @ right == form
        assert determinant(left) in (1, -1)
        assert determinant(right) in (1, -1)

    def test_torsion(self, ZZ):
        snf = smith_normal_form(Matrix.from_rows(ZZ, [[2, 0], [0, 3]]))
        assert snf.torsion == (6,)
        assert snf.rank == 2

    def test_rectangular_and_empty(self, ZZ):
        a = Matrix.from_rows(ZZ, [[0, 2, 4], [0, 0, 0]])
        form, left, right = smith_normal_form(a)
        assert left @ a @ right == form
        assert smith_normal_form(a).diagonal == (2, 0)
        assert smith_normal_form(Matrix.zero(ZZ, 0, 3)).right.is_identity()

    def test_needs_integers(self, QQ):
        with pytest.raises(UnsupportedRing):
            smith_normal_form(Matrix.identity(QQ, 2))
