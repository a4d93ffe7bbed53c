"""Tests for chain homology, the full/normalized comparison and the mixed complexes."""

import pytest

from paracyclic.constructions import dual_numbers, duchain_to_duplicial, ground_algebra
from paracyclic.core.errors import (
    CompositeModulus,
    DegreeOutOfRange,
    MissingExtraDegeneracy,
    NotAComplex,
)
from paracyclic.homology import (
    ChainComplex,
    Flavor,
    HomologyGroup,
    chain_homology,
    hochschild_homology,
    homology_group,
    mixed_complex_homology,
    module_complex,
    normalized_vs_full_homology,
)
from paracyclic.linalg import CoefficientRing, Matrix
from paracyclic.modules import DuchainComplex
from tests.conftest import build


def free_ranks(groups) -> list[int]:
    return [g.free_rank for g in groups]


class TestChainHomology:
    def test_torsion_from_smith_form(self, ZZ):
        C = ChainComplex(ZZ, {0: 1, 1: 1}, {1: Matrix.from_rows(ZZ, [[2]])}, complete=True)
        assert C.homologies() == [HomologyGroup(0, 0, (2,)), HomologyGroup(1, 0)]

    def test_same_complex_over_rationals(self, QQ):
        C = ChainComplex(QQ, {0: 1, 1: 1}, {1: Matrix.from_rows(QQ, [[2]])}, complete=True)
        assert all(g.is_zero for g in C.homologies())

    def test_not_a_complex(self, QQ):
        one = Matrix.from_rows(QQ, [[1]])
        with pytest.raises(NotAComplex):
            homology_group(QQ, 0, 1, one, one)

    def test_shape_mismatch_is_not_a_complex(self, QQ):
        with pytest.raises(NotAComplex):
            ChainComplex(QQ, {0: 1, 1: 2}, {1: Matrix.identity(QQ, 1)})

    def test_top_degree_is_truncation(self, simplex1):
        C = module_complex(simplex1)
        assert list(C.homology_degrees()) == [0, 1, 2]
        with pytest.raises(DegreeOutOfRange):
            chain_homology(C, simplex1.n_max)

    def test_format(self, ZZ, QQ):
        assert HomologyGroup(0, 0).format(ZZ) == "0"
        assert HomologyGroup(0, 1).format(QQ) == "Q"
        assert HomologyGroup(1, 2, (2,)).format(ZZ) == "Z^2 ⊕ Z/2"

    def test_composite_modulus(self):
        M = build("ground-ring", CoefficientRing.parse("Z/6"), 2)
        with pytest.raises(CompositeModulus):
            module_complex(M).homologies()


class TestModuleHomology:
    def test_simplex_is_contractible(self, ZZ):
        groups = module_complex(build("simplex-1", ZZ, 3)).homologies()
        assert groups == [HomologyGroup(0, 1), HomologyGroup(1, 0), HomologyGroup(2, 0)]

    def test_reconstruction_keeps_homology(self, ZZ):
        V = DuchainComplex.from_maps(ZZ, [1, 1, 0, 0], name="V")
        groups = module_complex(duchain_to_duplicial(V)).homologies()
        assert free_ranks(groups) == [1, 1, 0]
        assert all(not g.torsion for g in groups)

    def test_normalized_carrier(self, simplex1):
        C = module_complex(simplex1, "normalized")
        assert [C.rank(n) for n in range(4)] == [2, 1, 0, 0]
        assert free_ranks(C.homologies()) == [1, 0, 0]

    @pytest.mark.parametrize(
        "name", ["ground-ring", "simplex-2", "dual-numbers", "dual-numbers-twisted"]
    )
    @pytest.mark.parametrize("ring", ["Q", "Z"])
    def test_full_and_normalized_agree(self, name: str, ring: str):
        comparison = normalized_vs_full_homology(build(name, CoefficientRing.parse(ring), 3))
        assert comparison.agrees
        assert comparison.homotopy_holds
        assert comparison.mismatches() == []
        assert comparison.euler_full == comparison.euler_normalized


class TestHochschild:
    def test_ground_ring(self, QQ):
        assert free_ranks(hochschild_homology(ground_algebra(QQ), 2)) == [1, 0, 0]

    def test_dual_numbers(self, QQ):
        assert free_ranks(hochschild_homology(dual_numbers(QQ), 1)) == [2, 1]

    def test_negative_degree(self, QQ):
        with pytest.raises(DegreeOutOfRange):
            hochschild_homology(ground_algebra(QQ), -1)


class TestMixedComplexes:
    def test_bB_window(self, QQ):
        result = mixed_complex_homology(build("ground-ring", QQ, 6), "bB", weight=2)
        assert result.flavor is Flavor.BB
        assert result.window == (-4, 1)
        assert [g.degree for g in result.groups] == [1, 0, -1, -2, -3, -4]
        assert free_ranks(result.groups) == [0, 1, 0, 1, 0, 1]

    def test_dD_window(self, QQ):
        result = mixed_complex_homology(build("ground-ring", QQ, 4), Flavor.DD, weight=1)
        assert result.window == (0, 3)
        assert [g.degree for g in result.groups] == [3, 2, 1, 0]
        assert free_ranks(result.groups) == [0, 1, 0, 1]

    def test_carrier_is_recorded(self, ground):
        assert mixed_complex_homology(ground, carrier="full").carrier == "full"

    def test_negative_weight(self, ground):
        with pytest.raises(DegreeOutOfRange):
            mixed_complex_homology(ground, weight=-1)

    def test_unknown_flavor(self, ground):
        with pytest.raises(ValueError):
            mixed_complex_homology(ground, "xY")

    def test_simplicial_module(self, simplicial1):
        with pytest.raises(MissingExtraDegeneracy):
            mixed_complex_homology(simplicial1)
