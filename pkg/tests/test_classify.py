"""Tests for the duplicial / paracyclic / cyclic classification."""

import pytest

from paracyclic.core.errors import MissingExtraDegeneracy
from paracyclic.linalg import CoefficientRing
from paracyclic.modules import ModuleKind, classify_module
from tests.conftest import build


class TestClassify:
    def test_ground_ring_is_cyclic(self, ground):
        result = classify_module(ground)
        assert result.kind is ModuleKind.CYCLIC
        assert result.is_cyclic and result.is_paracyclic
        assert result.witness(0).pi_N_identity is True

    def test_promoted_simplex_is_cyclic(self, simplex1):
        result = classify_module(simplex1)
        assert result.is_cyclic
        for n in range(simplex1.n_max):
            assert result.witness(n).pi_N_identity is True

    def test_twisted_dual_numbers_are_paracyclic(self, dual_twisted):
        result = classify_module(dual_twisted)
        assert result.kind is ModuleKind.PARACYCLIC
        assert result.witness(1).T_identity is False

    def test_twisted_circle_over_rationals(self, twisted2):
        result = classify_module(twisted2)
        assert result.kind is ModuleKind.PARACYCLIC
        for n in range(twisted2.n_max):
            witness = result.witness(n)
            assert witness.t_invertible is True
            assert witness.kappa_N_invertible is True
            assert witness.pi_N_invertible is True

    def test_twisted_circle_over_integers(self, ZZ):
        result = classify_module(build("scalar-twisted-u", ZZ, 3, "2"))
        assert result.kind is ModuleKind.DUPLICIAL
        assert result.witness(0).t_invertible is False
        assert result.witness(0).pi_N_invertible is False

    def test_twist_by_unit_over_integers(self, ZZ):
        result = classify_module(build("scalar-twisted-u", ZZ, 3, "-1"))
        assert result.kind is ModuleKind.PARACYCLIC

    def test_non_paracyclic_reconstruction(self, non_paracyclic):
        result = classify_module(non_paracyclic)
        assert result.kind is ModuleKind.DUPLICIAL
        assert result.witness(0).t_invertible is False
        assert result.witness(0).kappa_N_invertible is False
        assert result.witness(1).t_invertible is None

    def test_witnesses_cover_every_degree(self, dual):
        result = classify_module(dual)
        assert [w.degree for w in result.witnesses] == list(range(dual.n_max + 1))
        assert result.witness(dual.n_max).kappa_N_invertible is None

    def test_composite_modulus_leaves_normalized_data_undecided(self):
        result = classify_module(build("ground-ring", CoefficientRing.parse("Z/6"), 2))
        assert result.kind is ModuleKind.CYCLIC
        assert result.witness(0).kappa_N_invertible is None

    def test_simplicial_only_is_rejected(self, simplicial1):
        with pytest.raises(MissingExtraDegeneracy):
            classify_module(simplicial1)
