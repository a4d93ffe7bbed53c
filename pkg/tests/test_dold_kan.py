"""Tests for normalized chains, the Dold–Kan decomposition and the induced duchain."""

import random
from math import comb

import pytest

from paracyclic.core.errors import NonNormalizedComponent, ShapeMismatch
from paracyclic.linalg import CoefficientRing
from paracyclic.modules import (
    DKDecomposition,
    Element,
    degenerate_basis,
    dk_basis_matrix,
    dk_coordinate_matrix,
    dk_decompose,
    dk_keys,
    dk_reconstruct,
    induced_duchain,
    normalized_rank,
)
from paracyclic.modules.dold_kan import degeneracy_word, is_normalized
from tests.conftest import build

BUILTINS = [
    "ground-ring",
    "simplex-0",
    "simplex-1",
    "simplex-2",
    "dual-numbers",
    "dual-numbers-twisted",
    "scalar-twisted-u",
]


def random_element(M, n: int, rng: random.Random) -> Element:
    return Element(n, tuple(M.ring.from_int(rng.randint(-5, 5)) for _ in range(M.rank(n))))


class TestKeys:
    def test_degree_two(self):
        assert dk_keys(2) == [(), (0,), (1,), (1, 0)]

    @pytest.mark.parametrize("n", [0, 1, 3, 4])
    def test_count(self, n: int):
        assert len(dk_keys(n)) == 2**n

    def test_keys_are_strictly_decreasing(self):
        for key in dk_keys(4):
            assert list(key) == sorted(set(key), reverse=True)


class TestNormalizedRanks:
    def test_ground_ring(self, ground):
        assert [normalized_rank(ground, n) for n in range(ground.n_max + 1)] == [1, 0, 0, 0, 0]

    def test_simplex(self, simplex1):
        assert [normalized_rank(simplex1, n) for n in range(4)] == [2, 1, 0, 0]

    @pytest.mark.parametrize("name", ["simplex-2", "dual-numbers", "dual-numbers-twisted"])
    def test_rank_identity(self, QQ, name: str):
        M = build(name, QQ, 3)
        N = [normalized_rank(M, n) for n in range(M.n_max + 1)]
        for n in range(M.n_max + 1):
            assert M.rank(n) == sum(comb(n, k) * N[n - k] for k in range(n + 1))

    def test_degenerate_complement(self, dual):
        for n in range(dual.n_max + 1):
            assert normalized_rank(dual, n) + len(degenerate_basis(dual, n)) == dual.rank(n)


class TestDecompose:
    def test_ground_ring_degree_one(self, ground, QQ):
        dec = dk_decompose(ground, 1, Element(1, (QQ.one,)))
        assert dec.components[()].is_zero
        assert dec.components[(0,)] == Element(0, (QQ.one,))
        assert list(dec.nonzero()) == [(0,)]

    def test_ordered_follows_keys(self, dual):
        x = Element.basis(dual, 2, 1)
        assert [key for key, _ in dk_decompose(dual, 2, x).ordered()] == dk_keys(2)

    @pytest.mark.parametrize("name", BUILTINS)
    @pytest.mark.parametrize("ring", ["Z", "Q", "Z/7"])
    def test_round_trip(self, name: str, ring: str):
        M = build(name, CoefficientRing.parse(ring), 4)
        rng = random.Random(11)
        for n in range(M.n_max + 1):
            for _ in range(100):
                x = random_element(M, n, rng)
                dec = dk_decompose(M, n, x)
                assert all(is_normalized(M, comp) for comp in dec.components.values())
                assert dk_reconstruct(M, n, dec) == x

    def test_rejects_wrong_degree(self, dual):
        with pytest.raises(ShapeMismatch):
            dk_decompose(dual, 2, Element.basis(dual, 1, 0))

    def test_degenerate_element_has_no_normalized_part(self, simplex1):
        y = Element.basis(simplex1, 1, 0)
        x = Element(2, degeneracy_word(simplex1, 2, (1,)).apply(y.coords))
        assert dk_decompose(simplex1, 2, x).components[()].is_zero


class TestReconstruct:
    def test_rejects_non_normalized_component(self, ground, QQ):
        dec = DKDecomposition(1, {(): Element(1, (QQ.one,))})
        with pytest.raises(NonNormalizedComponent):
            dk_reconstruct(ground, 1, dec)

    def test_rejects_bad_key(self, ground, QQ):
        dec = DKDecomposition(1, {(0, 0): Element(-1, ())})
        with pytest.raises(ShapeMismatch):
            dk_reconstruct(ground, 1, dec)

    def test_rejects_component_degree(self, ground, QQ):
        dec = DKDecomposition(1, {(0,): Element(1, (QQ.one,))})
        with pytest.raises(ShapeMismatch):
            dk_reconstruct(ground, 1, dec)

    def test_coordinate_and_basis_matrices_are_inverse(self, dual_twisted):
        for n in range(dual_twisted.n_max + 1):
            phi = dk_coordinate_matrix(dual_twisted, n)
            psi = dk_basis_matrix(dual_twisted, n)
            assert phi.shape == (dual_twisted.rank(n), dual_twisted.rank(n))
            assert (phi @ psi).is_identity()


class TestInducedDuchain:
    def test_ranks(self, simplex1, ground):
        assert induced_duchain(simplex1).ranks == (2, 1, 0, 0)
        assert induced_duchain(ground).ranks == (1, 0, 0, 0, 0)

    def test_simplicial_module_has_vanishing_d(self, simplicial1):
        V = induced_duchain(simplicial1)
        assert V.d_vanishes
        assert V.ranks == (2, 1, 0, 0)

    def test_named_after_module(self, dual):
        assert induced_duchain(dual).name == "N(dual-numbers)"
