"""Tests for morphisms of the periodic index category, words and factorization."""

import random

import pytest

from paracyclic.core.errors import DegreeMismatch, IndexOutOfRange, InvalidMorphism
from paracyclic.index import (
    GeneratorKind,
    IndexMorphism,
    MorphismClass,
    classify,
    compose,
    enumerate_delta,
    expand_shifts,
    factorize,
    generator,
    involution,
    random_composable,
    random_morphism,
)
from paracyclic.index.words import GeneratorWord, Token

FACE, DEGEN, SHIFT, SHIFT_INV = (
    GeneratorKind.FACE,
    GeneratorKind.DEGENERACY,
    GeneratorKind.SHIFT,
    GeneratorKind.SHIFT_INVERSE,
)


class TestGenerators:
    def test_face(self):
        assert generator(FACE, 1, 0) == IndexMorphism.of(0, 1, [1])
        assert generator(FACE, 2, 1).values == (0, 2)

    def test_degeneracy(self):
        assert generator(DEGEN, 0, 0) == IndexMorphism.of(1, 0, [0, 0])

    def test_extra_degeneracy_wraps(self):
        assert generator(DEGEN, 1, 2).values == (0, 1, 2)

    def test_shift(self):
        assert generator(SHIFT, 1).values == (1, 2)
        assert generator(SHIFT_INV, 1).values == (-1, 0)

    @pytest.mark.parametrize("kind, n, i", [(FACE, 0, 0), (FACE, 2, 3), (DEGEN, 1, 3)])
    def test_out_of_range(self, kind, n, i):
        with pytest.raises(IndexOutOfRange):
            generator(kind, n, i)

    def test_string_kind(self):
        assert generator("t", 0).values == (1,)


class TestMorphism:
    def test_rejects_non_monotone(self):
        with pytest.raises(InvalidMorphism):
            IndexMorphism.of(1, 1, [1, 0])

    def test_rejects_more_than_one_period(self):
        with pytest.raises(InvalidMorphism):
            IndexMorphism.of(1, 0, [0, 2])

    def test_rejects_wrong_length(self):
        with pytest.raises(InvalidMorphism):
            IndexMorphism.of(1, 1, [0])

    def test_periodic_extension(self):
        tau = generator(SHIFT, 1)
        assert [tau(j) for j in range(-2, 3)] == [-1, 0, 1, 2, 3]


class TestCompose:
    def test_cosimplicial_identity(self):
        lhs = compose(generator(FACE, 2, 0), generator(FACE, 1, 0))
        rhs = compose(generator(FACE, 2, 1), generator(FACE, 1, 0))
        assert lhs.values == (2,)
        assert lhs == rhs

    def test_degeneracy_after_face(self):
        assert compose(generator(DEGEN, 1, 0), generator(FACE, 2, 0)).is_identity

    def test_shift_inverse(self):
        assert compose(generator(SHIFT_INV, 0), generator(SHIFT, 0)).is_identity

    def test_mismatch(self):
        with pytest.raises(DegreeMismatch):
            compose(generator(FACE, 1, 0), generator(FACE, 1, 0))

    def test_associative_on_samples(self):
        rng = random.Random(7)
        for _ in range(100):
            g, f = random_composable(rng)
            h = random_morphism(rng)
            while h.m != g.n:
                h = random_morphism(rng)
            assert compose(h, compose(g, f)) == compose(compose(h, g), f)


class TestClassify:
    def test_delta(self):
        assert classify(generator(FACE, 1, 0)) is MorphismClass.DELTA

    def test_lambda_plus(self):
        assert classify(generator(SHIFT, 1)) is MorphismClass.LAMBDA_PLUS

    def test_lambda_infinity(self):
        assert classify(generator(SHIFT_INV, 0)) is MorphismClass.LAMBDA_INFINITY


class TestFactorize:
    def test_identity_is_empty_word(self):
        word = factorize(IndexMorphism.identity(2))
        assert len(word) == 0
        assert word.evaluate().is_identity

    def test_single_degeneracy(self):
        word = factorize(IndexMorphism.of(1, 0, [0, 0]))
        assert word.tokens == (Token(DEGEN, 0, 0),)

    def test_shift_expands_to_degeneracy_and_face(self):
        tau = generator(SHIFT, 1)
        word = factorize(tau)
        assert word.tokens == (Token(SHIFT, 1),)
        expanded = expand_shifts(word)
        assert expanded.tokens == (Token(DEGEN, 1, 2), Token(FACE, 2, 0))
        assert expanded.evaluate() == tau

    def test_round_trip_on_samples(self):
        rng = random.Random(0)
        for _ in range(200):
            f = random_morphism(rng)
            assert factorize(f).evaluate() == f
            assert expand_shifts(factorize(f)).evaluate() == f

    def test_word_degree_check(self):
        with pytest.raises(DegreeMismatch):
            GeneratorWord((Token(FACE, 1, 0),), 2)


class TestInvolution:
    def test_face_to_extra_degeneracy(self):
        assert involution(generator(FACE, 1, 0)) == generator(DEGEN, 0, 1)

    def test_extra_degeneracy_to_face(self):
        assert involution(generator(DEGEN, 0, 1)) == generator(FACE, 1, 0)

    def test_shift_fixed(self):
        assert involution(generator(SHIFT, 1)) == generator(SHIFT, 1)

    def test_reverses_composition(self):
        rng = random.Random(5)
        for _ in range(1000):
            g, f = random_composable(rng)
            assert involution(compose(g, f)) == compose(involution(f), involution(g))

    def test_is_an_involution(self):
        rng = random.Random(6)
        for _ in range(1000):
            g, f = random_composable(rng)
            for h in (f, g, compose(g, f)):
                assert involution(involution(h)) == h

    @pytest.mark.parametrize("n", range(7))
    def test_generators(self, n: int):
        expected = {generator(SHIFT, n): generator(SHIFT, n)}
        expected[generator(SHIFT_INV, n)] = generator(SHIFT_INV, n)
        for i in range(n + 2):
            expected[generator(DEGEN, n, i)] = generator(FACE, n + 1, n + 1 - i)
        if n >= 1:
            for i in range(n + 1):
                expected[generator(FACE, n, i)] = generator(DEGEN, n - 1, n - i)
        for g, dual in expected.items():
            assert involution(g) == dual
            assert (dual.m, dual.n) == (g.n, g.m)
            assert involution(dual) == g


class TestEnumerateDelta:
    def test_one_to_one(self):
        values = [f.values for f in enumerate_delta(1, 1)]
        assert values == [(0, 0), (0, 1), (1, 1)]

    @pytest.mark.parametrize("n", [0, 1, 4])
    def test_points(self, n: int):
        assert len(enumerate_delta(0, n)) == n + 1

    @pytest.mark.parametrize("m", [0, 2, 5])
    def test_to_point(self, m: int):
        assert len(enumerate_delta(m, 0)) == 1
