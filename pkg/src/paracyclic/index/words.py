"""Generator words, canonical factorization and the duality involution."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from paracyclic.core.errors import DegreeMismatch
from paracyclic.index.morphism import (
    GeneratorKind,
    IndexMorphism,
    compose,
    generator,
)


@dataclass(frozen=True)
class Token:
    kind: GeneratorKind
    n: int
    i: int = 0

    @property
    def morphism(self) -> IndexMorphism:
        return generator(self.kind, self.n, self.i)

    @property
    def domain(self) -> int:
        if self.kind is GeneratorKind.FACE:
            return self.n - 1
        if self.kind is GeneratorKind.DEGENERACY:
            return self.n + 1
        return self.n

    @property
    def codomain(self) -> int:
        return self.n

    def __str__(self) -> str:
        symbol = {
            GeneratorKind.FACE: "ε",
            GeneratorKind.DEGENERACY: "η",
            GeneratorKind.SHIFT: "τ",
            GeneratorKind.SHIFT_INVERSE: "τ⁻¹",
        }[self.kind]
        if self.kind in (GeneratorKind.SHIFT, GeneratorKind.SHIFT_INVERSE):
            return f"{symbol}_{self.n}"
        return f"{symbol}_{self.i}^{self.n}"


@dataclass(frozen=True)
class GeneratorWord:
    """t₁ ∘ t₂ ∘ … ∘ t_r, read as a composite (t_r is applied first).

    ``domain`` fixes the source degree so that the empty word is a definite
    identity.
    """

    tokens: tuple[Token, ...]
    domain: int
    codomain: int = field(init=False)

    def __post_init__(self) -> None:
        deg = self.domain
        for tok in reversed(self.tokens):
            if tok.domain != deg:
                raise DegreeMismatch(f"token {tok} does not accept degree {deg}")
            deg = tok.codomain
        object.__setattr__(self, "codomain", deg)

    def __len__(self) -> int:
        return len(self.tokens)

    def __iter__(self):
        return iter(self.tokens)

    def evaluate(self) -> IndexMorphism:
        result = IndexMorphism.identity(self.domain)
        for tok in reversed(self.tokens):
            result = compose(tok.morphism, result)
        return result

    def to_dicts(self) -> list[dict[str, int | str]]:
        return [{"kind": t.kind.value, "n": t.n, "i": t.i} for t in self.tokens]

    def __str__(self) -> str:
        return " ∘ ".join(str(t) for t in self.tokens) or f"1_[{self.domain}]"


def _first_nonnegative(f: IndexMorphism) -> int:
    """min { j ∈ ℤ : f(j) >= 0 }."""
    j = -(f.values[0] // (f.n + 1)) * (f.m + 1)
    while f(j) < 0:
        j += 1
    while f(j - 1) >= 0:
        j -= 1
    return j


def factorize(f: IndexMorphism) -> GeneratorWord:
    """Canonical word (faces) ∘ (degeneracies) ∘ τ^k for f.

    k is the shift making f ∘ τ^{-k} a morphism of Δ; faces list the values
    missed on one period in descending order, degeneracies the repeated
    positions in ascending order.
    """
    a = _first_nonnegative(f)
    k = -a
    phi = f.shifted(a)
    image = sorted(set(phi.values))
    r = len(image) - 1

    faces = [v for v in range(f.n, -1, -1) if v not in set(image)]
    tokens: list[Token] = [
        Token(GeneratorKind.FACE, f.n - pos, v) for pos, v in enumerate(faces)
    ]
    repeats = [j for j in range(f.m) if phi.values[j] == phi.values[j + 1]]
    tokens += [Token(GeneratorKind.DEGENERACY, r + pos, j) for pos, j in enumerate(repeats)]
    shift_kind = GeneratorKind.SHIFT if k > 0 else GeneratorKind.SHIFT_INVERSE
    tokens += [Token(shift_kind, f.m) for _ in range(abs(k))]
    return GeneratorWord(tuple(tokens), f.m)


def expand_shifts(word: GeneratorWord) -> GeneratorWord:
    """Rewrite each τ_n as η_{n+1}^n ∘ ε_0^{n+1}, leaving a word in Λ₊ generators."""
    tokens: list[Token] = []
    for tok in word.tokens:
        if tok.kind is GeneratorKind.SHIFT:
            tokens.append(Token(GeneratorKind.DEGENERACY, tok.n, tok.n + 1))
            tokens.append(Token(GeneratorKind.FACE, tok.n + 1, 0))
        else:
            tokens.append(tok)
    return GeneratorWord(tuple(tokens), word.domain)


def _dual_token(tok: Token) -> Token:
    if tok.kind is GeneratorKind.FACE:
        return Token(GeneratorKind.DEGENERACY, tok.n - 1, tok.n - tok.i)
    if tok.kind is GeneratorKind.DEGENERACY:
        return Token(GeneratorKind.FACE, tok.n + 1, tok.n + 1 - tok.i)
    return tok


def involution_word(word: GeneratorWord) -> GeneratorWord:
    tokens = tuple(_dual_token(t) for t in reversed(word.tokens))
    return GeneratorWord(tokens, word.codomain)


def involution(f: IndexMorphism) -> IndexMorphism:
    """The contravariant duality: ε_i^n ↔ η_{n-i}^{n-1}, τ_n fixed."""
    return involution_word(factorize(f)).evaluate()


def random_morphism(rng: random.Random, max_degree: int = 3, spread: int = 4) -> IndexMorphism:
    """Sample a morphism of Λ∞ with degrees <= max_degree and |f(0)| <= spread."""
    m = rng.randint(0, max_degree)
    n = rng.randint(0, max_degree)
    start = rng.randint(-spread, spread)
    budget = n + 1
    values = [start]
    for _ in range(m):
        step = rng.randint(0, budget)
        budget -= step
        values.append(values[-1] + step)
    return IndexMorphism(m, n, tuple(values))


def random_composable(
    rng: random.Random, max_degree: int = 3, spread: int = 4
) -> tuple[IndexMorphism, IndexMorphism]:
    """(g, f) with f's codomain equal to g's domain."""
    f = random_morphism(rng, max_degree, spread)
    while True:
        g = random_morphism(rng, max_degree, spread)
        if g.m == f.n:
            return g, f
