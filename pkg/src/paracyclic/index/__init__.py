from paracyclic.index.morphism import (
    GeneratorKind,
    IndexMorphism,
    MorphismClass,
    classify,
    compose,
    enumerate_delta,
    generator,
    in_lambda_plus,
)
from paracyclic.index.words import (
    GeneratorWord,
    Token,
    expand_shifts,
    factorize,
    involution,
    involution_word,
    random_composable,
    random_morphism,
)

__all__ = [
    "GeneratorKind",
    "GeneratorWord",
    "IndexMorphism",
    "MorphismClass",
    "Token",
    "classify",
    "compose",
    "enumerate_delta",
    "expand_shifts",
    "factorize",
    "generator",
    "in_lambda_plus",
    "involution",
    "involution_word",
    "random_composable",
    "random_morphism",
]
