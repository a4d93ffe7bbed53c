"""Modules spanned by morphisms of the index category.

M_n has a basis of morphisms f out of [n]; a structure map M(g) for
g: [m] → [n] acts by precomposition f ↦ f ∘ g.  ``simplex_chains`` uses
Δ([n],[k]); ``twisted_circle_module`` uses Λ∞([n],[0]) with post-composition
by the shift acting as a scalar.
"""

from __future__ import annotations

from collections.abc import Callable, Sequence

from paracyclic.core.errors import DegreeOutOfRange
from paracyclic.core.logging import get_logger
from paracyclic.index import GeneratorKind, IndexMorphism, compose, enumerate_delta, generator
from paracyclic.linalg import CoefficientRing, Matrix, Scalar
from paracyclic.modules.duplicial import TruncatedDuplicialModule

log = get_logger(__name__)

Action = Callable[[IndexMorphism], tuple[Scalar, IndexMorphism]]


def presheaf_matrix(
    ring: CoefficientRing,
    source: Sequence[IndexMorphism],
    target: Sequence[IndexMorphism],
    act: Action,
) -> Matrix:
    """Matrix of a map sending each basis morphism to ``coefficient · representative``."""
    position = {f: j for j, f in enumerate(target)}
    columns = []
    for f in source:
        coefficient, image = act(f)
        column = [ring.zero] * len(target)
        column[position[image]] = ring.normalize(coefficient)
        columns.append(column)
    return Matrix.from_columns(ring, columns, len(target))


def _check_truncation(n_max: int) -> None:
    if n_max < 0:
        raise DegreeOutOfRange(f"n_max must be >= 0, got {n_max}")


# ---------------------------------------------------------------------------
# Standard simplices
# ---------------------------------------------------------------------------


def simplex_chains(k: int, n_max: int, ring: CoefficientRing) -> TruncatedDuplicialModule:
    """Simplicial module of chains on the standard k-simplex, free on Δ([n],[k])."""
    if k < 0:
        raise DegreeOutOfRange(f"simplex dimension must be >= 0, got {k}")
    _check_truncation(n_max)
    bases = [enumerate_delta(n, k) for n in range(n_max + 1)]

    def along(g: IndexMorphism) -> Matrix:
        return presheaf_matrix(ring, bases[g.n], bases[g.m], lambda f: (ring.one, compose(f, g)))

    face = [()] + [
        tuple(along(generator(GeneratorKind.FACE, n, i)) for i in range(n + 1))
        for n in range(1, n_max + 1)
    ]
    degen = [
        tuple(along(generator(GeneratorKind.DEGENERACY, n, i)) for i in range(n + 1))
        for n in range(n_max)
    ]
    log.debug("simplex-%d chains: ranks %s", k, [len(b) for b in bases])
    return TruncatedDuplicialModule(
        ring=ring,
        n_max=n_max,
        ranks=tuple(len(b) for b in bases),
        face=tuple(face),
        degen=tuple(degen),
        name=f"simplex-{k}",
    )


# ---------------------------------------------------------------------------
# Twisted circle
# ---------------------------------------------------------------------------


def _circle_basis(n: int) -> list[IndexMorphism]:
    """Representatives f: [n] → [0] with f(0) = 0: z zeros followed by ones, z = 1..n+1."""
    return [IndexMorphism(n, 0, (0,) * z + (1,) * (n + 1 - z)) for z in range(n + 1, 0, -1)]


def twisted_circle_module(
    u: Scalar | int | str, n_max: int, ring: CoefficientRing
) -> TruncatedDuplicialModule:
    """Paracyclic module on Λ∞(-,[0]) where the shift of [0] acts by u.

    Rank n+1 in degree n and T_n = u·1.  t is invertible exactly when u is a
    unit; ``t_inv`` is stored in that case.
    """
    _check_truncation(n_max)
    scalar = ring.parse_scalar(u) if isinstance(u, str) else ring.normalize(u)
    invertible = ring.is_unit(scalar)
    bases = [_circle_basis(n) for n in range(n_max + 1)]

    def act(g: IndexMorphism) -> Action:
        def on(f: IndexMorphism) -> tuple[Scalar, IndexMorphism]:
            values = compose(f, g).values
            c = values[0]
            return ring.power(scalar, c), IndexMorphism(g.m, 0, tuple(v - c for v in values))

        return on

    def along(g: IndexMorphism) -> Matrix:
        return presheaf_matrix(ring, bases[g.n], bases[g.m], act(g))

    face = [()] + [
        tuple(along(generator(GeneratorKind.FACE, n, i)) for i in range(n + 1))
        for n in range(1, n_max + 1)
    ]
    degen = [
        tuple(along(generator(GeneratorKind.DEGENERACY, n, i)) for i in range(n + 2))
        for n in range(n_max)
    ]
    t = tuple(along(generator(GeneratorKind.SHIFT, n)) for n in range(n_max + 1))
    t_inv = (
        tuple(along(generator(GeneratorKind.SHIFT_INVERSE, n)) for n in range(n_max + 1))
        if invertible
        else ()
    )
    log.debug("twisted circle u=%s: unit=%s", ring.format(scalar), invertible)
    return TruncatedDuplicialModule(
        ring=ring,
        n_max=n_max,
        ranks=tuple(n + 1 for n in range(n_max + 1)),
        face=tuple(face),
        degen=tuple(degen),
        t=t,
        t_inv=t_inv,
        name=f"scalar-twisted-{ring.format(scalar)}",
    )
