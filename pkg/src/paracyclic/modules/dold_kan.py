"""Normalized chains and the Dold–Kan decomposition.

Degeneracy words are keyed by strictly decreasing index sequences
(i₁ > … > i_k) standing for s_{n-1,i₁} s_{n-2,i₂} … s_{n-k,i_k}.  A key is
the set of repeated positions of the surjection [n] → [n-k] the word
represents, which turns rewriting of words into composition in Δ.
"""

from __future__ import annotations

from itertools import combinations

from paracyclic.core.errors import (
    InducedSquareNonzero,
    NonNormalizedComponent,
    ShapeMismatch,
)
from paracyclic.core.logging import get_logger
from paracyclic.index import GeneratorKind, IndexMorphism, compose, generator
from paracyclic.linalg import Matrix, kernel_matrix, left_inverse
from paracyclic.modules.duplicial import (
    DKDecomposition,
    DuchainComplex,
    Element,
    Key,
)
from paracyclic.modules.duplicial import TruncatedDuplicialModule as Module
from paracyclic.modules.operators import b_op, d_op, dold_puppe_projection

log = get_logger(__name__)


# ---------------------------------------------------------------------------
# Keys and surjections
# ---------------------------------------------------------------------------


def dk_keys(n: int) -> list[Key]:
    """All keys in degree n: by length, then lexicographically."""
    keys: list[Key] = []
    for k in range(n + 1):
        keys += sorted(tuple(sorted(c, reverse=True)) for c in combinations(range(n), k))
    return keys


def epi_from_key(n: int, key: Key) -> IndexMorphism:
    """The surjection [n] → [n-k] identifying j and j+1 for j in key."""
    values = [0]
    for j in range(n):
        values.append(values[-1] + (0 if j in key else 1))
    return IndexMorphism(n, n - len(key), tuple(values))


def key_from_epi(e: IndexMorphism) -> Key:
    return tuple(j for j in range(e.m - 1, -1, -1) if e.values[j] == e.values[j + 1])


def degenerate_key(n: int, key: Key, a: int) -> Key:
    """Key of s_{n,a} ∘ word(key), an element of degree n+1."""
    return key_from_epi(compose(epi_from_key(n, key), generator(GeneratorKind.DEGENERACY, n, a)))


def degeneracy_word(M: Module, n: int, key: Key) -> Matrix:
    """s_{n-1,i₁} s_{n-2,i₂} … s_{n-k,i_k} : M_{n-k} → M_n."""

    def compute() -> Matrix:
        if not key:
            return M.identity(n)
        head, rest = key[0], key[1:]
        return M.degen[n - 1][head] @ degeneracy_word(M, n - 1, rest)

    return M.cached(("word", n, key), compute)


# ---------------------------------------------------------------------------
# Normalized and degenerate parts
# ---------------------------------------------------------------------------


def normalized_basis_matrix(M: Module, n: int) -> Matrix:
    """Columns span N_n = image of p_n = kernel of 1 - p_n."""
    M.check_degree(n)

    def compute() -> Matrix:
        basis = kernel_matrix(M.identity(n) - dold_puppe_projection(M, n))
        log.debug("%s: rank N_%d = %d of %d", M.name, n, basis.cols, M.ranks[n])
        return basis

    return M.cached(("N", n), compute)


def normalized_coordinates(M: Module, n: int) -> Matrix:
    """Left inverse of the normalized basis: M_n ⊇ N_n → coordinates."""
    return M.cached(("L", n), lambda: left_inverse(normalized_basis_matrix(M, n)))


def degenerate_basis_matrix(M: Module, n: int) -> Matrix:
    """Columns span D_n = kernel of p_n."""
    M.check_degree(n)
    return M.cached(("Dg", n), lambda: kernel_matrix(dold_puppe_projection(M, n)))


def normalized_rank(M: Module, n: int) -> int:
    return normalized_basis_matrix(M, n).cols


def normalized_basis(M: Module, n: int) -> list[Element]:
    return [Element(n, col) for col in normalized_basis_matrix(M, n).columns()]


def degenerate_basis(M: Module, n: int) -> list[Element]:
    return [Element(n, col) for col in degenerate_basis_matrix(M, n).columns()]


def restrict_to_normalized(M: Module, operator: Matrix, source: int, target: int) -> Matrix:
    """Matrix of an operator N_source → N_target in the normalized bases."""
    return normalized_coordinates(M, target) @ operator @ normalized_basis_matrix(M, source)


def is_normalized(M: Module, element: Element) -> bool:
    n = element.degree
    return all(not any(M.face[n][i].apply(element.coords)) for i in range(1, n + 1))


# ---------------------------------------------------------------------------
# Decomposition
# ---------------------------------------------------------------------------


def dk_component_maps(M: Module, n: int) -> dict[Key, Matrix]:
    """C_key : M_n → N_{n-k} with x = Σ word(key) C_key x.

    Built recursively from 1 - p_n = Σ_{i=1}^{n} s_{n-1,i-1} ∂_{n,i} p_{n,i}.
    """
    M.check_degree(n)

    def compute() -> dict[Key, Matrix]:
        maps: dict[Key, Matrix] = {(): dold_puppe_projection(M, n)}
        if n == 0:
            return maps
        lower = dk_component_maps(M, n - 1)
        for i in range(1, n + 1):
            step = M.face[n][i] @ dold_puppe_projection(M, n, i)
            for key, comp in lower.items():
                target = degenerate_key(n - 1, key, i - 1)
                term = comp @ step
                maps[target] = maps[target] + term if target in maps else term
        return {key: maps[key] for key in dk_keys(n)}

    return M.cached(("C", n), compute)


def dk_decompose(M: Module, n: int, x: Element) -> DKDecomposition:
    if x.degree != n:
        raise ShapeMismatch(f"element has degree {x.degree}, expected {n}")
    x.check(M)
    components = {
        key: Element(n - len(key), comp.apply(x.coords))
        for key, comp in dk_component_maps(M, n).items()
    }
    return DKDecomposition(n, components)


def dk_reconstruct(M: Module, n: int, decomposition: DKDecomposition) -> Element:
    M.check_degree(n)
    total = Element.zero(M, n).coords
    for key, comp in decomposition.components.items():
        decreasing = list(key) == sorted(set(key), reverse=True)
        if not decreasing or (key and (key[0] >= n or key[-1] < 0)):
            raise ShapeMismatch(f"{key} is not a degeneracy key in degree {n}")
        if comp.degree != n - len(key):
            raise ShapeMismatch(
                f"component {key} has degree {comp.degree}, expected {n - len(key)}"
            )
        comp.check(M)
        if not is_normalized(M, comp):
            raise NonNormalizedComponent(f"component {key} is not killed by the inner faces")
        image = degeneracy_word(M, n, key).apply(comp.coords)
        total = tuple(M.ring.normalize(a + b) for a, b in zip(total, image))
    return Element(n, total)


def dk_coordinate_matrix(M: Module, n: int) -> Matrix:
    """Φ_n : M_n → ⊕_key N_{n-k}, stacked in key order (in normalized coordinates)."""

    def compute() -> Matrix:
        maps = dk_component_maps(M, n)
        blocks = [normalized_coordinates(M, n - len(k)) @ maps[k] for k in dk_keys(n)]
        return Matrix.vstack(M.ring, M.ranks[n], blocks)

    return M.cached(("Phi", n), compute)


def dk_basis_matrix(M: Module, n: int) -> Matrix:
    """Ψ_n = Φ_n⁻¹ : columns are word(key) applied to normalized basis vectors."""

    def compute() -> Matrix:
        blocks = [
            degeneracy_word(M, n, k) @ normalized_basis_matrix(M, n - len(k)) for k in dk_keys(n)
        ]
        return Matrix.hstack(M.ring, M.ranks[n], blocks)

    return M.cached(("Psi", n), compute)


# ---------------------------------------------------------------------------
# Induced duchain
# ---------------------------------------------------------------------------


def induced_duchain(M: Module) -> DuchainComplex:
    """(N(M), b^N, d^N) in the normalized bases; d^N = p∘d restricted to N.

    A simplicial-only module yields the degenerate duchain with d ≡ 0.
    """

    def compute() -> DuchainComplex:
        ring = M.ring
        ranks = tuple(normalized_rank(M, n) for n in range(M.n_max + 1))
        b = {
            n: restrict_to_normalized(M, b_op(M, n), n, n - 1) for n in range(1, M.n_max + 1)
        }
        for n in range(2, M.n_max + 1):
            if not (b[n - 1] @ b[n]).is_zero():
                raise InducedSquareNonzero(f"induced b[{n - 1}]·b[{n}] ≠ 0")
        if not M.is_duplicial:
            return DuchainComplex.from_maps(
                ring, ranks, b, d_vanishes=True, name=f"N({M.name})"
            )
        d = {
            n: restrict_to_normalized(M, dold_puppe_projection(M, n + 1) @ d_op(M, n), n, n + 1)
            for n in range(M.n_max)
        }
        for n in range(M.n_max - 1):
            if not (d[n + 1] @ d[n]).is_zero():
                raise InducedSquareNonzero(f"induced d[{n + 1}]·d[{n}] ≠ 0")
        return DuchainComplex.from_maps(ring, ranks, b, d, name=f"N({M.name})")

    return M.cached("induced_duchain", compute)
