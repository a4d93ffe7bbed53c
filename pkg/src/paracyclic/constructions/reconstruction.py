"""From duchain complexes back to duplicial modules.

The module built from a duchain V has M_n = ⊕_key V_{n-|key|}, one block per
degeneracy key in the order of :func:`dk_keys`.  A basis vector is the
degenerate element word(key)·v; structure maps are computed on it by
rewriting in the index category:

* a face composes the key's surjection with ε_i; if the resulting monomorphism
  skips only 0 it acts on v as b, if it skips anything else the term vanishes;
* an inner degeneracy composes with η_j and leaves v alone;
* the extra degeneracy moves past the word and acts on v by
  s_{m,m+1} v = (-1)^{m+1} d v + Σ_{i<=m} (-1)^{m-i} s_{m,i} v.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable
from dataclasses import dataclass

from paracyclic.core.errors import DegreeOutOfRange
from paracyclic.core.logging import get_logger
from paracyclic.index import GeneratorKind, IndexMorphism, compose, generator
from paracyclic.linalg import Matrix, Scalar
from paracyclic.modules.dold_kan import (
    degenerate_key,
    dk_basis_matrix,
    dk_coordinate_matrix,
    dk_keys,
    epi_from_key,
    induced_duchain,
    key_from_epi,
)
from paracyclic.modules.duplicial import DuchainComplex, Key, TruncatedDuplicialModule

log = get_logger(__name__)


@dataclass(frozen=True)
class _Term:
    """sign · word(key) · (ops applied to v), ops read left to right."""

    key: Key
    sign: int = 1
    ops: tuple[str, ...] = ()

    def then(self, key: Key, sign: int = 1, op: str | None = None) -> _Term:
        return _Term(key, self.sign * sign, self.ops + ((op,) if op else ()))


Rewrite = Callable[[_Term], Iterable[_Term]]


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def _epi_mono(g: IndexMorphism) -> tuple[IndexMorphism, set[int]]:
    """g = μ ∘ e with e surjective; returns e and the values μ skips."""
    image = sorted(set(g.values))
    rank = {v: r for r, v in enumerate(image)}
    epi = IndexMorphism(g.m, len(image) - 1, tuple(rank[v] for v in g.values))
    return epi, set(range(g.n + 1)) - set(image)


def _face(n: int, i: int) -> Rewrite:
    def rewrite(term: _Term) -> Iterable[_Term]:
        g = compose(epi_from_key(n, term.key), generator(GeneratorKind.FACE, n, i))
        epi, skipped = _epi_mono(g)
        if not skipped:
            yield term.then(key_from_epi(epi))
        elif skipped == {0}:
            yield term.then(key_from_epi(epi), op="b")

    return rewrite


def _degeneracy(n: int, j: int) -> Rewrite:
    def rewrite(term: _Term) -> Iterable[_Term]:
        yield term.then(degenerate_key(n, term.key, j))

    return rewrite


def _extra(n: int, with_d: bool) -> Rewrite:
    def rewrite(term: _Term) -> Iterable[_Term]:
        m = n - len(term.key)
        lifted = epi_from_key(n + 1, term.key)
        if with_d:
            yield term.then(term.key, _sign(m + 1), "d")
        for i in range(m + 1):
            eta = generator(GeneratorKind.DEGENERACY, m, i)
            yield term.then(key_from_epi(compose(eta, lifted)), _sign(m - i))

    return rewrite


def _then(first: Rewrite, second: Rewrite) -> Rewrite:
    def rewrite(term: _Term) -> Iterable[_Term]:
        for t in first(term):
            yield from second(t)

    return rewrite


class _Assembler:
    """Block matrices on M_n = ⊕_key V_{n-|key|}."""

    def __init__(self, V: DuchainComplex) -> None:
        self.V = V
        self.ring = V.ring
        self._layouts: dict[int, dict[Key, int]] = {}

    def layout(self, n: int) -> dict[Key, int]:
        if n not in self._layouts:
            offsets, start = {}, 0
            for key in dk_keys(n):
                offsets[key] = start
                start += self.V.rank(n - len(key))
            self._layouts[n] = offsets
        return self._layouts[n]

    def rank(self, n: int) -> int:
        return sum(self.V.rank(n - len(key)) for key in dk_keys(n))

    def _ops(self, m: int, ops: tuple[str, ...]) -> Matrix:
        current, degree = Matrix.identity(self.ring, self.V.rank(m)), m
        for op in ops:
            if op == "b":
                current, degree = self.V.b_map(degree) @ current, degree - 1
            else:
                current, degree = self.V.d_map(degree) @ current, degree + 1
        return current

    def matrix(self, source: int, target: int, rewrite: Rewrite) -> Matrix:
        ring = self.ring
        rows = [[ring.zero] * self.rank(source) for _ in range(self.rank(target))]
        targets = self.layout(target)
        for key, col0 in self.layout(source).items():
            m = source - len(key)
            for term in rewrite(_Term(key)):
                block = self._ops(m, term.ops)
                row0 = targets[term.key]
                for r in range(block.rows):
                    for c in range(block.cols):
                        x = block[r, c]
                        if x:
                            value: Scalar = x if term.sign > 0 else -x
                            rows[row0 + r][col0 + c] = ring.normalize(
                                rows[row0 + r][col0 + c] + value
                            )
        return Matrix.from_rows(ring, rows, self.rank(source))


def duchain_to_duplicial(V: DuchainComplex, n_max: int | None = None) -> TruncatedDuplicialModule:
    """The duplicial module whose normalization is V.

    t_n is left to be derived as ∂_{n+1,0}s_{n,n+1}, except when d ≡ 0: then
    every t_n, the top degree included, is stored.
    """
    n_max = V.n_max if n_max is None else n_max
    if not 0 <= n_max <= V.n_max:
        raise DegreeOutOfRange(f"n_max {n_max} outside 0..{V.n_max}")
    asm = _Assembler(V)
    with_d = not V.d_vanishes
    face = [()] + [
        tuple(asm.matrix(n, n - 1, _face(n, i)) for i in range(n + 1))
        for n in range(1, n_max + 1)
    ]
    degen = [
        tuple(asm.matrix(n, n + 1, _degeneracy(n, j)) for j in range(n + 1))
        + (asm.matrix(n, n + 1, _extra(n, with_d)),)
        for n in range(n_max)
    ]
    t: tuple[Matrix, ...] = ()
    if V.d_vanishes:
        t = tuple(
            asm.matrix(n, n, _then(_extra(n, False), _face(n + 1, 0))) for n in range(n_max + 1)
        )
    ranks = tuple(asm.rank(n) for n in range(n_max + 1))
    log.debug("reconstructed %s: ranks %s", V.name, ranks)
    return TruncatedDuplicialModule(
        ring=V.ring,
        n_max=n_max,
        ranks=ranks,
        face=tuple(face),
        degen=tuple(degen),
        t=t,
        name=f"D({V.name})",
    )


def simplicial_part(M: TruncatedDuplicialModule) -> TruncatedDuplicialModule:
    """M with the extra degeneracy and any stored t forgotten."""
    if M.is_simplicial_only:
        return M
    return M.with_maps(
        degen=[ds[: n + 1] for n, ds in enumerate(M.degen)], t=(), t_inv=(), name=M.name
    )


def promote_simplicial(M: TruncatedDuplicialModule) -> TruncatedDuplicialModule:
    """The cyclic module induced by the degenerate duchain (N(M), b, 0).

    Faces and degeneracies are those of M; the extra degeneracy and t are
    carried over from the reconstruction along the Dold–Kan coordinates.
    """
    base = simplicial_part(M)
    R = duchain_to_duplicial(induced_duchain(base))

    def transport(matrix: Matrix, source: int, target: int) -> Matrix:
        return dk_basis_matrix(base, target) @ matrix @ dk_coordinate_matrix(base, source)

    degen = [
        base.degen[n] + (transport(R.extra_degeneracy(n), n, n + 1),) for n in range(base.n_max)
    ]
    t = [transport(R.t[n], n, n) for n in range(base.n_max + 1)]
    t_inv = [tn.power(n) for n, tn in enumerate(t)]
    log.debug("promoted %s to a cyclic module", M.name)
    return base.with_maps(degen=degen, t=t, t_inv=t_inv, name=f"promote({M.name})")
