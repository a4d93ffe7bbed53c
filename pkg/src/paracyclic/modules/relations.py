"""The defining relations of simplicial and duplicial modules."""

from __future__ import annotations

from collections.abc import Iterator

from paracyclic.modules.checks import Identity, Instance, run_catalog
from paracyclic.modules.duplicial import TruncatedDuplicialModule as Module
from paracyclic.modules.operators import t_available, t_op
from paracyclic.modules.report import IdentityReport


def _top_degen(M: Module, n: int) -> int:
    """Largest degeneracy index available in degree n."""
    return n + 1 if M.is_duplicial else n


def _below_top(M: Module, n: int) -> bool:
    return n < M.n_max


def _face_face(M: Module, n: int) -> Iterator[Instance]:
    # ∂_{n,k} ∂_{n+1,j} = ∂_{n,j} ∂_{n+1,k+1},  j <= k
    for k in range(n + 1):
        for j in range(k + 1):
            yield (
                f"j={j},k={k}",
                M.face[n][k] @ M.face[n + 1][j],
                M.face[n][j] @ M.face[n + 1][k + 1],
            )


def _face_degeneracy(M: Module, n: int) -> Iterator[Instance]:
    # ∂_{n+1,j} s_{n,k} by the sign of k - j
    for j in range(n + 2):
        for k in range(_top_degen(M, n) + 1):
            lhs = M.face[n + 1][j] @ M.degeneracy(n, k)
            c = k - j
            if c == n + 1:
                stored = M.stored_t(n)
                if stored is None:
                    continue
                rhs = stored
            elif 1 <= c <= n:
                rhs = M.degeneracy(n - 1, k - 1) @ M.face[n][j]
            elif c in (0, -1):
                rhs = M.identity(n)
            else:
                rhs = M.degeneracy(n - 1, k) @ M.face[n][j - 1]
            yield f"j={j},k={k}", lhs, rhs


def _degeneracy_degeneracy(M: Module, n: int) -> Iterator[Instance]:
    # s_{n,j} s_{n-1,k} = s_{n,k+1} s_{n-1,j},  j <= k
    for k in range(_top_degen(M, n - 1) + 1):
        for j in range(k + 1):
            yield (
                f"j={j},k={k}",
                M.degeneracy(n, j) @ M.degeneracy(n - 1, k),
                M.degeneracy(n, k + 1) @ M.degeneracy(n - 1, j),
            )


def _face_shift(M: Module, n: int) -> Iterator[Instance]:
    tn = t_op(M, n)
    for i in range(n):
        yield f"i={i}", M.face[n][i] @ tn, t_op(M, n - 1) @ M.face[n][i + 1]
    yield f"i={n}", M.face[n][n] @ tn, M.face[n][0]


def _shift_degeneracy(M: Module, n: int) -> Iterator[Instance]:
    t_next = t_op(M, n + 1)
    yield "i=0", t_next @ M.degen[n][0], M.extra_degeneracy(n)
    for i in range(1, n + 2):
        yield f"i={i}", t_next @ M.degeneracy(n, i), M.degeneracy(n, i - 1) @ t_op(M, n)


def _shift_inverse(M: Module, n: int) -> Iterator[Instance]:
    tn, inv = t_op(M, n), M.stored_t_inv(n)
    assert inv is not None
    yield "t·t_inv", tn @ inv, M.identity(n)
    yield "t_inv·t", inv @ tn, M.identity(n)


def _is_duplicial(M: Module) -> bool:
    return M.is_duplicial


RELATIONS: tuple[Identity, ...] = (
    Identity(
        "face_face",
        degrees=lambda M: range(1, M.n_max + 1),
        instances=_face_face,
        checkable=_below_top,
    ),
    Identity(
        "face_degeneracy",
        degrees=lambda M: range(M.n_max + 1),
        instances=_face_degeneracy,
        checkable=_below_top,
    ),
    Identity(
        "degeneracy_degeneracy",
        degrees=lambda M: range(1, M.n_max + 1),
        instances=_degeneracy_degeneracy,
        checkable=_below_top,
    ),
    Identity(
        "face_shift",
        degrees=lambda M: range(1, M.n_max + 1),
        instances=_face_shift,
        checkable=lambda M, n: t_available(M, n) and t_available(M, n - 1),
        applies=_is_duplicial,
    ),
    Identity(
        "shift_degeneracy",
        degrees=lambda M: range(M.n_max + 1),
        instances=_shift_degeneracy,
        checkable=lambda M, n: n < M.n_max and t_available(M, n) and t_available(M, n + 1),
        applies=_is_duplicial,
    ),
    Identity(
        "shift_inverse",
        degrees=lambda M: range(M.n_max + 1),
        instances=_shift_inverse,
        checkable=lambda M, n: M.stored_t_inv(n) is not None,
        applies=lambda M: bool(M.t_inv),
    ),
)


def validate_relations(M: Module, workers: int = 1) -> IdentityReport:
    """Check every relation instance whose degrees are all <= n_max."""
    return run_catalog(RELATIONS, M, workers)
