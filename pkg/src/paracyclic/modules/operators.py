"""Operators built from the structure maps of a truncated module.

Every operator whose formula reaches degree n+1 exists only for
n < n_max.  Degree -1 is the zero module, so b_0, d_{-1}, B_{-1}, φ_{-1}
and D_0 are zero maps.
"""

from __future__ import annotations

from collections.abc import Iterable

from paracyclic.core.errors import (
    DegreeOutOfRange,
    IndexOutOfRange,
    MissingExtraDegeneracy,
    TNotAvailable,
)
from paracyclic.linalg import Matrix, invert
from paracyclic.modules.duplicial import TruncatedDuplicialModule as Module


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def _alternating(terms: Iterable[Matrix], start: Matrix) -> Matrix:
    total = start
    for i, term in enumerate(terms):
        total = total + term if i % 2 == 0 else total - term
    return total


def _below_top(M: Module, n: int, low: int = 0) -> None:
    if not low <= n < M.n_max:
        raise DegreeOutOfRange(f"degree {n} needs {low} <= n < n_max={M.n_max}")


# ---------------------------------------------------------------------------
# Differentials
# ---------------------------------------------------------------------------


def b_op(M: Module, n: int) -> Matrix:
    """b_n = Σ_{i=0}^{n} (-1)^i ∂_{n,i}."""
    M.check_degree(n)

    def compute() -> Matrix:
        if n == 0:
            return M.zero(-1, 0)
        return _alternating(M.face[n], M.zero(n - 1, n))

    return M.cached(("b", n), compute)


def d_op(M: Module, n: int) -> Matrix:
    """d_n = Σ_{i=0}^{n+1} (-1)^i s_{n,i}."""
    _below_top(M, n, -1)
    if n == -1:
        return M.zero(0, -1)

    def compute() -> Matrix:
        M.extra_degeneracy(n)
        return _alternating(M.degen[n], M.zero(n + 1, n))

    return M.cached(("d", n), compute)


def delta_op(M: Module, n: int) -> Matrix:
    M.check_degree(n, 1)
    return M.face[n][0]


def sigma_op(M: Module, n: int) -> Matrix:
    """σ_n = (-1)^n s_{n,n+1}."""
    _below_top(M, n)
    return M.extra_degeneracy(n).scale(_sign(n))


# ---------------------------------------------------------------------------
# Cyclic operator
# ---------------------------------------------------------------------------


def t_available(M: Module, n: int) -> bool:
    if not 0 <= n <= M.n_max:
        return False
    return M.stored_t(n) is not None or (n < M.n_max and M.is_duplicial)


def t_op(M: Module, n: int) -> Matrix:
    """t_n, stored or derived as ∂_{n+1,0} s_{n,n+1}."""
    M.check_degree(n)
    stored = M.stored_t(n)
    if stored is not None:
        return stored
    if n >= M.n_max:
        raise TNotAvailable(f"t_{n} is not stored and cannot be derived at the top degree")
    try:
        extra = M.extra_degeneracy(n)
    except MissingExtraDegeneracy as exc:
        raise TNotAvailable(str(exc)) from exc
    return M.cached(("t", n), lambda: M.face[n + 1][0] @ extra)


def t_inv_op(M: Module, n: int) -> Matrix:
    stored = M.stored_t_inv(n)
    if stored is not None:
        return stored
    return M.cached(("t_inv", n), lambda: invert(t_op(M, n)))


def T_op(M: Module, n: int) -> Matrix:
    """T_n = t_n^{n+1}."""
    return M.cached(("T", n), lambda: t_op(M, n).power(n + 1))


# ---------------------------------------------------------------------------
# Dold–Puppe projections
# ---------------------------------------------------------------------------


def dold_puppe_projection(M: Module, n: int, i: int = 0) -> Matrix:
    """p_{n,i} = (1 - s_{n-1,i}∂_{n,i+1}) … (1 - s_{n-1,n-1}∂_{n,n}); p_n = p_{n,0}."""
    M.check_degree(n)
    if not 0 <= i <= n:
        raise IndexOutOfRange(f"p_{{{n},{i}}} needs 0 <= i <= {n}")

    def compute() -> Matrix:
        if i == n:
            return M.identity(n)
        step = M.identity(n) - M.degen[n - 1][i] @ M.face[n][i + 1]
        return step @ dold_puppe_projection(M, n, i + 1)

    return M.cached(("p", n, i), compute)


# ---------------------------------------------------------------------------
# Karoubi and Dwyer–Kan operators
# ---------------------------------------------------------------------------


def karoubi(M: Module, n: int) -> Matrix:
    """κ_n = (-1)^n (∂_{n+1,0} s_{n,n+1} - s_{n-1,n} ∂_{n,0})."""
    _below_top(M, n)

    def compute() -> Matrix:
        first = M.face[n + 1][0] @ M.extra_degeneracy(n)
        if n > 0:
            first = first - M.extra_degeneracy(n - 1) @ M.face[n][0]
        return first.scale(_sign(n))

    return M.cached(("kappa", n), compute)


def karoubi_power(M: Module, n: int, k: int) -> Matrix:
    if k == 0:
        return M.identity(n)
    return M.cached(("kappa^", n, k), lambda: karoubi(M, n) @ karoubi_power(M, n, k - 1))


def karoubi_from_differentials(M: Module, n: int) -> Matrix:
    """1 - b_{n+1} d_n - d_{n-1} b_n."""
    _below_top(M, n)
    return M.identity(n) - b_op(M, n + 1) @ d_op(M, n) - d_op(M, n - 1) @ b_op(M, n)


def dwyer_kan(M: Module, n: int) -> Matrix:
    """π_n = (1 - b_{n+1} d_n) κ_n^n."""
    _below_top(M, n)

    def compute() -> Matrix:
        kn = karoubi_power(M, n, n)
        return kn - b_op(M, n + 1) @ d_op(M, n) @ kn

    return M.cached(("pi", n), compute)


# ---------------------------------------------------------------------------
# Homotopies
# ---------------------------------------------------------------------------


def connes_B(M: Module, n: int) -> Matrix:
    """B_n = Σ_{i=0}^{n} d_n κ_n^i."""
    _below_top(M, n, -1)
    if n == -1:
        return M.zero(0, -1)

    def compute() -> Matrix:
        total = M.zero(n + 1, n)
        dn = d_op(M, n)
        for i in range(n + 1):
            total = total + dn @ karoubi_power(M, n, i)
        return total

    return M.cached(("B", n), compute)


def gs_D(M: Module, n: int) -> Matrix:
    """D_n = Σ_{i=0}^{n-1} b_n κ_n^i (D_0 = 0)."""
    _below_top(M, n)

    def compute() -> Matrix:
        total = M.zero(n - 1, n)
        bn = b_op(M, n)
        for i in range(n):
            total = total + bn @ karoubi_power(M, n, i)
        return total

    return M.cached(("D", n), compute)


def em_homotopy_phi(M: Module, n: int) -> Matrix:
    """φ_n = Σ_{i=0}^{n} (-1)^i s_{n,i} p_{n,i}."""
    _below_top(M, n, -1)
    if n == -1:
        return M.zero(0, -1)

    def compute() -> Matrix:
        terms = (M.degen[n][i] @ dold_puppe_projection(M, n, i) for i in range(n + 1))
        return _alternating(terms, M.zero(n + 1, n))

    return M.cached(("phi", n), compute)


def pi_pq(M: Module, n: int, p: int, q: int) -> Matrix:
    """Π_{p,q} = (-1)^{q-p} s_{n-1,p} ∂_{n,q}."""
    M.check_degree(n, 1)
    if not 0 <= p < q <= n:
        raise IndexOutOfRange(f"Π_{{{p},{q}}} needs 0 <= p < q <= {n}")
    return (M.degen[n - 1][p] @ M.face[n][q]).scale(_sign(q - p))


# ---------------------------------------------------------------------------
# Lookup by name
# ---------------------------------------------------------------------------

OPERATOR_NAMES = (
    "b", "d", "delta", "sigma", "t", "t_inv", "T", "p", "kappa", "pi", "B", "D", "phi",
)


def named_operator(M: Module, name: str, n: int, index: int = 0) -> Matrix:
    """Operator *name* at degree *n* (``index`` selects i in p_{n,i})."""
    table = {
        "b": b_op,
        "d": d_op,
        "delta": delta_op,
        "sigma": sigma_op,
        "t": t_op,
        "t_inv": t_inv_op,
        "T": T_op,
        "kappa": karoubi,
        "pi": dwyer_kan,
        "B": connes_B,
        "D": gs_D,
        "phi": em_homotopy_phi,
    }
    if name == "p":
        return dold_puppe_projection(M, n, index)
    try:
        fn = table[name]
    except KeyError:
        raise IndexOutOfRange(
            f"unknown operator {name!r}; expected one of {', '.join(OPERATOR_NAMES)}"
        ) from None
    return fn(M, n)
