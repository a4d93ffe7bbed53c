"""The identity suite: every operator identity of a duplicial module.

Each entry is evaluated as exact matrix equality at every degree that
truncation permits; degrees that would reach past n_max are reported
skipped.  The printed (+) inversion formulas are advisory entries, checked
side by side with their sign-corrected counterparts.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from math import comb

from paracyclic.core.errors import MissingExtraDegeneracy, NotInvertible
from paracyclic.core.logging import get_logger
from paracyclic.linalg import Matrix, invert, is_invertible
from paracyclic.modules.checks import Identity, Instance, NotApplicable, run_catalog
from paracyclic.modules.dold_kan import (
    degeneracy_word,
    degenerate_basis_matrix,
    dk_basis_matrix,
    dk_coordinate_matrix,
    dk_keys,
    normalized_basis_matrix,
    normalized_rank,
    restrict_to_normalized,
)
from paracyclic.modules.duplicial import TruncatedDuplicialModule as Module
from paracyclic.modules.operators import (
    T_op,
    b_op,
    connes_B,
    d_op,
    dold_puppe_projection,
    dwyer_kan,
    em_homotopy_phi,
    gs_D,
    karoubi,
    karoubi_from_differentials,
    karoubi_power,
    pi_pq,
    sigma_op,
    t_available,
    t_op,
)
from paracyclic.modules.report import IdentityReport

log = get_logger(__name__)

_UNPROVEN = "stated without proof; checked numerically"


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def _bd(M: Module, n: int) -> Matrix:
    """b_{n+1} d_n on M_n."""
    return b_op(M, n + 1) @ d_op(M, n)


def _db(M: Module, n: int) -> Matrix:
    """d_{n-1} b_n on M_n."""
    return d_op(M, n - 1) @ b_op(M, n)


def _below(k: int):
    """Checkable when n + k < n_max."""
    return lambda M, n: n + k < M.n_max


def _all(M: Module) -> range:
    return range(M.n_max + 1)


def _from(low: int):
    return lambda M: range(low, M.n_max + 1)


def _duplicial(M: Module) -> bool:
    return M.is_duplicial


# ---------------------------------------------------------------------------
# Differentials
# ---------------------------------------------------------------------------


def _b_squared(M: Module, n: int) -> Iterator[Instance]:
    yield "b·b", b_op(M, n - 1) @ b_op(M, n), M.zero(n - 2, n)


def _d_squared(M: Module, n: int) -> Iterator[Instance]:
    yield "d·d", d_op(M, n + 1) @ d_op(M, n), M.zero(n + 2, n)


def _sigma_rearrangement(M: Module, n: int) -> Iterator[Instance]:
    rhs = -d_op(M, n)
    for i in range(n + 1):
        rhs = rhs + M.degen[n][i].scale(_sign(i))
    yield "σ = -d + Σ(-1)^i s", sigma_op(M, n), rhs


# ---------------------------------------------------------------------------
# Dold–Puppe projections and normalization
# ---------------------------------------------------------------------------


def _p_idempotent(M: Module, n: int) -> Iterator[Instance]:
    p = dold_puppe_projection(M, n)
    yield "p·p", p @ p, p


def _p_faces(M: Module, n: int) -> Iterator[Instance]:
    for i in range(n):
        p = dold_puppe_projection(M, n, i)
        for k in range(i + 1, n + 1):
            yield f"i={i},k={k}", M.face[n][k] @ p, M.zero(n - 1, n)


def _p_degeneracies(M: Module, n: int) -> Iterator[Instance]:
    p = dold_puppe_projection(M, n)
    for k in range(n):
        yield f"k={k}", p @ M.degen[n - 1][k], M.zero(n, n - 1)


def _p_commutes_b(M: Module, n: int) -> Iterator[Instance]:
    b = b_op(M, n)
    yield "b·p", b @ dold_puppe_projection(M, n), dold_puppe_projection(M, n - 1) @ b


def _rank_split(M: Module, n: int) -> Iterator[Instance]:
    yield (
        "rank N + rank D",
        normalized_basis_matrix(M, n).cols + degenerate_basis_matrix(M, n).cols,
        M.ranks[n],
    )


def _dk_rank_identity(M: Module, n: int) -> Iterator[Instance]:
    yield (
        "Σ C(n,k) rank N_{n-k}",
        sum(comb(n, k) * normalized_rank(M, n - k) for k in range(n + 1)),
        M.ranks[n],
    )


def _dk_round_trip(M: Module, n: int) -> Iterator[Instance]:
    phi, psi = dk_coordinate_matrix(M, n), dk_basis_matrix(M, n)
    yield "Ψ·Φ", psi @ phi, M.identity(n)
    yield "Φ·Ψ", phi @ psi, Matrix.identity(M.ring, phi.rows)


def _em_homotopy(M: Module, n: int) -> Iterator[Instance]:
    lhs = b_op(M, n + 1) @ em_homotopy_phi(M, n) + em_homotopy_phi(M, n - 1) @ b_op(M, n)
    yield "bφ + φb", lhs, dold_puppe_projection(M, n) - M.identity(n)


def _extra_degeneracy_on_normalized(M: Module, n: int) -> Iterator[Instance]:
    basis = normalized_basis_matrix(M, n)
    rhs = d_op(M, n).scale(_sign(n + 1))
    for i in range(n + 1):
        rhs = rhs + M.degen[n][i].scale(_sign(n - i))
    yield "s_{n,n+1} on N", M.extra_degeneracy(n) @ basis, rhs @ basis


def _d_preserves_normalized(M: Module, n: int) -> Iterator[Instance]:
    image = d_op(M, n) @ normalized_basis_matrix(M, n)
    for i in range(1, n + 2):
        yield f"∂_{i} d", M.face[n + 1][i] @ image, Matrix.zero(M.ring, M.ranks[n], image.cols)


# ---------------------------------------------------------------------------
# Karoubi operator
# ---------------------------------------------------------------------------


def _karoubi_differential_form(M: Module, n: int) -> Iterator[Instance]:
    yield "κ = 1 - bd - db", karoubi(M, n), karoubi_from_differentials(M, n)


def _karoubi_factorization(M: Module, n: int) -> Iterator[Instance]:
    x, y = M.identity(n) - _bd(M, n), M.identity(n) - _db(M, n)
    yield "(1-bd)(1-db)", x @ y, karoubi(M, n)
    yield "(1-db)(1-bd)", y @ x, karoubi(M, n)


def _karoubi_commutes_b(M: Module, n: int) -> Iterator[Instance]:
    b = b_op(M, n)
    yield "b·κ", b @ karoubi(M, n), karoubi(M, n - 1) @ b


def _karoubi_commutes_d(M: Module, n: int) -> Iterator[Instance]:
    d = d_op(M, n)
    yield "d·κ", d @ karoubi(M, n), karoubi(M, n + 1) @ d


def _karoubi_degeneracy_rule(M: Module, n: int) -> Iterator[Instance]:
    k_next, k_n = karoubi(M, n + 1), karoubi(M, n)
    yield "i=0", k_next @ M.degen[n][0], M.zero(n + 1, n)
    for i in range(1, n + 1):
        yield f"i={i}", k_next @ M.degen[n][i], -(M.degen[n][i - 1] @ k_n)
    yield (
        f"i={n + 1}",
        k_next @ M.extra_degeneracy(n),
        (M.extra_degeneracy(n) - M.degen[n][n]) @ k_n,
    )


def _karoubi_face_rule(M: Module, n: int) -> Iterator[Instance]:
    k_n, k_prev = karoubi(M, n), karoubi(M, n - 1)
    yield "i=0", M.face[n][0] @ k_n, k_prev @ (M.face[n][0] - M.face[n][1])
    for i in range(1, n):
        yield f"i={i}", M.face[n][i] @ k_n, -(k_prev @ M.face[n][i + 1])
    yield f"i={n}", M.face[n][n] @ k_n, M.zero(n - 1, n)


def _karoubi_on_decomposition(M: Module, n: int) -> Iterator[Instance]:
    k_n = karoubi(M, n)
    for key in dk_keys(n)[1:]:
        m = n - len(key)
        p_m = dold_puppe_projection(M, m)
        lhs = k_n @ degeneracy_word(M, n, key) @ p_m
        if key[-1] == 0:
            rhs = M.zero(n, m)
        else:
            lowered = tuple(i - 1 for i in key)
            rhs = (degeneracy_word(M, n, lowered) @ karoubi(M, m) @ p_m).scale(_sign(len(key)))
        yield f"key={key}", lhs, rhs


# ---------------------------------------------------------------------------
# Dwyer–Kan operator
# ---------------------------------------------------------------------------


def _dwyer_kan_differential_form(M: Module, n: int) -> Iterator[Instance]:
    x, y = M.identity(n) - _bd(M, n), M.identity(n) - _db(M, n)
    yield "(1-bd)^{n+1}(1-db)^n", dwyer_kan(M, n), x.power(n + 1) @ y.power(n)


def _dwyer_kan_shifted_form(M: Module, n: int) -> Iterator[Instance]:
    rhs = karoubi_power(M, n, n) - b_op(M, n + 1) @ karoubi_power(M, n + 1, n) @ d_op(M, n)
    yield "κ_n^n - b κ_{n+1}^n d", dwyer_kan(M, n), rhs


def _dwyer_kan_defining_form(M: Module, n: int) -> Iterator[Instance]:
    rhs = M.face[n + 1][0] @ karoubi_power(M, n + 1, n) @ M.extra_degeneracy(n)
    yield "(-1)^n ∂_0 κ^n s_{n+1}", dwyer_kan(M, n), rhs.scale(_sign(n))


def _dwyer_kan_commutes_b(M: Module, n: int) -> Iterator[Instance]:
    b = b_op(M, n)
    yield "b·π", b @ dwyer_kan(M, n), dwyer_kan(M, n - 1) @ b


def _dwyer_kan_commutes_d(M: Module, n: int) -> Iterator[Instance]:
    d = d_op(M, n)
    yield "d·π", d @ dwyer_kan(M, n), dwyer_kan(M, n + 1) @ d


# ---------------------------------------------------------------------------
# Homotopies B and D
# ---------------------------------------------------------------------------


def _connes_homotopy(M: Module, n: int) -> Iterator[Instance]:
    lhs = b_op(M, n + 1) @ connes_B(M, n) + connes_B(M, n - 1) @ b_op(M, n)
    yield "bB + Bb", lhs, M.identity(n) - dwyer_kan(M, n)


def _connes_square(M: Module, n: int) -> Iterator[Instance]:
    yield "B·B", connes_B(M, n + 1) @ connes_B(M, n), M.zero(n + 2, n)


def _gs_homotopy(M: Module, n: int) -> Iterator[Instance]:
    lhs = d_op(M, n - 1) @ gs_D(M, n) + gs_D(M, n + 1) @ d_op(M, n)
    yield "dD + Dd", lhs, M.identity(n) - dwyer_kan(M, n)


def _gs_square(M: Module, n: int) -> Iterator[Instance]:
    yield "D·D", gs_D(M, n - 1) @ gs_D(M, n), M.zero(n - 2, n)


# ---------------------------------------------------------------------------
# T and the main theorem
# ---------------------------------------------------------------------------


def _main_theorem(M: Module, n: int) -> Iterator[Instance]:
    p, T, pi = dold_puppe_projection(M, n), T_op(M, n), dwyer_kan(M, n)
    yield "π = p·T", pi, p @ T
    yield "π = T·p", pi, T @ p


def _shift_commutes_faces(M: Module, n: int) -> Iterator[Instance]:
    T_n, T_prev = T_op(M, n), T_op(M, n - 1)
    for i in range(n + 1):
        yield f"i={i}", T_prev @ M.face[n][i], M.face[n][i] @ T_n


def _shift_commutes_degeneracies(M: Module, n: int) -> Iterator[Instance]:
    T_n, T_next = T_op(M, n), T_op(M, n + 1)
    for i in range(n + 2):
        s = M.degeneracy(n, i)
        yield f"i={i}", T_next @ s, s @ T_n


def _shift_on_decomposition(M: Module, n: int) -> Iterator[Instance]:
    T_n = T_op(M, n)
    for key in dk_keys(n):
        m = n - len(key)
        word, p_m = degeneracy_word(M, n, key), dold_puppe_projection(M, m)
        yield f"key={key}", T_n @ word @ p_m, word @ dwyer_kan(M, m) @ p_m


def _restricted(M: Module, op: Matrix, n: int) -> Matrix:
    return restrict_to_normalized(M, op, n, n)


def _shift_invertibility_criterion(M: Module, n: int) -> Iterator[Instance]:
    t_invertible = is_invertible(T_op(M, n))
    pi_invertible = all(
        is_invertible(_restricted(M, dwyer_kan(M, m), m)) for m in range(n + 1)
    )
    kappa_invertible = all(
        is_invertible(_restricted(M, karoubi(M, m), m)) for m in range(n + 1)
    )
    yield "T ⇔ π|N", t_invertible, pi_invertible
    yield "π|N ⇔ κ|N", pi_invertible, kappa_invertible


def _t1_on_decomposition(M: Module, n: int) -> Iterator[Instance]:
    t1, s00 = t_op(M, 1), M.degen[0][0]
    p1 = dold_puppe_projection(M, 1)
    rhs = -p1 + b_op(M, 2) @ d_op(M, 1) @ p1 + s00 @ b_op(M, 1) @ p1
    yield "t_1 on N_1", t1 @ p1, rhs
    yield "t_1 s_{0,0}", t1 @ s00, s00 - d_op(M, 0)


# ---------------------------------------------------------------------------
# Inversion formulas on N(M)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class _Restricted:
    kappa: Matrix
    kappa_inv: Matrix
    pi_inv: Matrix
    bd: Matrix
    db: Matrix
    one: Matrix


def _restricted_inverses(M: Module, n: int) -> _Restricted:
    def compute() -> _Restricted:
        kappa = _restricted(M, karoubi(M, n), n)
        try:
            kappa_inv = invert(kappa)
            pi_inv = invert(_restricted(M, dwyer_kan(M, n), n))
        except NotInvertible as exc:
            raise NotApplicable(f"κ_{n} not invertible on N_{n}") from exc
        return _Restricted(
            kappa=kappa,
            kappa_inv=kappa_inv,
            pi_inv=pi_inv,
            bd=_restricted(M, _bd(M, n), n),
            db=_restricted(M, _db(M, n), n),
            one=Matrix.identity(M.ring, kappa.rows),
        )

    return M.cached(("restricted_inverses", n), compute)


def _pi_inverse(sign: int):
    def instances(M: Module, n: int) -> Iterator[Instance]:
        r = _restricted_inverses(M, n)
        rhs = r.kappa_inv.power(n + 1) @ (r.one + r.db.scale(sign))
        yield "π⁻¹", r.pi_inv, rhs

    return instances


def _kappa_inverse(sign: int):
    def instances(M: Module, n: int) -> Iterator[Instance]:
        r = _restricted_inverses(M, n)
        x, y = r.one + r.bd.scale(sign), r.one + r.db.scale(sign)
        rhs = r.pi_inv @ x.power(n) @ y.power(max(n - 1, 0))
        yield "κ⁻¹", r.kappa_inv, rhs

    return instances


# ---------------------------------------------------------------------------
# Π_{p,q}
# ---------------------------------------------------------------------------


def _pi_pq_factorization(M: Module, n: int) -> Iterator[Instance]:
    for p in range(n):
        for q in range(p + 1, n + 1):
            product = M.identity(n)
            for j in range(p, q):
                product = product @ -(M.degen[n - 1][j] @ M.face[n][j + 1])
            yield f"p={p},q={q}", pi_pq(M, n, p, q), product


def _pi_pq_commutation(M: Module, n: int) -> Iterator[Instance]:
    for q in range(n + 1):
        for p in range(q):
            for s in range(p):
                for r in range(s):
                    a, b = pi_pq(M, n, p, q), pi_pq(M, n, r, s)
                    yield f"p={p},q={q},r={r},s={s}", a @ b, b @ a


# ---------------------------------------------------------------------------
# Catalog
# ---------------------------------------------------------------------------

IDENTITIES: tuple[Identity, ...] = (
    Identity("b_squared", _from(2), _b_squared),
    Identity("d_squared", _all, _d_squared, _below(1), _duplicial),
    Identity("sigma_rearrangement", _all, _sigma_rearrangement, _below(0), _duplicial),
    Identity("dold_puppe_idempotent", _all, _p_idempotent),
    Identity("dold_puppe_faces", _from(1), _p_faces),
    Identity("dold_puppe_degeneracies", _from(1), _p_degeneracies),
    Identity("dold_puppe_commutes_b", _from(1), _p_commutes_b),
    Identity("normalized_rank_split", _all, _rank_split),
    Identity("dold_kan_rank_identity", _all, _dk_rank_identity),
    Identity("dold_kan_round_trip", _all, _dk_round_trip),
    Identity("em_homotopy", _all, _em_homotopy, _below(0)),
    Identity(
        "extra_degeneracy_on_normalized", _all, _extra_degeneracy_on_normalized, _below(0),
        _duplicial,
    ),
    Identity("d_preserves_normalized", _all, _d_preserves_normalized, _below(0), _duplicial),
    Identity("karoubi_differential_form", _all, _karoubi_differential_form, _below(0), _duplicial),
    Identity("karoubi_factorization", _all, _karoubi_factorization, _below(0), _duplicial),
    Identity("karoubi_commutes_b", _from(1), _karoubi_commutes_b, _below(0), _duplicial),
    Identity("karoubi_commutes_d", _all, _karoubi_commutes_d, _below(1), _duplicial),
    Identity("karoubi_degeneracy_rule", _all, _karoubi_degeneracy_rule, _below(1), _duplicial),
    Identity("karoubi_face_rule", _from(1), _karoubi_face_rule, _below(0), _duplicial),
    Identity("karoubi_on_decomposition", _from(1), _karoubi_on_decomposition, _below(0),
             _duplicial),
    Identity("dwyer_kan_differential_form", _all, _dwyer_kan_differential_form, _below(0),
             _duplicial),
    Identity("dwyer_kan_shifted_form", _all, _dwyer_kan_shifted_form, _below(1), _duplicial),
    Identity("dwyer_kan_defining_form", _all, _dwyer_kan_defining_form, _below(1), _duplicial),
    Identity("dwyer_kan_commutes_b", _from(1), _dwyer_kan_commutes_b, _below(0), _duplicial),
    Identity("dwyer_kan_commutes_d", _all, _dwyer_kan_commutes_d, _below(1), _duplicial),
    Identity("connes_homotopy", _all, _connes_homotopy, _below(0), _duplicial),
    Identity("connes_square", _all, _connes_square, _below(1), _duplicial),
    Identity("gs_homotopy", _all, _gs_homotopy, _below(1), _duplicial, flag=_UNPROVEN),
    Identity("gs_square", _from(2), _gs_square, _below(0), _duplicial, flag=_UNPROVEN),
    Identity("main_theorem", _all, _main_theorem, _below(0), _duplicial),
    Identity(
        "shift_commutes_faces", _from(1), _shift_commutes_faces,
        lambda M, n: t_available(M, n) and t_available(M, n - 1), _duplicial,
    ),
    Identity(
        "shift_commutes_degeneracies", _all, _shift_commutes_degeneracies,
        lambda M, n: n < M.n_max and t_available(M, n + 1), _duplicial,
    ),
    Identity("shift_on_decomposition", _all, _shift_on_decomposition, _below(0), _duplicial),
    Identity(
        "shift_invertibility_criterion", _all, _shift_invertibility_criterion, _below(0),
        _duplicial,
    ),
    Identity(
        "t1_on_decomposition", lambda M: range(1, min(M.n_max, 1) + 1), _t1_on_decomposition,
        _below(0), _duplicial,
    ),
    Identity("pi_inverse_corrected", _all, _pi_inverse(-1), _below(0), _duplicial),
    Identity("kappa_inverse_corrected", _all, _kappa_inverse(-1), _below(0), _duplicial),
    Identity("pi_inverse_printed", _all, _pi_inverse(1), _below(0), _duplicial, advisory=True),
    Identity(
        "kappa_inverse_printed", _all, _kappa_inverse(1), _below(0), _duplicial, advisory=True
    ),
    Identity("pi_pq_factorization", _from(1), _pi_pq_factorization),
    Identity("pi_pq_commutation", _from(3), _pi_pq_commutation),
)


def check_identity_suite(M: Module, workers: int = 1) -> IdentityReport:
    """Evaluate the full catalog; failures are report entries, never exceptions."""
    return run_catalog(IDENTITIES, M, workers)


@dataclass(frozen=True)
class InversionRow:
    degree: int
    pi_printed: bool | None
    pi_corrected: bool | None
    kappa_printed: bool | None
    kappa_corrected: bool | None


def inversion_formula_resolution(M: Module, up_to: int | None = None) -> list[InversionRow]:
    """Which κ⁻¹ / π⁻¹ variant holds on N_n, per degree (None: κ|N not invertible)."""
    if not M.is_duplicial:
        raise MissingExtraDegeneracy(f"{M.name} has no extra degeneracy; κ is undefined")
    top = M.n_max - 1 if up_to is None else min(up_to, M.n_max - 1)
    variants = (_pi_inverse(1), _pi_inverse(-1), _kappa_inverse(1), _kappa_inverse(-1))
    rows = []
    for n in range(top + 1):
        flags: list[bool | None]
        try:
            flags = [lhs == rhs for _, lhs, rhs in (next(iter(v(M, n))) for v in variants)]
        except NotApplicable:
            flags = [None] * 4
        log.debug("inversion formulas at degree %d: %s", n, flags)
        rows.append(InversionRow(n, *flags))
    return rows
