"""Evaluation of identity catalogs against a module.

An :class:`Identity` names a family of matrix equalities indexed by degree.
Each degree is evaluated independently, so a catalog can fan out over a
thread pool; the resulting report is ordered by (identity, degree)
regardless of completion order.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any

from paracyclic.core.errors import NotInvertible, ShapeMismatch, UnsupportedRing
from paracyclic.core.logging import get_logger
from paracyclic.linalg import Matrix
from paracyclic.modules.duplicial import TruncatedDuplicialModule as Module
from paracyclic.modules.report import CheckStatus, IdentityCheck, IdentityReport

log = get_logger(__name__)


class NotApplicable(Exception):
    """Raised by an instance generator whose hypotheses fail at a degree."""


Instance = tuple[str, Any, Any]


def _always(M: Module) -> bool:
    return True


def _every_degree(M: Module, n: int) -> bool:
    return True


@dataclass(frozen=True)
class Identity:
    """A family of equalities lhs == rhs.

    Parameters
    ----------
    name:
        Stable identifier used in reports.
    degrees:
        Degrees the identity is stated for, given the module.
    instances:
        Generator of ``(label, lhs, rhs)`` at a degree.
    checkable:
        Whether truncation permits evaluation at a degree; otherwise the
        entry is reported skipped.
    applies:
        Whether the identity belongs in the catalog for this module at all.
    advisory:
        Failures are recorded but do not fail the report.
    flag:
        Free-form note carried into every entry.
    """

    name: str
    degrees: Callable[[Module], Iterable[int]]
    instances: Callable[[Module, int], Iterable[Instance]]
    checkable: Callable[[Module, int], bool] = _every_degree
    applies: Callable[[Module], bool] = _always
    advisory: bool = False
    flag: str = ""


def evaluate(identity: Identity, M: Module, n: int) -> IdentityCheck:
    base = {"identity": identity.name, "degree": n, "advisory": identity.advisory,
            "flag": identity.flag}
    if not identity.checkable(M, n):
        return IdentityCheck(status=CheckStatus.SKIPPED, detail="truncation", **base)
    try:
        for label, lhs, rhs in identity.instances(M, n):
            log.trace("%s[%d] %s", identity.name, n, label)  # type: ignore[attr-defined]
            if lhs == rhs:
                continue
            witness = None
            if isinstance(lhs, Matrix) and isinstance(rhs, Matrix) and lhs.shape == rhs.shape:
                witness = lhs - rhs
            return IdentityCheck(status=CheckStatus.FAIL, witness=witness, detail=label, **base)
    except NotApplicable as exc:
        return IdentityCheck(status=CheckStatus.SKIPPED, detail=str(exc), **base)
    except UnsupportedRing as exc:
        log.warning("%s at degree %d skipped: %s", identity.name, n, exc)
        return IdentityCheck(status=CheckStatus.SKIPPED, detail=f"ring: {exc}", **base)
    except NotInvertible as exc:
        return IdentityCheck(status=CheckStatus.FAIL, detail=f"not invertible: {exc}", **base)
    except ShapeMismatch as exc:
        return IdentityCheck(status=CheckStatus.FAIL, detail=f"shape: {exc}", **base)
    return IdentityCheck(status=CheckStatus.PASS, **base)


def run_catalog(
    catalog: Sequence[Identity], M: Module, workers: int = 1
) -> IdentityReport:
    tasks = [(idn, n) for idn in catalog if idn.applies(M) for n in idn.degrees(M)]
    if workers > 1 and len(tasks) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            entries = list(pool.map(lambda task: evaluate(task[0], M, task[1]), tasks))
    else:
        entries = [evaluate(idn, M, n) for idn, n in tasks]
    report = IdentityReport.of(entries)
    log.debug("%s: %d checks, %s", M.name, len(report), report.status_counts())
    return report
