"""
paracyclic check — run the relation checker and the identity suite.

Exit 0 when every counted identity passes, 3 otherwise.  The identity suite
only runs once the defining relations hold; a module failing them is
reported on its relations alone.
"""

from __future__ import annotations

from collections.abc import Callable
from typing import Annotated

import typer
from rich.console import Console

from paracyclic.cli._common import (
    EXIT_FAILED,
    BuiltinOpt,
    FormatOpt,
    InputOpt,
    MaxDegreeOpt,
    OutputOpt,
    RingOpt,
    TwistOpt,
    WorkersOpt,
    emit,
    engine_errors,
    matrix_table,
    new_table,
    resolve_module,
)
from paracyclic.core.config import EngineConfig
from paracyclic.core.logging import get_logger
from paracyclic.formats.models import IdentityReportModel
from paracyclic.modules.identities import check_identity_suite
from paracyclic.modules.relations import validate_relations
from paracyclic.modules.report import CheckStatus, IdentityReport

log = get_logger(__name__)

_STATUS_STYLE = {
    CheckStatus.PASS: "green",
    CheckStatus.FAIL: "bold red",
    CheckStatus.SKIPPED: "dim",
}


def _render(title: str, report: IdentityReport, verbose: bool) -> Callable[[Console], None]:
    def render(out: Console) -> None:
        table = new_table("Identity", "n", "Status", "Note")
        for e in report.entries:
            if not verbose and e.status is CheckStatus.PASS and not e.flag:
                continue
            style = _STATUS_STYLE[e.status]
            note = " ".join(part for part in (e.detail, e.flag) if part)
            if e.advisory:
                note = f"(advisory) {note}".strip()
            table.add_row(e.identity, str(e.degree), f"[{style}]{e.status.value}[/{style}]", note)
        out.print(f"[bold]{title}[/bold]")
        if table.row_count:
            out.print(table)
        counts = report.status_counts()
        verdict = "[green]PASS[/green]" if report.passed else "[bold red]FAIL[/bold red]"
        out.print(
            f"{verdict}  pass={counts['pass']} fail={counts['fail']} "
            f"skipped={counts['skipped']} advisory={counts['advisory']}"
        )
        for e in report.failures():
            if e.witness is not None:
                out.print(f"\nwitness for {e.identity} at n={e.degree} ({e.detail}): lhs - rhs =")
                out.print(matrix_table(e.witness))

    return render


def check(
    builtin: BuiltinOpt = None,
    input_: InputOpt = None,
    ring: RingOpt = None,
    max_degree: MaxDegreeOpt = None,
    twist: TwistOpt = None,
    workers: WorkersOpt = None,
    fmt: FormatOpt = None,
    output: OutputOpt = None,
    relations_only: Annotated[
        bool, typer.Option("--relations-only", help="Skip the derived identity suite")
    ] = False,
    verbose: Annotated[
        bool, typer.Option("--verbose", "-v", help="List passing entries too")
    ] = False,
) -> None:
    """Check the defining relations and every operator identity exactly."""
    with engine_errors():
        config = EngineConfig()
        M = resolve_module(builtin, input_, ring, max_degree, twist, config)
        threads = workers or config.workers
        report = validate_relations(M, threads)
        if report.passed and not relations_only and M.is_duplicial:
            report = report.merged(check_identity_suite(M, threads))
        elif not report.passed:
            log.warning("%s violates its defining relations; identity suite not run", M.name)

        title = f"{M.name} over {M.ring}, N_max = {M.n_max}"
        emit(IdentityReportModel.from_report(M, report), _render(title, report, verbose),
             fmt, output, config)
        log.info("%s: %d entries checked, %s", M.name, len(report),
                 "all pass" if report.passed else "failures found")
    if not report.passed:
        raise typer.Exit(EXIT_FAILED)
