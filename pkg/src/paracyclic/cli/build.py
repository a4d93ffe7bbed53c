"""
paracyclic build — construct a module, validate it and summarise its shape.

  paracyclic build --list                          List built-in modules
  paracyclic build --builtin dual-numbers -n 3     Ranks, normalized ranks, kind
  paracyclic build --input v.yaml --save m.yaml    Reconstruct and write the module file
"""

from __future__ import annotations

from collections.abc import Callable
from pathlib import Path
from typing import Annotated, Optional

import typer
import yaml
from rich.console import Console

from paracyclic.cli._common import (
    BuiltinOpt,
    FormatOpt,
    InputOpt,
    MaxDegreeOpt,
    OutputOpt,
    RingOpt,
    TwistOpt,
    console,
    emit,
    engine_errors,
    new_table,
    require_valid,
    resolve_module,
)
from paracyclic.constructions.builtins import default_registry
from paracyclic.core.config import EngineConfig
from paracyclic.core.logging import get_logger
from paracyclic.formats.loader import dump_module
from paracyclic.formats.models import BuildSummaryModel, DegreeWitnessModel
from paracyclic.modules.classify import classify_module
from paracyclic.modules.dold_kan import normalized_rank
from paracyclic.modules.duplicial import TruncatedDuplicialModule

log = get_logger(__name__)


def _summary(M: TruncatedDuplicialModule) -> BuildSummaryModel:
    normalized = [normalized_rank(M, n) for n in range(M.n_max + 1)]
    if M.is_simplicial_only:
        kind, witnesses = "simplicial", []
    else:
        classification = classify_module(M)
        kind = classification.kind.value
        witnesses = [DegreeWitnessModel.of(w) for w in classification.witnesses]
    return BuildSummaryModel(
        module=M.name,
        ring=str(M.ring),
        n_max=M.n_max,
        ranks=list(M.ranks),
        normalized_ranks=normalized,
        kind=kind,
        witnesses=witnesses,
    )


def _flag(value: bool | None) -> str:
    if value is None:
        return "[dim]n/a[/dim]"
    return "[green]yes[/green]" if value else "[red]no[/red]"


def _render(summary: BuildSummaryModel) -> Callable[[Console], None]:
    def render(out: Console) -> None:
        out.print(
            f"[bold]{summary.module}[/bold] over {summary.ring}, "
            f"N_max = {summary.n_max}, kind: [bold]{summary.kind}[/bold]"
        )
        witnesses = {w.degree: w for w in summary.witnesses}
        table = new_table(
            "n", "rank M_n", "rank N_n", "t inv", "T = 1", "κ|N inv", "π|N inv", "π|N = 1"
        )
        for n in range(summary.n_max + 1):
            w = witnesses.get(n)
            flags = [None] * 5 if w is None else [
                w.t_invertible,
                w.T_identity,
                w.kappa_N_invertible,
                w.pi_N_invertible,
                w.pi_N_identity,
            ]
            table.add_row(
                str(n),
                str(summary.ranks[n]),
                str(summary.normalized_ranks[n]),
                *(_flag(f) for f in flags),
            )
        out.print(table)

    return render


def _print_builtins() -> None:
    table = new_table("Name", "Description")
    for info in default_registry().all():
        table.add_row(f"[bold]{info.name}[/bold]", info.summary)
    console.print(table)


def build(
    builtin: BuiltinOpt = None,
    input_: InputOpt = None,
    ring: RingOpt = None,
    max_degree: MaxDegreeOpt = None,
    twist: TwistOpt = None,
    fmt: FormatOpt = None,
    output: OutputOpt = None,
    save: Annotated[
        Optional[Path],
        typer.Option("--save", help="Write the constructed module as a module file"),
    ] = None,
    list_builtins: Annotated[
        bool, typer.Option("--list", help="List the built-in modules and exit")
    ] = False,
) -> None:
    """Build a module, validate its relations and report ranks and kind."""
    if list_builtins:
        _print_builtins()
        raise typer.Exit()

    with engine_errors():
        config = EngineConfig()
        M = resolve_module(builtin, input_, ring, max_degree, twist, config)
        require_valid(M, config.workers)
        summary = _summary(M)
        if save is not None:
            save.write_text(yaml.safe_dump(dump_module(M), sort_keys=False), encoding="utf-8")
            log.info("wrote %s to %s", M.name, save)
        emit(summary, _render(summary), fmt, output, config)
