"""
Options and plumbing shared by every subcommand.

  resolve_module   --builtin / --input / --ring / --max-degree / --twist → module
  engine_errors    EngineError → exit code (2 malformed, 3 failure, 4 unsupported)
  require_valid    relation check run before any derived computation
  emit             rich table or pydantic JSON to stdout or --output
"""

from __future__ import annotations

from collections.abc import Callable, Iterator
from contextlib import contextmanager
from enum import Enum
from pathlib import Path
from typing import Annotated, Optional

import typer
from pydantic import BaseModel
from rich import box
from rich.console import Console
from rich.table import Table

from paracyclic.constructions.builtins import DUCHAIN_FILE, default_registry
from paracyclic.core.config import EngineConfig
from paracyclic.core.errors import (
    DegreeOutOfRange,
    EngineError,
    MalformedInput,
    MissingExtraDegeneracy,
    NotInvertible,
    TNotAvailable,
    UnsupportedRing,
)
from paracyclic.core.logging import get_logger
from paracyclic.formats.loader import FileKind, load_module
from paracyclic.linalg import CoefficientRing, Matrix
from paracyclic.modules.duplicial import TruncatedDuplicialModule
from paracyclic.modules.relations import validate_relations

log = get_logger(__name__)

console = Console()

EXIT_MALFORMED = 2
EXIT_FAILED = 3
EXIT_UNSUPPORTED = 4


class OutputFormat(str, Enum):
    TABLE = "table"
    STRUCTURED = "structured"


# ---------------------------------------------------------------------------
# Shared options
# ---------------------------------------------------------------------------

BuiltinOpt = Annotated[
    Optional[str],
    typer.Option("--builtin", "-b", help="Built-in module name (see `paracyclic build --list`)"),
]
InputOpt = Annotated[
    Optional[Path],
    typer.Option("--input", "-i", help="Module, duchain or algebra file (YAML or JSON)"),
]
RingOpt = Annotated[
    Optional[str],
    typer.Option("--ring", "-r", help="Coefficient ring: Z | Q | Z/m", show_default=False),
]
MaxDegreeOpt = Annotated[
    Optional[int],
    typer.Option("--max-degree", "-n", min=0, help="Truncation degree N_max", show_default=False),
]
TwistOpt = Annotated[
    Optional[str],
    typer.Option("--twist", help="Scalar u for scalar-twisted-u", show_default=False),
]
FormatOpt = Annotated[
    Optional[OutputFormat],
    typer.Option("--format", "-f", help="table | structured", show_default=False),
]
OutputOpt = Annotated[
    Optional[Path],
    typer.Option("--output", "-o", help="Write the report here instead of stdout"),
]
WorkersOpt = Annotated[
    Optional[int],
    typer.Option("--workers", "-w", min=1, help="Threads for identity checks", show_default=False),
]


# ---------------------------------------------------------------------------
# Errors
# ---------------------------------------------------------------------------

_UNSUPPORTED = (
    UnsupportedRing,
    DegreeOutOfRange,
    TNotAvailable,
    NotInvertible,
    MissingExtraDegeneracy,
)


def exit_code(exc: EngineError) -> int:
    if isinstance(exc, _UNSUPPORTED):
        return EXIT_UNSUPPORTED
    if isinstance(exc, ValueError):
        return EXIT_MALFORMED
    return EXIT_FAILED


@contextmanager
def engine_errors() -> Iterator[None]:
    try:
        yield
    except EngineError as exc:
        log.error("%s", exc)
        raise typer.Exit(exit_code(exc)) from exc


# ---------------------------------------------------------------------------
# Module resolution
# ---------------------------------------------------------------------------


def resolve_module(
    builtin: str | None,
    input_: Path | None,
    ring: str | None,
    max_degree: int | None,
    twist: str | None,
    config: EngineConfig | None = None,
) -> TruncatedDuplicialModule:
    """The module named on the command line; flags override the config."""
    config = config or EngineConfig()
    if builtin == DUCHAIN_FILE:
        if input_ is None:
            raise MalformedInput(f"--builtin {DUCHAIN_FILE} needs --input FILE")
        explicit = CoefficientRing.parse(ring) if ring else None
        return load_module(input_, ring=explicit, n_max=max_degree, kind=FileKind.DUCHAIN)
    if builtin is not None and input_ is not None:
        raise MalformedInput("--builtin and --input are mutually exclusive")
    if input_ is not None:
        explicit = CoefficientRing.parse(ring) if ring else None
        return load_module(input_, ring=explicit, n_max=max_degree)
    if builtin is None:
        raise MalformedInput("one of --builtin or --input is required")
    n_max = config.max_degree if max_degree is None else max_degree
    return default_registry().build(
        builtin, CoefficientRing.parse(ring or config.ring), n_max, twist or config.twist
    )


def require_valid(M: TruncatedDuplicialModule, workers: int = 1) -> None:
    """Stop with exit 3 unless every checkable relation holds."""
    report = validate_relations(M, workers)
    if report.passed:
        return
    for entry in report.failures():
        log.error(
            "%s: %s fails at degree %d %s", M.name, entry.identity, entry.degree, entry.detail
        )
    raise typer.Exit(EXIT_FAILED)


# ---------------------------------------------------------------------------
# Output
# ---------------------------------------------------------------------------


def new_table(*columns: str) -> Table:
    table = Table(box=box.ROUNDED, show_header=True, header_style="bold cyan")
    for name in columns:
        table.add_column(name)
    return table


def matrix_table(matrix: Matrix) -> Table:
    table = Table(box=box.SIMPLE, show_header=False)
    for _ in range(matrix.cols):
        table.add_column(justify="right")
    for row in matrix.to_strings():
        table.add_row(*row)
    return table


def emit(
    model: BaseModel,
    render: Callable[[Console], None],
    fmt: OutputFormat | None,
    output: Path | None,
    config: EngineConfig | None = None,
) -> None:
    """Write *model* as JSON or let *render* draw it on a console."""
    config = config or EngineConfig()
    chosen = fmt or OutputFormat(config.output_format)
    if chosen is OutputFormat.STRUCTURED:
        text = model.model_dump_json(indent=2)
        if output is None:
            typer.echo(text)
        else:
            output.write_text(text + "\n", encoding="utf-8")
        return
    if output is None:
        render(console)
        return
    with output.open("w", encoding="utf-8") as fh:
        render(Console(file=fh, width=120, no_color=True))
