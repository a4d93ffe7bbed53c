"""paracyclic dump — print one operator matrix of a module at one degree."""

from __future__ import annotations

from collections.abc import Callable
from typing import Annotated

import typer
from rich.console import Console

from paracyclic.cli._common import (
    BuiltinOpt,
    FormatOpt,
    InputOpt,
    MaxDegreeOpt,
    OutputOpt,
    RingOpt,
    TwistOpt,
    emit,
    engine_errors,
    matrix_table,
    require_valid,
    resolve_module,
)
from paracyclic.core.config import EngineConfig
from paracyclic.formats.models import OperatorModel
from paracyclic.linalg import Matrix
from paracyclic.modules.operators import OPERATOR_NAMES, named_operator


def _render(model: OperatorModel, matrix: Matrix) -> Callable[[Console], None]:
    def render(out: Console) -> None:
        out.print(
            f"[bold]{model.op}[/bold]_{model.degree} of {model.module} "
            f"({model.rows}x{model.cols})"
        )
        if matrix.rows and matrix.cols:
            out.print(matrix_table(matrix))
        else:
            out.print("[dim]empty matrix[/dim]")

    return render


def dump(
    op: Annotated[
        str, typer.Option("--op", help=f"Operator: {', '.join(OPERATOR_NAMES)}")
    ],
    degree: Annotated[int, typer.Option("--degree", "-d", help="Source degree n")],
    index: Annotated[
        int, typer.Option("--index", help="i in p_{n,i}; ignored for other operators")
    ] = 0,
    builtin: BuiltinOpt = None,
    input_: InputOpt = None,
    ring: RingOpt = None,
    max_degree: MaxDegreeOpt = None,
    twist: TwistOpt = None,
    fmt: FormatOpt = None,
    output: OutputOpt = None,
) -> None:
    """Print the matrix of a named operator (columns are source basis vectors)."""
    with engine_errors():
        config = EngineConfig()
        M = resolve_module(builtin, input_, ring, max_degree, twist, config)
        require_valid(M, config.workers)
        matrix = named_operator(M, op, degree, index)
        model = OperatorModel.of(M, op, degree, matrix)
        emit(model, _render(model, matrix), fmt, output, config)
