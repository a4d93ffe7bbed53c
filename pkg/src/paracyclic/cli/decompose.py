"""paracyclic decompose — Dold–Kan components of one element."""

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
    new_table,
    require_valid,
    resolve_module,
)
from paracyclic.core.config import EngineConfig
from paracyclic.core.errors import MalformedInput
from paracyclic.formats.models import DecompositionModel
from paracyclic.linalg import vector
from paracyclic.modules.dold_kan import dk_decompose
from paracyclic.modules.duplicial import Element, TruncatedDuplicialModule


def parse_element(M: TruncatedDuplicialModule, degree: int, text: str) -> Element:
    """``"c0,c1,…"`` in the basis of M_degree."""
    M.check_degree(degree)
    parts = [p.strip() for p in text.split(",")] if text.strip() else []
    if any(not p for p in parts):
        raise MalformedInput(f"empty coordinate in element {text!r}")
    element = Element(degree, vector(M.ring, parts))
    element.check(M)
    return element


def _key(key: tuple[int, ...]) -> str:
    return "s_" + ",".join(map(str, key)) if key else "(normalized)"


def _render(model: DecompositionModel) -> Callable[[Console], None]:
    def render(out: Console) -> None:
        out.print(
            f"[bold]{model.module}[/bold]: x = ({', '.join(model.element)}) "
            f"in degree {model.degree}"
        )
        table = new_table("Key", "Degree", "Component")
        for c in model.components:
            table.add_row(_key(tuple(c.key)), str(c.degree), "(" + ", ".join(c.coords) + ")")
        out.print(table)

    return render


def decompose(
    element: Annotated[
        str, typer.Option("--element", "-e", help="Coordinates c0,c1,… of the element")
    ],
    degree: Annotated[int, typer.Option("--degree", "-d", help="Degree of the element")],
    builtin: BuiltinOpt = None,
    input_: InputOpt = None,
    ring: RingOpt = None,
    max_degree: MaxDegreeOpt = None,
    twist: TwistOpt = None,
    fmt: FormatOpt = None,
    output: OutputOpt = None,
) -> None:
    """Split an element into degeneracy words applied to normalized components."""
    with engine_errors():
        config = EngineConfig()
        M = resolve_module(builtin, input_, ring, max_degree, twist, config)
        require_valid(M, config.workers)
        x = parse_element(M, degree, element)
        model = DecompositionModel.from_decomposition(M, x, dk_decompose(M, degree, x))
        emit(model, _render(model), fmt, output, config)
