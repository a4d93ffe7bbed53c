"""
paracyclic homology — homology of the complexes attached to a module.

  --complex full         (M, b)
  --complex normalized   (N(M), b)
  --complex compare      both, with their agreement
  --complex hochschild   (M, b) of an algebra module, i.e. HH_•
  --complex bB | dD      truncated mixed complexes, weight cutoff --weight
"""

from __future__ import annotations

from collections.abc import Callable
from enum import Enum
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
from paracyclic.formats.models import HomologyGroupModel, HomologyReportModel
from paracyclic.homology import (
    HomologyGroup,
    mixed_complex_homology,
    module_complex,
    normalized_vs_full_homology,
)
from paracyclic.linalg import CoefficientRing
from paracyclic.modules.duplicial import TruncatedDuplicialModule


class ComplexKind(str, Enum):
    FULL = "full"
    NORMALIZED = "normalized"
    COMPARE = "compare"
    HOCHSCHILD = "hochschild"
    BB = "bB"
    DD = "dD"


class CarrierKind(str, Enum):
    FULL = "full"
    NORMALIZED = "normalized"


def _report(
    M: TruncatedDuplicialModule, kind: ComplexKind, weight: int, carrier: CarrierKind
) -> HomologyReportModel:
    base = {"module": M.name, "ring": str(M.ring), "complex": kind.value}
    if kind in (ComplexKind.FULL, ComplexKind.HOCHSCHILD, ComplexKind.NORMALIZED):
        which = "normalized" if kind is ComplexKind.NORMALIZED else "full"
        groups = module_complex(M, which).homologies()
        return HomologyReportModel(**base, groups=[HomologyGroupModel.of(g) for g in groups])
    if kind is ComplexKind.COMPARE:
        comparison = normalized_vs_full_homology(M)
        return HomologyReportModel(
            **base,
            groups=[HomologyGroupModel.of(g) for g in comparison.full],
            normalized=[HomologyGroupModel.of(g) for g in comparison.normalized],
            agrees=comparison.agrees and comparison.homotopy_holds,
        )
    mixed = mixed_complex_homology(M, kind.value, weight, carrier.value)
    return HomologyReportModel(
        **base,
        weight=weight,
        window=list(mixed.window),
        groups=[HomologyGroupModel.of(g) for g in mixed.groups],
    )


def _format_group(ring: CoefficientRing, g: HomologyGroupModel) -> str:
    return HomologyGroup(g.degree, g.free_rank, tuple(g.torsion)).format(ring)


def _render(model: HomologyReportModel, ring: CoefficientRing) -> Callable[[Console], None]:
    def render(out: Console) -> None:
        header = f"[bold]{model.module}[/bold] over {model.ring}: {model.complex} homology"
        if model.window is not None:
            header += f", W = {model.weight}, stable window {model.window[0]}..{model.window[1]}"
        out.print(header)
        if model.normalized is None:
            table = new_table("n", "H_n")
            for g in model.groups:
                table.add_row(str(g.degree), _format_group(ring, g))
        else:
            table = new_table("n", "H_n(M)", "H_n(N(M))")
            for g, h in zip(model.groups, model.normalized):
                table.add_row(str(g.degree), _format_group(ring, g), _format_group(ring, h))
        out.print(table)
        if model.agrees is not None:
            out.print("[green]agree[/green]" if model.agrees else "[bold red]differ[/bold red]")

    return render


def homology(
    builtin: BuiltinOpt = None,
    input_: InputOpt = None,
    ring: RingOpt = None,
    max_degree: MaxDegreeOpt = None,
    twist: TwistOpt = None,
    complex_: Annotated[
        ComplexKind, typer.Option("--complex", "-c", help="Which complex to take homology of")
    ] = ComplexKind.FULL,
    weight: Annotated[
        int, typer.Option("--weight", "-W", min=0, help="Weight cutoff for bB / dD")
    ] = 1,
    carrier: Annotated[
        CarrierKind, typer.Option("--carrier", help="Carrier of the mixed complex")
    ] = CarrierKind.NORMALIZED,
    fmt: FormatOpt = None,
    output: OutputOpt = None,
) -> None:
    """Compute homology groups (ranks, and torsion over Z)."""
    with engine_errors():
        config = EngineConfig()
        M = resolve_module(builtin, input_, ring, max_degree, twist, config)
        require_valid(M, config.workers)
        model = _report(M, complex_, weight, carrier)
        emit(model, _render(model, M.ring), fmt, output, config)
