"""
paracyclic CLI — entry point.

Commands
--------
  paracyclic build       Build a module, validate it, report ranks and kind
  paracyclic check       Run the relation checker and the identity suite
  paracyclic decompose   Dold–Kan components of an element
  paracyclic homology    Homology of (M, b), (N(M), b), HH or the mixed complexes
  paracyclic dump        Print a named operator matrix

Exit codes: 0 success, 2 malformed input, 3 relation or identity failure,
4 unsupported ring or degree request.
"""

from typing import Annotated, Optional

import typer

from paracyclic.cli import build as build_module
from paracyclic.cli import check as check_module
from paracyclic.cli import decompose as decompose_module
from paracyclic.cli import dump as dump_module
from paracyclic.cli import homology as homology_module

app = typer.Typer(
    name="paracyclic",
    help="Exact computations with truncated duplicial, paracyclic and cyclic modules.",
    no_args_is_help=True,
    rich_markup_mode="rich",
)


@app.callback()
def _main(
    log_level: Annotated[
        Optional[str],
        typer.Option(
            "--log-level",
            "-L",
            help="Log level: TRACE, DEBUG, INFO, WARNING, ERROR",
            envvar="PARACYCLIC_LOG_LEVEL",
            show_default=False,
        ),
    ] = None,
) -> None:
    """Exact computations with truncated duplicial, paracyclic and cyclic modules."""
    from paracyclic.core.logging import setup_logging
    setup_logging(log_level.upper() if log_level else None)


app.command("build")(build_module.build)
app.command("check")(check_module.check)
app.command("decompose")(decompose_module.decompose)
app.command("homology")(homology_module.homology)
app.command("dump")(dump_module.dump)


if __name__ == "__main__":
    app()
