"""
EngineConfig — runtime configuration for paracyclic.

Every field reads a ``PARACYCLIC_*`` environment variable, so a bare
``EngineConfig()`` reflects the environment and CLI flags override it.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from paracyclic.core.errors import MalformedInput

_FORMATS = ("table", "structured")


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name, "").strip()
    if not raw:
        return default
    try:
        return int(raw)
    except ValueError as exc:
        raise MalformedInput(f"{name} must be an integer, got {raw!r}") from exc


@dataclass
class EngineConfig:
    """Configuration shared by the CLI and the identity runner.

    Parameters
    ----------
    ring:
        Coefficient ring spec: ``"Z"``, ``"Q"`` or ``"Z/m"``.
        Defaults to ``PARACYCLIC_RING`` or ``"Q"``.
    max_degree:
        Truncation degree N_max used when building built-in modules.
    workers:
        Thread count for the identity suite; ``1`` runs sequentially.
    twist:
        The scalar u of the ``scalar-twisted-u`` built-in, as a rational string.
    output_format:
        ``"table"`` (rich) or ``"structured"`` (JSON).
    sample_seed:
        Seed for random element sampling in checks and tests.
    """

    ring: str = field(default_factory=lambda: os.environ.get("PARACYCLIC_RING", "") or "Q")
    max_degree: int = field(default_factory=lambda: _env_int("PARACYCLIC_MAX_DEGREE", 4))
    workers: int = field(default_factory=lambda: _env_int("PARACYCLIC_WORKERS", 1))
    twist: str = field(default_factory=lambda: os.environ.get("PARACYCLIC_TWIST", "") or "2")
    output_format: str = field(
        default_factory=lambda: os.environ.get("PARACYCLIC_FORMAT", "") or "table"
    )
    sample_seed: int = field(default_factory=lambda: _env_int("PARACYCLIC_SEED", 0))

    def __post_init__(self) -> None:
        if self.max_degree < 0:
            raise MalformedInput(f"max_degree must be >= 0, got {self.max_degree}")
        if self.workers < 1:
            raise MalformedInput(f"workers must be >= 1, got {self.workers}")
        if self.output_format not in _FORMATS:
            raise MalformedInput(
                f"output format must be one of {', '.join(_FORMATS)}, got {self.output_format!r}"
            )
