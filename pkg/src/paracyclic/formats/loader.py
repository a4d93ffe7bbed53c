"""
Reading module, duchain and algebra files.

Files are YAML (JSON is valid YAML).  The kind is detected from the keys:
``face`` → module, ``b`` → duchain, ``mult`` → algebra.  Every parse or
schema failure surfaces as :class:`MalformedInput`.
"""

from __future__ import annotations

from enum import Enum
from pathlib import Path
from typing import Any

import yaml
from pydantic import BaseModel, ValidationError

from paracyclic.constructions.algebra import (
    AlgebraSpec,
    algebra_cyclic_module,
    twisted_paracyclic_module,
)
from paracyclic.constructions.reconstruction import duchain_to_duplicial
from paracyclic.core.errors import (
    InvalidDuchain,
    MalformedInput,
    ShapeMismatch,
)
from paracyclic.core.logging import get_logger
from paracyclic.formats.models import AlgebraFile, DuchainFile, ModuleFile
from paracyclic.linalg import CoefficientRing
from paracyclic.modules.duplicial import DuchainComplex, TruncatedDuplicialModule

log = get_logger(__name__)


class FileKind(str, Enum):
    MODULE = "module"
    DUCHAIN = "duchain"
    ALGEBRA = "algebra"


def load_document(path: Path) -> dict[str, Any]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise MalformedInput(f"cannot read {path}: {exc}") from exc
    try:
        doc = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise MalformedInput(f"{path} is not valid YAML/JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise MalformedInput(f"{path} must contain a mapping at top level")
    log.debug("loaded %s (%d keys)", path, len(doc))
    return doc


def detect_kind(doc: dict[str, Any]) -> FileKind:
    if "face" in doc:
        return FileKind.MODULE
    if "mult" in doc:
        return FileKind.ALGEBRA
    if "b" in doc or "d" in doc:
        return FileKind.DUCHAIN
    raise MalformedInput("cannot tell the file kind: expected 'face', 'b'/'d' or 'mult' keys")


def _parse(model: type[BaseModel], doc: dict[str, Any], path: Path | str) -> Any:
    try:
        return model.model_validate(doc)
    except ValidationError as exc:
        raise MalformedInput(f"{path}: {exc.error_count()} schema error(s)\n{exc}") from exc


def _with_ring(doc: dict[str, Any], ring: CoefficientRing | None) -> dict[str, Any]:
    """A --ring flag overrides the file's ring; entries are reparsed in it."""
    if ring is None:
        return doc
    return {**doc, "ring": str(ring)}


def read_duchain(doc: dict[str, Any], path: Path | str = "<duchain>") -> DuchainComplex:
    model: DuchainFile = _parse(DuchainFile, doc, path)
    try:
        return model.to_duchain()
    except (ShapeMismatch, InvalidDuchain) as exc:
        raise MalformedInput(f"{path}: {exc}") from exc


def read_algebra(doc: dict[str, Any], path: Path | str = "<algebra>") -> AlgebraSpec:
    model: AlgebraFile = _parse(AlgebraFile, doc, path)
    return model.to_spec()


def read_module(doc: dict[str, Any], path: Path | str = "<module>") -> TruncatedDuplicialModule:
    model: ModuleFile = _parse(ModuleFile, doc, path)
    try:
        return model.to_module()
    except ShapeMismatch as exc:
        raise MalformedInput(f"{path}: {exc}") from exc


def load_module(
    path: Path,
    *,
    ring: CoefficientRing | None = None,
    n_max: int | None = None,
    kind: FileKind | None = None,
) -> TruncatedDuplicialModule:
    """Build a module from any supported file.

    Duchain files go through the reconstruction functor and algebra files
    through the (twisted) tensor module; ``n_max`` truncates those two and
    may lower a module file's own n_max.
    """
    doc = _with_ring(load_document(path), ring)
    kind = kind or detect_kind(doc)
    log.debug("%s read as a %s file", path, kind.value)
    if kind is FileKind.DUCHAIN:
        V = read_duchain(doc, path)
        return duchain_to_duplicial(V, n_max if n_max is not None else V.n_max)
    if kind is FileKind.ALGEBRA:
        model: AlgebraFile = _parse(AlgebraFile, doc, path)
        A = model.to_spec()
        top = n_max if n_max is not None else model.n_max
        if A.automorphism is None:
            return algebra_cyclic_module(A, top)
        return twisted_paracyclic_module(A, top)
    M = read_module(doc, path)
    if n_max is not None and n_max > M.n_max:
        raise MalformedInput(f"{path} stops at degree {M.n_max}; --max-degree {n_max} is higher")
    return M if n_max is None else M.truncated(n_max)


def dump_module(M: TruncatedDuplicialModule) -> dict[str, Any]:
    return ModuleFile.from_module(M).model_dump(exclude_none=True)
