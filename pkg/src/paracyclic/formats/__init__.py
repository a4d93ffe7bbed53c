from paracyclic.formats.loader import (
    FileKind,
    detect_kind,
    dump_module,
    load_document,
    load_module,
    read_algebra,
    read_duchain,
    read_module,
)
from paracyclic.formats.models import AlgebraFile, DuchainFile, ModuleFile

__all__ = [
    "AlgebraFile",
    "DuchainFile",
    "FileKind",
    "ModuleFile",
    "detect_kind",
    "dump_module",
    "load_document",
    "load_module",
    "read_algebra",
    "read_duchain",
    "read_module",
]
