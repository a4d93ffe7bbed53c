"""
Pydantic models for input files and machine-readable reports.

Matrices are nested row lists.  Input entries are ints or rational strings such
as ``"-1/2"``; output entries are always strings.  Shapes are taken from the
declared ranks, so an empty list is a valid matrix with zero rows.
"""

from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, Field, model_validator

from paracyclic.constructions.algebra import AlgebraSpec
from paracyclic.core.errors import ShapeMismatch
from paracyclic.homology.groups import HomologyGroup
from paracyclic.linalg import CoefficientRing, Matrix
from paracyclic.modules.classify import DegreeWitness
from paracyclic.modules.duplicial import (
    DKDecomposition,
    DuchainComplex,
    Element,
    TruncatedDuplicialModule,
)
from paracyclic.modules.report import IdentityCheck, IdentityReport

Entry = int | str
MatrixData = list[list[Entry]]


def to_matrix(ring: CoefficientRing, data: MatrixData, rows: int, cols: int, label: str) -> Matrix:
    if len(data) != rows or any(len(r) != cols for r in data):
        found = f"{len(data)}x{len(data[0]) if data else 0}"
        raise ShapeMismatch(f"{label}: expected {rows}x{cols}, found {found}")
    return Matrix.from_rows(ring, data, cols)


def from_matrix(matrix: Matrix) -> MatrixData:
    rows: MatrixData = [[x for x in row] for row in matrix.to_strings()]
    return rows


# ---------------------------------------------------------------------------
# Input files
# ---------------------------------------------------------------------------


class ModuleFile(BaseModel):
    ring: str = "Q"
    n_max: int = Field(ge=0)
    ranks: list[int]
    face: list[list[MatrixData]]
    degen: list[list[MatrixData]]
    t: Optional[list[Optional[MatrixData]]] = None
    t_inv: Optional[list[Optional[MatrixData]]] = None
    name: str = "module"

    @model_validator(mode="after")
    def _lengths(self) -> ModuleFile:
        if len(self.ranks) != self.n_max + 1:
            raise ValueError(f"ranks must list degrees 0..{self.n_max}")
        if len(self.face) != self.n_max + 1 or len(self.degen) != self.n_max:
            raise ValueError(f"face needs {self.n_max + 1} lists and degen {self.n_max}")
        return self

    def to_module(self) -> TruncatedDuplicialModule:
        ring = CoefficientRing.parse(self.ring)
        r = self.ranks
        face = tuple(
            tuple(
                to_matrix(ring, m, r[n - 1], r[n], f"face[{n}][{i}]")
                for i, m in enumerate(self.face[n])
            )
            if n
            else ()
            for n in range(self.n_max + 1)
        )
        degen = tuple(
            tuple(to_matrix(ring, m, r[n + 1], r[n], f"degen[{n}][{i}]") for i, m in enumerate(ds))
            for n, ds in enumerate(self.degen)
        )

        def optional(maps: list[Optional[MatrixData]] | None, label: str) -> tuple:
            if not maps:
                return ()
            return tuple(
                None if m is None else to_matrix(ring, m, r[n], r[n], f"{label}[{n}]")
                for n, m in enumerate(maps)
            )

        return TruncatedDuplicialModule(
            ring=ring,
            n_max=self.n_max,
            ranks=tuple(r),
            face=face,
            degen=degen,
            t=optional(self.t, "t"),
            t_inv=optional(self.t_inv, "t_inv"),
            name=self.name,
        )

    @classmethod
    def from_module(cls, M: TruncatedDuplicialModule) -> ModuleFile:
        def optional(maps: tuple[Matrix | None, ...]) -> list[Optional[MatrixData]] | None:
            return [None if m is None else from_matrix(m) for m in maps] if maps else None

        return cls(
            ring=str(M.ring),
            n_max=M.n_max,
            ranks=list(M.ranks),
            face=[[from_matrix(m) for m in fs] for fs in M.face],
            degen=[[from_matrix(m) for m in ds] for ds in M.degen],
            t=optional(M.t),
            t_inv=optional(M.t_inv),
            name=M.name,
        )


class DuchainFile(BaseModel):
    """``b`` lists b_1..b_{n_max}, a leading b_0 entry is accepted.

    ``d`` lists d_0..d_{n_max-1}; leaving it empty means d vanishes.
    """

    ring: str = "Q"
    n_max: int = Field(ge=0)
    ranks: list[int]
    b: list[MatrixData] = Field(default_factory=list)
    d: list[MatrixData] = Field(default_factory=list)
    d_vanishes: Optional[bool] = None
    name: str = "duchain"

    @model_validator(mode="after")
    def _lengths(self) -> DuchainFile:
        if len(self.ranks) != self.n_max + 1:
            raise ValueError(f"ranks must list degrees 0..{self.n_max}")
        if len(self.b) not in (self.n_max, self.n_max + 1):
            raise ValueError(f"b must list b_1..b_{self.n_max}")
        if len(self.d) not in (0, self.n_max):
            raise ValueError(f"d must list d_0..d_{self.n_max - 1} or be empty")
        return self

    def to_duchain(self) -> DuchainComplex:
        ring = CoefficientRing.parse(self.ring)
        r = self.ranks
        bs = self.b[1:] if len(self.b) == self.n_max + 1 else self.b
        b = {n: to_matrix(ring, m, r[n - 1], r[n], f"b[{n}]") for n, m in enumerate(bs, start=1)}
        d = {n: to_matrix(ring, m, r[n + 1], r[n], f"d[{n}]") for n, m in enumerate(self.d)}
        vanishes = self.d_vanishes
        if vanishes is None:
            vanishes = all(m.is_zero() for m in d.values())
        return DuchainComplex.from_maps(ring, r, b, d, d_vanishes=vanishes, name=self.name)


class AlgebraFile(BaseModel):
    ring: str = "Q"
    dim: int = Field(ge=1)
    unit: list[Entry]
    mult: list[list[list[Entry]]]
    automorphism: Optional[list[list[Entry]]] = None
    name: str = "algebra"
    n_max: int = Field(default=3, ge=0)

    @model_validator(mode="after")
    def _dim(self) -> AlgebraFile:
        if len(self.unit) != self.dim:
            raise ValueError(f"unit must have {self.dim} entries")
        return self

    def to_spec(self) -> AlgebraSpec:
        ring = CoefficientRing.parse(self.ring)
        return AlgebraSpec.build(ring, self.unit, self.mult, self.automorphism, name=self.name)


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------


class IdentityEntryModel(BaseModel):
    identity: str
    degree: int
    status: str
    witness: Optional[MatrixData] = None
    detail: str = ""
    advisory: bool = False
    flag: str = ""

    @classmethod
    def of(cls, entry: IdentityCheck) -> IdentityEntryModel:
        return cls(
            identity=entry.identity,
            degree=entry.degree,
            status=entry.status.value,
            witness=from_matrix(entry.witness) if entry.witness is not None else None,
            detail=entry.detail,
            advisory=entry.advisory,
            flag=entry.flag,
        )


class IdentityReportModel(BaseModel):
    module: str
    ring: str
    passed: bool
    counts: dict[str, int]
    entries: list[IdentityEntryModel]

    @classmethod
    def from_report(
        cls, M: TruncatedDuplicialModule, report: IdentityReport
    ) -> IdentityReportModel:
        return cls(
            module=M.name,
            ring=str(M.ring),
            passed=report.passed,
            counts=report.status_counts(),
            entries=[IdentityEntryModel.of(e) for e in report.entries],
        )


class HomologyGroupModel(BaseModel):
    degree: int
    free_rank: int
    torsion: list[int] = Field(default_factory=list)

    @classmethod
    def of(cls, group: HomologyGroup) -> HomologyGroupModel:
        return cls(degree=group.degree, free_rank=group.free_rank, torsion=list(group.torsion))


class HomologyReportModel(BaseModel):
    module: str
    ring: str
    complex: str
    weight: Optional[int] = None
    window: Optional[list[int]] = None
    groups: list[HomologyGroupModel]
    normalized: Optional[list[HomologyGroupModel]] = None
    agrees: Optional[bool] = None


class ComponentModel(BaseModel):
    key: list[int]
    degree: int
    coords: list[str]


class DecompositionModel(BaseModel):
    module: str
    degree: int
    element: list[str]
    components: list[ComponentModel]

    @classmethod
    def from_decomposition(
        cls, M: TruncatedDuplicialModule, x: Element, decomposition: DKDecomposition
    ) -> DecompositionModel:
        return cls(
            module=M.name,
            degree=decomposition.degree,
            element=x.format(M.ring),
            components=[
                ComponentModel(key=list(key), degree=comp.degree, coords=comp.format(M.ring))
                for key, comp in decomposition.ordered()
            ],
        )


class OperatorModel(BaseModel):
    module: str
    op: str
    degree: int
    rows: int
    cols: int
    entries: list[list[str]]

    @classmethod
    def of(cls, M: TruncatedDuplicialModule, op: str, degree: int, matrix: Matrix) -> OperatorModel:
        return cls(
            module=M.name,
            op=op,
            degree=degree,
            rows=matrix.rows,
            cols=matrix.cols,
            entries=matrix.to_strings(),
        )


class DegreeWitnessModel(BaseModel):
    degree: int
    t_invertible: Optional[bool]
    T_identity: Optional[bool]
    kappa_N_invertible: Optional[bool]
    pi_N_invertible: Optional[bool]
    pi_N_identity: Optional[bool]

    @classmethod
    def of(cls, witness: DegreeWitness) -> DegreeWitnessModel:
        return cls.model_validate(witness, from_attributes=True)


class BuildSummaryModel(BaseModel):
    module: str
    ring: str
    n_max: int
    ranks: list[int]
    normalized_ranks: list[int]
    kind: str
    witnesses: list[DegreeWitnessModel] = Field(default_factory=list)
