from typing import Dict, List, Optional

from pydantic import BaseModel, Field

from ..kirby import render_handle_list, signature
from ..models import (
    BranchedCoverDescription,
    BraidWord,
    FramedHandleComplex,
    IdentityCertificate,
    MoveLog,
    RelativeCoverDescription,
)


def signed_letters(word: BraidWord) -> List[int]:
    return [i * s for i, s in word.letters]


class FibrationRequest(BaseModel):
    """Request body carrying fibration source text."""
    source: str


class RewriteRequest(FibrationRequest):
    """Deform one separating cycle, or resolve a chain block [start, stop)."""
    deform: Optional[int] = None
    resolve: Optional[List[int]] = None


class CertificateResponse(BaseModel):
    """Global monodromy certificate."""
    digest: str
    genus: int
    mu: int
    permutation_trivial: bool
    symplectic_value: str
    action_inner: bool
    verdict: str

    @classmethod
    def from_domain(cls, digest: str, genus: int, mu: int, cert: IdentityCertificate) -> "CertificateResponse":
        return cls(
            digest=digest,
            genus=genus,
            mu=mu,
            permutation_trivial=cert.permutation_trivial,
            symplectic_value=cert.symplectic_value.value,
            action_inner=cert.action_inner,
            verdict=cert.verdict.value,
        )


class BandSchema(BaseModel):
    cycle_index: int
    endpoints: List[int]
    twist: str


class SepModelSchema(BaseModel):
    cycle_index: int
    genus: int
    enclosed: List[int]
    handles: List[int]
    sphere_square: int


class CoverDescriptionResponse(BaseModel):
    """Branched-cover description of a fibration over the sphere."""
    schema_version: int = Field(1, alias="schema")
    ambient: str
    disks: int
    bands: List[BandSchema]
    sep_models: List[SepModelSchema]
    closure_braid: List[int]
    chi_branch: int
    chi_M: int
    chi_Mprime: int
    sigma_endo: Optional[int]
    parity: Optional[str]
    blowdowns: int

    class Config:
        allow_population_by_field_name = True

    @classmethod
    def from_domain(cls, d: BranchedCoverDescription, schema_version: int = 1) -> "CoverDescriptionResponse":
        return cls(
            schema_version=schema_version,
            ambient=d.ambient.label,
            disks=d.disks,
            bands=[_band(b) for b in d.bands],
            sep_models=[_sep_model(s) for s in d.sep_models],
            closure_braid=signed_letters(d.closure_braid),
            chi_branch=d.chi_branch,
            chi_M=d.chi_m,
            chi_Mprime=d.chi_mprime,
            sigma_endo=d.sigma_endo,
            parity=d.parity.value if d.parity else None,
            blowdowns=d.blowdowns,
        )


class RelativeCoverResponse(BaseModel):
    """Branched-cover description of a fibration over the disk."""
    schema_version: int = Field(1, alias="schema")
    ambient: str
    disks: int
    bands: List[BandSchema]
    sep_models: List[SepModelSchema]
    boundary_braid: List[int]
    chi_branch: int
    chi_M0: int
    chi_Mprime: int

    class Config:
        allow_population_by_field_name = True

    @classmethod
    def from_domain(cls, d: RelativeCoverDescription, schema_version: int = 1) -> "RelativeCoverResponse":
        return cls(
            schema_version=schema_version,
            ambient=d.ambient.label,
            disks=d.disks,
            bands=[_band(b) for b in d.bands],
            sep_models=[_sep_model(s) for s in d.sep_models],
            boundary_braid=signed_letters(d.boundary_braid),
            chi_branch=d.chi_branch,
            chi_M0=d.chi_m0,
            chi_Mprime=d.chi_mprime,
        )


class MoveSchema(BaseModel):
    move: str
    targets: List[str]
    chi_before: int
    chi_after: int
    signature_before: int
    signature_after: int


def move_list(log: MoveLog) -> List[MoveSchema]:
    return [
        MoveSchema(
            move=e.move.value,
            targets=list(e.targets),
            chi_before=e.chi_before,
            chi_after=e.chi_after,
            signature_before=e.signature_before,
            signature_after=e.signature_after,
        )
        for e in log.entries
    ]


class HandleComplexResponse(BaseModel):
    """A framed handle complex as a handle list, with its invariants."""
    genus: int
    separating_genus: Optional[int]
    handle_list: str
    euler: int
    signature: int
    simplified: Optional[str] = None
    moves: List[MoveSchema] = []

    @classmethod
    def from_domain(
        cls,
        h: int,
        g: Optional[int],
        c: FramedHandleComplex,
        simplified: Optional[FramedHandleComplex] = None,
        log: Optional[MoveLog] = None,
    ) -> "HandleComplexResponse":
        return cls(
            genus=h,
            separating_genus=g,
            handle_list=render_handle_list(c),
            euler=c.euler,
            signature=signature(c),
            simplified=render_handle_list(simplified) if simplified is not None else None,
            moves=move_list(log) if log is not None else [],
        )


class RewriteResponse(BaseModel):
    """Rewritten fibration text and whether it still certifies."""
    source: str
    mu: int
    verdict: Optional[str]


class RunReport(BaseModel):
    """Everything one pipeline run produced; timings are left out of stable output."""
    schema_version: int = Field(1, alias="schema")
    digest: str
    certificate: Optional[CertificateResponse] = None
    description: Optional[CoverDescriptionResponse] = None
    relative: Optional[RelativeCoverResponse] = None
    handle_complexes: Dict[str, str] = {}
    move_logs: Dict[str, List[MoveSchema]] = {}
    timings: Dict[str, float] = {}

    class Config:
        allow_population_by_field_name = True


def stable_json(model: BaseModel, exclude=None) -> str:
    """Byte-stable JSON: aliases, sorted keys, fixed indentation."""
    return model.json(by_alias=True, exclude=exclude, sort_keys=True, indent=2) + "\n"


def _band(b) -> BandSchema:
    return BandSchema(cycle_index=b.cycle_index, endpoints=list(b.arc.endpoints), twist=b.twist)


def _sep_model(s) -> SepModelSchema:
    return SepModelSchema(
        cycle_index=s.cycle_index,
        genus=s.loop.genus,
        enclosed=list(s.loop.enclosed),
        handles=list(s.handles),
        sphere_square=s.sphere_square,
    )
