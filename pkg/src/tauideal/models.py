"""Request/response models for the service layer and CLI.

Every response carries a versioned ``schema`` field.  JSON is emitted
through ``to_json`` (aliases on, stable field order, no timestamps), so
identical inputs always serialize to identical bytes.
"""

from __future__ import annotations

from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

SCHEMA_VERSION = "tauideal.v1"


def to_json(model: BaseModel, exclude=None) -> str:
    return model.model_dump_json(indent=2, by_alias=True, exclude=exclude)


class _Base(BaseModel):
    model_config = ConfigDict(populate_by_name=True, extra="forbid")


# ---------------------------------------------------------------- requests


class RingRequest(_Base):
    char: int
    ext_degree: int = 1
    modulus: Optional[str] = None
    vars: List[str]
    order: Literal["grevlex", "lex"] = "grevlex"


class ComputeRequest(RingRequest):
    poly: str
    e: int = 1
    degree_guard: int = 512
    budget: Optional[int] = None


class AugmentRequest(ComputeRequest):
    line: str


class RestrictRequest(ComputeRequest):
    line: str
    eliminate: Optional[str] = None


class ScanSettings(_Base):
    mode: Literal["enumerate", "sample"] = "enumerate"
    samples: Optional[int] = None
    seed: int = 0
    filter: Optional[str] = None
    jobs: int = 1
    include_rows: bool = False


class ScanRequest(ComputeRequest, ScanSettings):
    pass


class CexRequest(_Base):
    family: Literal["dim4", "lines"]
    char: int
    ext_degree: int = 1
    modulus: Optional[str] = None
    n: int = 3
    seed: int = 0
    degree_guard: int = 512
    budget: Optional[int] = None
    scan: Optional[ScanSettings] = None


class ChartRequest(RingRequest):
    poly: str
    chart: str
    e: int = 1
    degree_guard: int = 512
    budget: Optional[int] = None


class Dim2Request(ScanRequest):
    pass


# ---------------------------------------------------------------- responses


class FieldInfo(_Base):
    char: int
    ext_degree: int
    order: int
    modulus: Optional[str] = None


class ComputeResponse(_Base):
    schema_version: str = Field(default=SCHEMA_VERSION, alias="schema")
    field: FieldInfo
    vars: List[str]
    term_order: str
    poly: str
    e: int
    generators: List[str]


class AugmentResponse(_Base):
    schema_version: str = Field(default=SCHEMA_VERSION, alias="schema")
    field: FieldInfo
    vars: List[str]
    poly: str
    e: int
    line: str
    equal: bool
    containment_ok: bool
    witness: Optional[str]
    tau_generators: List[str]
    product_generators: List[str]


class RestrictResponse(_Base):
    schema_version: str = Field(default=SCHEMA_VERSION, alias="schema")
    field: FieldInfo
    vars: List[str]
    poly: str
    e: int
    line: str
    eliminated: str
    chart_vars: List[str]
    equal: bool
    witness: Optional[str]
    witness_side: Optional[str]
    image_generators: List[str]
    intrinsic_generators: List[str]


class TallyModel(_Base):
    tested: int
    both_equal: int
    augmentation_fail_only: int
    restriction_fail_only: int
    both_fail: int
    degenerate: int


class VerdictModel(_Base):
    hyperplane: str
    pattern: str
    augmentation_equal: bool
    augmentation_witness: Optional[str]
    restriction_equal: Optional[bool]
    restriction_witness: Optional[str]
    restriction_witness_side: Optional[str]
    eliminated: Optional[str]
    degenerate: bool


class ScanResponse(_Base):
    schema_version: str = Field(default=SCHEMA_VERSION, alias="schema")
    field: FieldInfo
    vars: List[str]
    poly: str
    e: int
    mode: str
    seed: int
    filter: str
    budget: int
    requested: Optional[int]
    total: int
    tally: TallyModel
    by_pattern: Dict[str, TallyModel]
    failures: List[VerdictModel]
    rows: Optional[List[VerdictModel]] = None


class DetectionModel(_Base):
    applicable: bool
    reason: str
    common_degree: Optional[int]
    span_dim: Optional[int]
    prediction: Optional[str]


class CexResponse(_Base):
    schema_version: str = Field(default=SCHEMA_VERSION, alias="schema")
    family: str
    field: FieldInfo
    vars: List[str]
    poly: str
    e: int
    slices: List[str]
    lines: Optional[List[str]]
    tau_generators: List[str]
    independence_ok: bool
    detection: DetectionModel
    scan: Optional[ScanResponse]


class ChartResponse(_Base):
    schema_version: str = Field(default=SCHEMA_VERSION, alias="schema")
    field: FieldInfo
    vars: List[str]
    poly: str
    chart: str
    e: int
    chart_vars: List[str]
    generators: List[str]


class HealthResponse(_Base):
    schema_version: str = Field(default=SCHEMA_VERSION, alias="schema")
    status: str = "ok"
    version: str
