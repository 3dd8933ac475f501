"""Request/response models for the service and the CLI thin client.

The wire format is the contract: the CLI builds these requests, either
calls the handlers in-process or POSTs them to a running service, and
renders the responses.  Loop weights travel as grammar strings on the way
in and as canonical support objects on the way out.
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field


class FieldSpec(BaseModel):
    p: int = Field(ge=2, description="characteristic of the base field")
    k: int = Field(default=1, ge=1, description="base field is F_{p^k}")
    ambient: int = Field(default=1, ge=1,
                         description="ambient extension degree over the base field")


class EngineRequest(BaseModel):
    lie_type: str = "A1"
    field: FieldSpec
    characteristic: Literal["p", "0"] = "p"
    allow_char_mismatch: bool = False


class CGRequest(EngineRequest):
    w1: str
    w2: str
    target: Optional[str] = None
    threads: int = Field(default=1, ge=1, le=64)


class LCharRequest(EngineRequest):
    w: str
    module: Literal["simple", "weyl"] = "simple"
    over: Literal["K", "F"] = "K"


class WeylMultRequest(EngineRequest):
    w: str
    target: Optional[str] = None


class OrbitRequest(BaseModel):
    lie_type: str = "A1"
    field: FieldSpec
    lw: str


class DecomposeRequest(EngineRequest):
    module: Literal["weyl", "tensor"] = "weyl"
    w: str
    w2: Optional[str] = None
    over: Literal["K", "F"] = "K"
    threads: int = Field(default=1, ge=1, le=64)


class IrreducibleRequest(EngineRequest):
    w1: str
    w2: str


class VerifyRequest(BaseModel):
    suite: Literal["lambda", "degree", "tensor"]
    cases: Optional[int] = Field(default=None, ge=1, le=10000)
    seed: int = 0
    max_coord: Optional[int] = Field(default=None, ge=0, le=3)


class MultRow(BaseModel):
    lweight: dict
    wt: list[int]
    deg: int
    dim: int
    value: int
    method: str
    conditional: bool
    cross_checks: list


class TableResponse(BaseModel):
    lie_type: str
    field: dict
    characteristic: int
    inputs: dict
    rows: list[MultRow]
    dim_check: Optional[dict] = None
    conditional: bool = False
    char_mismatch: bool = False
    notes: list[str] = []


class LCharTerm(BaseModel):
    key: dict
    coeff: int


class LCharResponse(BaseModel):
    lie_type: str
    field: dict
    characteristic: int
    over: str
    module: str
    w: dict
    terms: list[LCharTerm]
    mass: int
    conditional: bool = False
    char_mismatch: bool = False
    notes: list[str] = []


class OrbitResponse(BaseModel):
    lie_type: str
    field: dict
    representative: dict
    members: list[dict]
    size: int
    deg: int
    indeg: int
    wt: list[int]


class IrreducibleResponse(BaseModel):
    lie_type: str
    field: dict
    characteristic: int
    w1: dict
    w2: dict
    irreducible: bool
    conditions: dict
    char_mismatch: bool = False


class VerifyResponse(BaseModel):
    suite: str
    cases: int
    failures: list
    ok: bool
