"""Request/response models for the HTTP service."""

from __future__ import annotations

from pydantic import BaseModel, Field, model_validator


class CountRequest(BaseModel):
    modes: int = Field(ge=1)
    order: int = Field(ge=2)


class CountResponse(BaseModel):
    count: int


class SignaturesResponse(BaseModel):
    signatures: list[list[int]]


class OrderHistogramResponse(BaseModel):
    by_order: dict[int, int]


class BracketRequest(BaseModel):
    modes: int = Field(ge=1)
    p: str
    q: str


class PolynomialResponse(BaseModel):
    result: str


class KernelRequest(BaseModel):
    modes: int = Field(ge=1)
    omega: list[float]
    monomial: str
    tol: float = Field(default=1e-9, ge=0)


class KernelResponse(BaseModel):
    in_kernel: bool
    weight: list[int]


class ResonanceRequest(BaseModel):
    omega: list[float] = Field(min_length=1)
    bound: int = Field(ge=1)
    tol: float = Field(default=1e-9, gt=0)


class ResonanceResponse(BaseModel):
    found: bool
    vector: list[int] | None


class ModelPayload(BaseModel):
    """A molecule model, either by builtin name or as model-file text."""

    builtin: str | None = None
    model_text: str | None = None
    delta: float | None = None

    @model_validator(mode="after")
    def _exactly_one_source(self) -> "ModelPayload":
        if (self.builtin is None) == (self.model_text is None):
            raise ValueError("provide exactly one of 'builtin' or 'model_text'")
        return self


class EnergyRequest(BaseModel):
    model: ModelPayload
    state: list[int]


class EnergyResponse(BaseModel):
    energy: float


class SpectrumRequest(BaseModel):
    model: ModelPayload
    cutoff: float
    box: list[int] | None = None


class LevelOut(BaseModel):
    state: list[int]
    energy: float


class SpectrumResponse(BaseModel):
    modes: int
    count: int
    max_energy: float | None
    levels: list[LevelOut]


class ValidateRequest(BaseModel):
    model: ModelPayload


class FindingOut(BaseModel):
    severity: str
    message: str


class ValidateResponse(BaseModel):
    clean: bool
    findings: list[FindingOut]


class CheckRequest(BaseModel):
    modes: int = Field(ge=1)
    order: int = Field(ge=2)
    seed: int = 0
    samples: int = Field(default=40, ge=1, le=1000)


class CheckResultOut(BaseModel):
    name: str
    passed: bool
    detail: str


class CheckResponse(BaseModel):
    all_passed: bool
    results: list[CheckResultOut]


class HealthResponse(BaseModel):
    status: str
    version: str
