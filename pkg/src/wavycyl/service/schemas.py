"""Pydantic request/response models for the HTTP service.

Field declaration order defines the record column order used by both the
JSON and CSV renderings on the client side.
"""

from __future__ import annotations

from pydantic import BaseModel, Field


class TableRequest(BaseModel):
    two_nu: list[int] = Field(min_length=1)


class TableRow(BaseModel):
    two_nu: int
    n: int
    j_nu: float
    rho_nu: float
    t_nu: float
    t_lower: float | None = None
    t_upper: float | None = None


class TableResponse(BaseModel):
    rows: list[TableRow]


class SigmaRequest(BaseModel):
    n: int = Field(ge=1)
    t_start: float = Field(gt=0)
    t_end: float = Field(gt=0)
    samples: int = Field(ge=1, le=100_000)
    oracle: bool = False
    ode_steps: int = Field(default=6000, ge=1000)


class SigmaRow(BaseModel):
    T: float
    sigma1: float
    sigma1_ode: float | None = None
    abs_diff: float | None = None


class SigmaResponse(BaseModel):
    n: int
    rows: list[SigmaRow]


class ProfileRequest(BaseModel):
    n: int = Field(ge=1)
    s: float
    periods: int = Field(ge=1)
    samples_per_period: int = Field(ge=8)


class ProfileRow(BaseModel):
    t: float
    radius: float


class ProfileResponse(BaseModel):
    n: int
    s: float
    period: float
    rows: list[ProfileRow]


class DelaunayRequest(BaseModel):
    sigma: float = Field(gt=0, le=1)
    samples: int = Field(ge=2, le=1_000_000)


class DelaunayRow(BaseModel):
    t: float
    y: float
    z: float


class DelaunayResponse(BaseModel):
    sigma: float
    y_min: float
    y_max: float
    period: float
    rows: list[DelaunayRow]


class VerifyPdeRequest(BaseModel):
    n: int = Field(ge=1)
    k: int = Field(ge=1)
    T: float | None = Field(default=None, gt=0)
    eps: float = Field(default=1e-3, ge=1e-4, le=1e-2)
    nr: int = Field(default=96, ge=16)
    nt: int = Field(default=96, ge=16)


class VerifyPdeResponse(BaseModel):
    n: int
    k: int
    T: float
    eps: float
    nr: int
    nt: int
    lam_straight: float
    lam_perturbed: float
    closed_form: float
    pde_estimate: float
    rel_error: float | None = None
    mode_coefficients: dict[int, float]


class CheckRequest(BaseModel):
    suite: str = "all"


class CheckRow(BaseModel):
    suite: str
    name: str
    passed: bool
    detail: str


class CheckResponse(BaseModel):
    ok: bool
    results: list[CheckRow]


class HealthResponse(BaseModel):
    status: str
    version: str
