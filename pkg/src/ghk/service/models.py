"""Pydantic request and response models for the HTTP service."""
from __future__ import annotations

from typing import Any, List, Optional, Tuple

from pydantic import BaseModel, Field


class CommandResponse(BaseModel):
    command: str
    inputs: dict
    outputs: dict
    warnings: List[str]


class ExpandRequest(BaseModel):
    n: int = Field(ge=0)
    base: int = Field(ge=1)


class ShiftRequest(BaseModel):
    n: int = Field(ge=0)
    base: int = Field(ge=1)
    a: int
    b: int


class GrowthRequest(BaseModel):
    n: int = Field(ge=0)
    deg: int = Field(ge=1)


class BgMinRequest(BaseModel):
    a: int = Field(ge=1)
    deg: int = Field(ge=2)


class BoundRequest(BaseModel):
    h: int = Field(ge=1)
    e: int = Field(ge=3)
    i: int = Field(ge=1)


class EnvelopeRequest(BaseModel):
    r: int = Field(ge=1)
    e: int = Field(ge=3)


class MidRequest(BaseModel):
    r: int = Field(ge=1)
    e: int = Field(ge=4)


class ThresholdRequest(BaseModel):
    e: int = Field(ge=4)
    i: int = Field(ge=1)


class E0Request(BaseModel):
    r: int = Field(ge=2)
    i: int = Field(ge=1)


class EmaxRequest(BaseModel):
    emax: int = Field(ge=3)


class DecomposeRequest(BaseModel):
    r: int = Field(ge=1)
    e: int = Field(ge=3)


class ConstructRequest(BaseModel):
    r: int = Field(ge=1)
    e: int = Field(ge=3)


class HVectorRequest(BaseModel):
    h: List[int]


class LexGrowthRequest(BaseModel):
    h: int = Field(ge=1)
    deg: int = Field(ge=1)
    vars: int = Field(ge=1)


class LexLevelRequest(BaseModel):
    h: List[int]
    vars: int = Field(ge=1)


class DualFormModel(BaseModel):
    num_vars: int = Field(ge=1)
    degree: int = Field(ge=1)
    terms: List[Tuple[List[int], int]]

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "num_vars": self.num_vars,
            "degree": self.degree,
            "terms": [[list(exp), coeff] for exp, coeff in self.terms],
        }


class CatalecticantRequest(BaseModel):
    form: DualFormModel
    prime: Optional[int] = None


class CompressedRequest(BaseModel):
    r: int = Field(ge=1)
    e: int = Field(ge=1)


class LimitRequest(BaseModel):
    e: int = Field(ge=3)
    i: int = Field(ge=1)


class TableRequest(BaseModel):
    e: int = Field(ge=3)
    i: int = Field(ge=1)
    rmax: int = Field(ge=100)
    per_decade: int = Field(default=4, ge=1)
    jobs: Optional[int] = Field(default=None, ge=1)
