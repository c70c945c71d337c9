from __future__ import annotations

from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

Status = Literal["pass", "fail", "skip"]


class _Schema(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    def to_json(self) -> str:
        return self.model_dump_json(by_alias=True, exclude_none=True)


class BettiPayload(_Schema):
    t: int
    n: int
    dim_manifold: int = Field(..., alias="dimManifold")
    total_dim: int = Field(..., alias="totalDim")
    betti: List[int]


class BasisPayload(_Schema):
    t: int
    degrees: Dict[str, List[str]]


class GbPayload(_Schema):
    t: int
    basis: List[str]
    leading_monomials: List[str] = Field(..., alias="leadingMonomials")
    verified: Optional[bool] = None


class CheckEntry(_Schema):
    id: str
    t: int
    status: Status
    witness: Optional[str] = None
    # wall time is logged, never serialized, so reports stay byte-identical
    seconds: float = Field(default=0.0, exclude=True)


class VerificationReport(_Schema):
    suite: str
    checks: List[CheckEntry] = Field(default_factory=list)
    status: Status = "pass"

    @classmethod
    def collect(cls, suite: str, checks: List[CheckEntry]) -> VerificationReport:
        status: Status = "fail" if any(c.status == "fail" for c in checks) else "pass"
        return cls(suite=suite, checks=checks, status=status)
