from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field, field_validator

from app.config import get_engine_config


class TowerConfig(BaseModel):
    """The oriented Grassmannian of 3-planes in R^n for n = 2^t."""

    model_config = ConfigDict(frozen=True)

    t: int = Field(..., ge=2)

    @field_validator("t")
    @classmethod
    def _within_cap(cls, t: int) -> int:
        cap = get_engine_config().t_cap
        if t > cap:
            raise ValueError(f"t={t} exceeds the supported cap {cap} (set GRASSMANN_T_CAP)")
        return t

    @property
    def n(self) -> int:
        return 2**self.t

    @property
    def dim_manifold(self) -> int:
        return 3 * self.n - 9

    @property
    def deg_a(self) -> int:
        return self.n - 1

    @property
    def imp_top_degree(self) -> int:
        """Top degree of the w2/w3 subalgebra: 2^{t+1} - 8."""
        return 2 * self.n - 8

    @property
    def total_dim(self) -> int:
        return (self.n - 1) * (self.n - 2) // 3


def tower(t: int) -> TowerConfig:
    return TowerConfig(t=t)
