from __future__ import annotations

import os
from dataclasses import dataclass

from dotenv import load_dotenv

load_dotenv()


@dataclass(frozen=True)
class EngineConfig:
    groebner_budget: int
    t_cap: int
    basis_budget: int
    wbar_max_k: int
    wbar_max_r: int
    log_level: str


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        value = int(raw.strip().replace("_", ""))
    except ValueError as e:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from e
    if value <= 0:
        raise ValueError(f"{name} must be positive, got {value}")
    return value


def get_engine_config() -> EngineConfig:
    return EngineConfig(
        groebner_budget=_env_int("GROEBNER_BUDGET", 1_000_000),
        t_cap=_env_int("GRASSMANN_T_CAP", 20),
        basis_budget=_env_int("BASIS_BUDGET", 2_000_000),
        wbar_max_k=_env_int("WBAR_MAX_K", 8),
        wbar_max_r=_env_int("WBAR_MAX_R", 512),
        log_level=os.getenv("LOG_LEVEL", "INFO").upper(),
    )
