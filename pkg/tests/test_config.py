import pytest
from pydantic import ValidationError

from app.config import get_engine_config
from app.grassmann.tower import TowerConfig


def test_defaults(monkeypatch):
    for name in ("GROEBNER_BUDGET", "GRASSMANN_T_CAP", "BASIS_BUDGET", "WBAR_MAX_K", "WBAR_MAX_R", "LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)
    cfg = get_engine_config()
    assert cfg.groebner_budget == 1_000_000
    assert cfg.t_cap == 20
    assert cfg.log_level == "INFO"


def test_env_overrides(monkeypatch):
    monkeypatch.setenv("GROEBNER_BUDGET", "5_000")
    monkeypatch.setenv("LOG_LEVEL", "debug")
    cfg = get_engine_config()
    assert cfg.groebner_budget == 5000
    assert cfg.log_level == "DEBUG"


@pytest.mark.parametrize("raw", ["abc", "0", "-3"])
def test_bad_values(monkeypatch, raw):
    monkeypatch.setenv("BASIS_BUDGET", raw)
    with pytest.raises(ValueError):
        get_engine_config()


def test_tower_cap(monkeypatch):
    monkeypatch.setenv("GRASSMANN_T_CAP", "3")
    with pytest.raises(ValidationError):
        TowerConfig(t=4)
    assert TowerConfig(t=3).total_dim == 14


def test_tower_properties():
    cfg = TowerConfig(t=4)
    assert (cfg.n, cfg.dim_manifold, cfg.deg_a, cfg.imp_top_degree, cfg.total_dim) == (16, 39, 15, 24, 70)
    with pytest.raises(ValidationError):
        TowerConfig(t=1)
