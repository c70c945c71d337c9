import pytest

from app.algebra.monomial import ExtMonomial
from app.grassmann.tower import TowerConfig
from app.steenrod.a2_zero import build_constraint_system, candidate, candidate_count, verify_a2_zero


def test_no_candidates_at_t3():
    cfg = TowerConfig(t=3)
    assert candidate_count(cfg) == 0
    report = verify_a2_zero(cfg)
    assert report.details == "no candidate monomials"


def test_t4_system():
    cfg = TowerConfig(t=4)
    system = build_constraint_system(cfg)
    assert system.unknowns == (1, 2)
    assert system.candidates == (ExtMonomial(1, 3, 3, 4), ExtMonomial(1, 0, 5, 4))
    assert system.sq2_unknowns == (2,)
    assert system.sq1_kernel().shape == (1, 2)
    assert system.kernel_dim() == 0


def test_candidates_have_degree_of_a_squared():
    for t in range(3, 9):
        cfg = TowerConfig(t=t)
        for k in range(1, candidate_count(cfg) + 1):
            assert candidate(cfg, k).degree == 2 ** (t + 1) - 2


@pytest.mark.parametrize("t", range(3, 11))
def test_a_squared_is_zero(t):
    report = verify_a2_zero(TowerConfig(t=t))
    assert report.check == "a2.zero"
    assert report.t == t
