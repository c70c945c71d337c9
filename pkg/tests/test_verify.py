import pytest

from app.groebner.engine import GroebnerBudgetExceeded
from app.grassmann import cohomology
from app.grassmann.tower import TowerConfig
from app.grassmann.verify import (
    check_lower_bound_lemma,
    verify_bounds,
    verify_duality_pairing,
    verify_generalized_recurrence,
    verify_ideal_membership,
    verify_reduced_gb,
    verify_spoly_identities,
    verify_tensor_split,
)
from app.utils.verification import CheckReport, VerificationFailure, expect


@pytest.mark.parametrize("t", range(2, 9))
def test_reduced_groebner_basis(t):
    report = verify_reduced_gb(TowerConfig(t=t))
    assert report.check == "gb.reduced"
    assert report.t == t


def test_reduced_groebner_basis_respects_budget():
    with pytest.raises(GroebnerBudgetExceeded):
        verify_reduced_gb(TowerConfig(t=5), budget=1)


@pytest.mark.parametrize("t", range(2, 13))
def test_spoly_identities(t):
    verify_spoly_identities(TowerConfig(t=t))


@pytest.mark.parametrize("t", range(2, 13))
def test_bounds(t):
    report = verify_bounds(TowerConfig(t=t))
    assert str(2 ** (t + 1) - 8) in report.details


@pytest.mark.parametrize("i", range(0, 11))
def test_lower_bound_lemma(i):
    report = check_lower_bound_lemma(i, 64)
    assert report.t is None


def test_lower_bound_lemma_arguments():
    with pytest.raises(ValueError):
        check_lower_bound_lemma(-1, 4)
    with pytest.raises(ValueError):
        check_lower_bound_lemma(2, 0)


@pytest.mark.parametrize("t", range(2, 7))
def test_generalized_recurrence(t):
    verify_generalized_recurrence(TowerConfig(t=t), window=8)


@pytest.mark.parametrize("t", range(2, 6))
def test_ideal_membership(t):
    verify_ideal_membership(TowerConfig(t=t))


@pytest.mark.parametrize("t", [2, 3, 4, 5])
def test_duality_pairing(t):
    verify_duality_pairing(TowerConfig(t=t))


@pytest.mark.parametrize("t", range(2, 13))
def test_tensor_split(t):
    report = verify_tensor_split(TowerConfig(t=t))
    assert str(TowerConfig(t=t).total_dim) in report.details


@pytest.mark.parametrize("t", [3, 4, 7])
def test_tensor_split_catches_a_miscounted_degree(t, monkeypatch):
    honest = cohomology._im_betti

    def off_by_one(t_, top):
        dims = honest(t_, top)
        dims[2] += 1
        return dims

    monkeypatch.setattr(cohomology, "_im_betti", off_by_one)
    with pytest.raises(VerificationFailure) as info:
        verify_tensor_split(TowerConfig(t=t))
    assert info.value.check in {"betti.split", "betti.table"}
    assert "degree 2" in str(info.value)


def test_expect_raises_with_witness():
    expect(True, "demo", 3, "unused")
    with pytest.raises(VerificationFailure) as info:
        expect(False, "demo", 3, "w3^3 != 0")
    assert info.value.check == "demo"
    assert info.value.t == 3
    assert str(info.value) == "demo (t=3): w3^3 != 0"
    with pytest.raises(AssertionError):
        expect(False, "demo", None, "x")


def test_check_report_is_frozen():
    report = CheckReport("demo", None, "ok")
    with pytest.raises(Exception):
        report.details = "changed"
