import pytest

from app.algebra.monomial import ExtMonomial, Monomial, WMonomial
from app.algebra.polynomial import Polynomial
from app.algebra.text import parse
from app.grassmann.generators import (
    claimed_gb,
    extended_gb,
    extended_gb_with,
    f_poly,
    g_poly,
    g_poly_general,
    g_poly_rec,
    lm_f_closed_form,
    reduce_mod_w1,
    to_w2w3,
    wbar,
    wbar_rec,
)
from app.grassmann.tower import TowerConfig


@pytest.mark.parametrize(
    "r,expected",
    [
        (0, "1"),
        (1, "0"),
        (2, "w2"),
        (3, "w3"),
        (4, "w2^2"),
        (5, "0"),
        (6, "w2^3 + w3^2"),
        (7, "w2^2*w3"),
        (8, "w2^4 + w2*w3^2"),
        (9, "w3^3"),
    ],
)
def test_g_poly_small_values(r, expected):
    want = Polynomial() if expected == "0" else parse(expected)
    assert g_poly(r) == want


def test_closed_form_matches_recurrence():
    for r in range(200):
        assert g_poly(r) == g_poly_rec(r), r


@pytest.mark.parametrize(
    "r",
    [
        2**12 - 1,
        2**12,
        3 * 2**12,
        pytest.param(2**16 - 1, marks=pytest.mark.slow),
        pytest.param(2**16, marks=pytest.mark.slow),
        pytest.param(3 * 2**16, marks=pytest.mark.slow),
    ],
)
def test_closed_form_matches_recurrence_far_out(r):
    closed = g_poly(r)
    assert closed.is_homogeneous()
    assert closed == g_poly_rec(r)


def test_g_poly_is_homogeneous():
    for r in range(2, 120):
        p = g_poly(r)
        assert not p or p.degrees() == {r}


def test_g_vanishes_just_below_the_tower():
    w2 = Monomial(1, 0)
    for t in range(2, 17):
        assert not g_poly(2**t - 3)
        assert g_poly(2**t) == g_poly(2**t - 2) * w2


def test_negative_index_rejected():
    with pytest.raises(ValueError):
        g_poly(-1)
    with pytest.raises(ValueError):
        g_poly_rec(-1)


def test_wbar_examples():
    assert wbar(2, 3) == Polynomial([WMonomial((2, 0, 0)), WMonomial((0, 1, 0))])
    assert wbar(3, 3) == Polynomial([WMonomial((3, 0, 0)), WMonomial((0, 0, 1))])
    assert wbar(0, 2) == Polynomial([WMonomial.one(2)])


def test_wbar_matches_recurrence():
    for k in (1, 2, 3, 4):
        for r in range(40):
            assert wbar(r, k) == wbar_rec(r, k), (r, k)


def test_wbar_argument_checks():
    with pytest.raises(ValueError):
        wbar(-1, 3)
    with pytest.raises(ValueError):
        wbar(3, 0)
    with pytest.raises(ValueError):
        wbar(3, 99)


def test_w1_free_part_of_wbar_is_g():
    for r in range(60):
        reduced = reduce_mod_w1(wbar(r, 3))
        assert reduced == g_poly_general(r, 3)
        assert to_w2w3(reduced) == g_poly(r)


def test_to_w2w3_rejects_w1():
    with pytest.raises(ValueError):
        to_w2w3(wbar(2, 3))


def test_f_poly_examples():
    assert f_poly(TowerConfig(t=3), 0) == parse("w2^3 + w3^2")
    assert f_poly(TowerConfig(t=4), 3) == parse("w3^7")
    with pytest.raises(ValueError):
        f_poly(TowerConfig(t=3), 3)


def test_leading_monomials_follow_closed_form():
    for t in range(2, 17):
        cfg = TowerConfig(t=t)
        basis = claimed_gb(cfg)
        assert len(basis) == t
        for i in range(t):
            assert basis[i].leading_monomial == lm_f_closed_form(cfg, i)
        assert basis[t - 1] == Polynomial.monomial(Monomial(0, 2 ** (t - 1) - 1))


def test_extended_basis_appends_a_squared():
    cfg = TowerConfig(t=3)
    basis = extended_gb(cfg)
    assert len(basis) == 4
    assert basis.leading[-1] == ExtMonomial(2, 0, 0, 3)


def test_extended_basis_with_a_correction_keeps_leading_a_squared():
    cfg = TowerConfig(t=3)
    basis = extended_gb_with(cfg, parse("w2^2*w3"))
    assert basis.leading[-1] == ExtMonomial(2, 0, 0, 3)
    assert ExtMonomial(1, 2, 1, 3) in basis[-1]
    with pytest.raises(ValueError):
        extended_gb_with(cfg, parse("w2"))
