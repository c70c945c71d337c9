import pytest

from app.algebra.polynomial import ExtPolynomial, Polynomial
from app.algebra.text import parse
from app.grassmann.cohomology import CohClass
from app.grassmann.tower import TowerConfig
from app.steenrod.squares import (
    IndeterminateResult,
    sq,
    sq1,
    sq1_a_in_w_part,
    sq2,
    sq_cartan_oracle,
    sq_on_coh,
    verify_closed_forms,
)

ZERO = Polynomial()


def p(text):
    return parse(text)


@pytest.mark.parametrize(
    "j,x,expected",
    [
        (1, "w2", "w3"),
        (1, "w3", None),
        (2, "w2", "w2^2"),
        (2, "w3", "w2*w3"),
        (2, "w2*w3", None),
        (2, "w2^2", "w3^2"),
        (1, "w2^3", "w2^2*w3"),
        (2, "w3^2", None),
    ],
)
def test_closed_form_examples(j, x, expected):
    want = ZERO if expected is None else p(expected)
    assert sq(j, p(x)) == want
    assert sq_cartan_oracle(j, p(x)) == want


def test_unit_is_killed():
    assert not sq1(p("1"))
    assert not sq2(p("1"))
    assert not sq_cartan_oracle(2, p("1"))


def test_only_first_two_squares():
    with pytest.raises(ValueError):
        sq(3, p("w2"))
    with pytest.raises(ValueError):
        sq_cartan_oracle(0, p("w2"))


def test_reduction_against_the_tower():
    cfg = TowerConfig(t=3)
    assert sq1(p("w2^3")) == p("w2^2*w3")
    # w2^2*w3 is f_1 for t = 3
    assert not sq1(p("w2^3"), cfg)
    assert sq2(p("w2^2"), cfg) == p("w3^2")
    assert sq2(p("w3"), cfg) == p("w2*w3")


def test_closed_forms_against_oracle():
    report = verify_closed_forms(max_total=24, samples=300, seed=1)
    assert report.check == "sq.closed_forms"


def test_sq1_of_a_stays_in_w_part():
    for t in range(2, 8):
        assert sq1_a_in_w_part(TowerConfig(t=t))


def coh(cfg, text):
    return CohClass.of(cfg, parse(text, t=cfg.t))


def test_sq_on_w_classes():
    cfg = TowerConfig(t=3)
    assert str(sq_on_coh(cfg, 1, coh(cfg, "w2"))) == "w3"
    assert str(sq_on_coh(cfg, 2, coh(cfg, "w3"))) == "w2*w3"
    assert sq_on_coh(cfg, 1, coh(cfg, "w3")).is_zero()


def test_sq_on_a_is_indeterminate():
    cfg = TowerConfig(t=3)
    with pytest.raises(IndeterminateResult):
        sq_on_coh(cfg, 2, coh(cfg, "a"))
    with pytest.raises(IndeterminateResult):
        sq_on_coh(cfg, 1, coh(cfg, "a"))


def test_sq_with_wu_axiom():
    cfg = TowerConfig(t=3)
    assert sq_on_coh(cfg, 2, coh(cfg, "a"), wu_axiom=True).is_zero()


def test_sq1_of_a_times_class_above_top_degree():
    cfg = TowerConfig(t=3)
    assert str(sq_on_coh(cfg, 1, coh(cfg, "a*w2"))) == "a*w3"


def test_sq_on_coh_argument_checks():
    cfg = TowerConfig(t=3)
    with pytest.raises(ValueError):
        sq_on_coh(cfg, 3, coh(cfg, "w2"))
    with pytest.raises(ValueError):
        sq_on_coh(TowerConfig(t=4), 1, coh(cfg, "w2"))


def test_adem_and_cartan_on_classes():
    cfg = TowerConfig(t=4)
    x = coh(cfg, "w2^2 + w3")
    assert sq_on_coh(cfg, 1, sq_on_coh(cfg, 1, x)).is_zero()
    y = CohClass.of(cfg, ExtPolynomial.lift(sq2(p("w2^2*w3")), 4))
    assert y == sq_on_coh(cfg, 2, coh(cfg, "w2^2*w3"))


def test_closed_forms_at_full_scale():
    report = verify_closed_forms(max_total=64, samples=10_000)
    assert report.check == "sq.closed_forms"
    assert report.t is None
