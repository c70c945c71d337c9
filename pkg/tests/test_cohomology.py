import pytest

from app.algebra.monomial import ExtMonomial, Monomial
from app.algebra.polynomial import ExtPolynomial, Polynomial
from app.algebra.text import parse
from app.groebner.engine import standard_monomials
from app.grassmann.cohomology import (
    BasisBudgetExceeded,
    CohClass,
    additive_basis,
    basis_count,
    basis_in_degree,
    betti_table,
    im_betti,
    in_basis,
    normal_form,
)
from app.grassmann.generators import extended_gb
from app.grassmann.tower import TowerConfig


def names(ms):
    return [str(m) for m in ms]


def test_basis_t2():
    basis = additive_basis(TowerConfig(t=2))
    assert names(basis) == ["1", "a"]


def test_basis_t3():
    basis = additive_basis(TowerConfig(t=3))
    assert len(basis) == 14
    assert names(basis.in_degree(0)) == ["1"]
    assert names(basis.in_degree(7)) == ["a"]
    assert names(basis.in_degree(8)) == ["w2*w3^2"]
    assert basis.in_degree(14) == ()
    assert names(basis.in_degree(15)) == ["a*w2*w3^2"]


def test_basis_t4_degree15():
    assert names(basis_in_degree(TowerConfig(t=4), 15)) == ["a", "w2^3*w3^3", "w3^5"]


@pytest.mark.parametrize("t", [2, 3, 4, 5])
def test_basis_agrees_with_standard_monomials(t):
    cfg = TowerConfig(t=t)
    basis = additive_basis(cfg)
    gb = extended_gb(cfg)
    for j in range(cfg.dim_manifold + 1):
        assert list(basis.in_degree(j)) == standard_monomials(gb, j), j
        assert basis_in_degree(cfg, j) == list(basis.in_degree(j))


def test_membership_rule():
    assert in_basis(ExtMonomial(1, 1, 2, 3))
    assert not in_basis(ExtMonomial(2, 0, 0, 3))
    assert not in_basis(ExtMonomial(0, 3, 0, 3))
    assert not in_basis(ExtMonomial(0, 0, 3, 3))
    basis = additive_basis(TowerConfig(t=3))
    assert ExtMonomial(0, 2, 0, 3) in basis
    assert ExtMonomial(0, 2, 1, 3) not in basis


def test_basis_count_is_total_dimension():
    for t in range(2, 13):
        cfg = TowerConfig(t=t)
        assert basis_count(t) == cfg.total_dim


def test_basis_budget():
    with pytest.raises(BasisBudgetExceeded):
        additive_basis(TowerConfig(t=4), budget=10)


def test_betti_t3():
    table = betti_table(TowerConfig(t=3))
    assert list(table.dims) == [1, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 1]
    assert table.total == 14
    assert table[-1] == 0 and table[99] == 0
    assert table.is_symmetric()


def test_betti_t4_spot_values():
    table = betti_table(TowerConfig(t=4))
    assert table.total == 70
    assert table[0] == 1 and table[1] == 0
    assert table[15] == 3
    assert table[39] == 1
    assert table.is_symmetric()


def test_betti_matches_enumeration():
    for t in range(2, 7):
        cfg = TowerConfig(t=t)
        basis = additive_basis(cfg)
        table = betti_table(cfg)
        assert list(table.dims) == [len(basis.in_degree(j)) for j in range(cfg.dim_manifold + 1)]


def test_im_betti_counts_w_part():
    cfg = TowerConfig(t=5)
    dims = im_betti(cfg)
    assert len(dims) == cfg.imp_top_degree + 1
    for j, d in enumerate(dims):
        assert d == sum(1 for m in basis_in_degree(cfg, j) if m.r == 0)


def test_betti_symmetry_for_larger_towers():
    for t in range(2, 13):
        table = betti_table(TowerConfig(t=t))
        assert table.is_symmetric(), t
        assert table.total == TowerConfig(t=t).total_dim


def test_normal_form_rejects_other_tower():
    with pytest.raises(ValueError):
        normal_form(TowerConfig(t=3), ExtPolynomial.generator_a(4))


def cls(cfg, text):
    return CohClass.of(cfg, parse(text, t=cfg.t))


def test_coh_class_ring_laws():
    cfg = TowerConfig(t=4)
    x, y, z = cls(cfg, "w2 + w3"), cls(cfg, "a + w2^2"), cls(cfg, "w3^2 + w2*w3")
    assert (x + x).is_zero()
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert CohClass.unit(cfg) * x == x
    assert (CohClass.zero(cfg) * x).is_zero()
    assert x.power(0) == CohClass.unit(cfg)
    assert x.power(3) == x * x * x


def test_a_squared_vanishes():
    for t in range(2, 6):
        cfg = TowerConfig(t=t)
        a = CohClass.of(cfg, ExtPolynomial.generator_a(t))
        assert not a.is_zero()
        assert (a * a).is_zero()


def test_fundamental_class_survives():
    cfg = TowerConfig(t=3)
    x = cls(cfg, "a") * cls(cfg, "w2") * cls(cfg, "w3^2")
    assert str(x) == "a*w2*w3^2"


def test_height_of_w3():
    for t in range(2, 6):
        cfg = TowerConfig(t=t)
        w3 = CohClass.from_w(cfg, Polynomial.monomial(Monomial(0, 1)))
        if t == 2:
            assert w3.is_zero()
            continue
        assert w3.height() == 2 ** (t - 1) - 2


def test_height_needs_positive_degree():
    cfg = TowerConfig(t=3)
    with pytest.raises(ValueError):
        CohClass.unit(cfg).height()
    with pytest.raises(ValueError):
        CohClass.zero(cfg).height()


def test_classes_from_different_towers_do_not_mix():
    with pytest.raises(ValueError):
        cls(TowerConfig(t=3), "w2") + cls(TowerConfig(t=4), "w2")


def test_split():
    cfg = TowerConfig(t=3)
    p0, p1 = cls(cfg, "a*w2 + w3^2 + a").split()
    assert p0 == parse("w3^2")
    assert p1 == parse("w2 + 1")


@pytest.mark.parametrize(
    "t,degrees,expected",
    [
        (3, [7, 8, 9, 13, 14, 15], [1, 1, 1, 1, 0, 1]),
        (4, [15, 16, 17, 30, 31, 32, 37, 38, 39], [3, 2, 2, 2, 2, 1, 1, 0, 1]),
    ],
)
def test_betti_example_groups(t, degrees, expected):
    table = betti_table(TowerConfig(t=t))
    assert [table[j] for j in degrees] == expected


BASIS_T3 = [
    "1", "w2", "w2^2",
    "w3", "w2*w3",
    "w3^2", "w2*w3^2",
    "a", "a*w2", "a*w2^2",
    "a*w3", "a*w2*w3",
    "a*w3^2", "a*w2*w3^2",
]  # fmt: skip

BASIS_T4 = [
    "1", "w2", "w2^2", "w2^3", "w2^4", "w2^5", "w2^6",
    "w3", "w2*w3", "w2^2*w3", "w2^3*w3", "w2^4*w3", "w2^5*w3",
    "w3^2", "w2*w3^2", "w2^2*w3^2", "w2^3*w3^2", "w2^4*w3^2", "w2^5*w3^2",
    "w3^3", "w2*w3^3", "w2^2*w3^3", "w2^3*w3^3",
    "w3^4", "w2*w3^4", "w2^2*w3^4", "w2^3*w3^4",
    "w3^5", "w2*w3^5", "w2^2*w3^5", "w2^3*w3^5",
    "w3^6", "w2*w3^6", "w2^2*w3^6", "w2^3*w3^6",
    "a", "a*w2", "a*w2^2", "a*w2^3", "a*w2^4", "a*w2^5", "a*w2^6",
    "a*w3", "a*w2*w3", "a*w2^2*w3", "a*w2^3*w3", "a*w2^4*w3", "a*w2^5*w3",
    "a*w3^2", "a*w2*w3^2", "a*w2^2*w3^2", "a*w2^3*w3^2", "a*w2^4*w3^2", "a*w2^5*w3^2",
    "a*w3^3", "a*w2*w3^3", "a*w2^2*w3^3", "a*w2^3*w3^3",
    "a*w3^4", "a*w2*w3^4", "a*w2^2*w3^4", "a*w2^3*w3^4",
    "a*w3^5", "a*w2*w3^5", "a*w2^2*w3^5", "a*w2^3*w3^5",
    "a*w3^6", "a*w2*w3^6", "a*w2^2*w3^6", "a*w2^3*w3^6",
]  # fmt: skip


@pytest.mark.parametrize("t, listed", [(3, BASIS_T3), (4, BASIS_T4)])
def test_basis_matches_written_out_list(t, listed):
    cfg = TowerConfig(t=t)
    assert len(listed) == cfg.total_dim
    expected = {parse(s, t=t).leading_monomial for s in listed}
    assert len(expected) == len(listed)
    assert set(additive_basis(cfg)) == expected
