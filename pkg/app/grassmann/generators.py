from __future__ import annotations

import logging
from functools import lru_cache
from typing import Iterator, Optional

from app.algebra.monomial import ExtMonomial, Monomial, MonomialOrder, WMonomial
from app.algebra.parity import binom_mod2, multinomial_mod2
from app.algebra.polynomial import ExtPolynomial, Polynomial
from app.config import get_engine_config
from app.groebner.basis import BasisSet
from app.grassmann.tower import TowerConfig

logger = logging.getLogger(__name__)


def _check_wbar_args(r: int, k: int) -> None:
    cfg = get_engine_config()
    if r < 0 or k < 1:
        raise ValueError(f"wbar needs r >= 0 and k >= 1, got r={r}, k={k}")
    if k > cfg.wbar_max_k or r > cfg.wbar_max_r:
        raise ValueError(
            f"wbar(r={r}, k={k}) exceeds the supported range k <= {cfg.wbar_max_k}, r <= {cfg.wbar_max_r}"
        )


def _odd_exponent_vectors(r: int, k: int, lowest: int) -> Iterator[tuple[int, ...]]:
    """
    Exponent vectors (a_1..a_k) with a_i = 0 for i < lowest and sum i*a_i = r whose
    multinomial [a_lowest, ..., a_k] is odd.

    An odd multinomial needs pairwise disjoint binary digits, so branches sharing a bit
    with an exponent already chosen are cut early.
    """
    exps = [0] * k

    def walk(i: int, rest: int, used: int) -> Iterator[tuple[int, ...]]:
        if i < lowest:
            if rest == 0 and multinomial_mod2(exps[lowest - 1 :]):
                yield tuple(exps)
            return
        if i == lowest:
            if rest % i:
                return
            candidates = [rest // i]
        else:
            candidates = range(rest // i + 1)
        for a in candidates:
            if a & used:
                continue
            exps[i - 1] = a
            yield from walk(i - 1, rest - i * a, used | a)
        exps[i - 1] = 0

    yield from walk(k, r, 0)


def wbar(r: int, k: int) -> Polynomial[WMonomial]:
    """Degree-r dual Stiefel-Whitney polynomial in w1..wk, from the multinomial formula."""
    _check_wbar_args(r, k)
    return Polynomial(WMonomial(e) for e in _odd_exponent_vectors(r, k, lowest=1))


def wbar_rec(r: int, k: int) -> Polynomial[WMonomial]:
    """Same polynomial from wbar_s = w1*wbar_{s-1} + ... + wk*wbar_{s-k}, wbar_0 = 1."""
    _check_wbar_args(r, k)
    gens = [WMonomial.generator(i, k) for i in range(1, k + 1)]
    window: list[Polynomial[WMonomial]] = [Polynomial((WMonomial.one(k),))]
    for s in range(1, r + 1):
        acc: Polynomial[WMonomial] = Polynomial()
        for i in range(1, min(k, s) + 1):
            acc = acc + window[-i] * gens[i - 1]
        window.append(acc)
        if len(window) > k:
            window.pop(0)
    return window[-1]


def reduce_mod_w1(p: Polynomial[WMonomial]) -> Polynomial[WMonomial]:
    return p.filter(lambda m: m.exps[0] == 0)


def to_w2w3(p: Polynomial[WMonomial]) -> Polynomial[Monomial]:
    """Read a w1-free polynomial in w1, w2, w3 as a polynomial in w2, w3."""
    out = []
    for m in p:
        if len(m.exps) != 3 or m.exps[0]:
            raise ValueError(f"{m} is not a monomial in w2 and w3 only")
        out.append(Monomial(m.exps[1], m.exps[2]))
    return Polynomial(out)


def g_poly_general(r: int, k: int) -> Polynomial[WMonomial]:
    """g_r for k classes: the w1-free part of wbar_r, enumerated directly."""
    if k < 2:
        raise ValueError(f"g_poly_general needs k >= 2, got {k}")
    _check_wbar_args(r, k)
    return Polynomial(WMonomial(e) for e in _odd_exponent_vectors(r, k, lowest=2))


@lru_cache(maxsize=4096)
def g_poly(r: int) -> Polynomial[Monomial]:
    """g_r = sum over 2b + 3c = r of binom(b+c, b) w2^b w3^c."""
    if r < 0:
        raise ValueError(f"g_poly needs r >= 0, got {r}")
    terms = []
    for c in range(r // 3 + 1):
        rest = r - 3 * c
        if rest % 2:
            continue
        b = rest // 2
        if binom_mod2(b + c, b):
            terms.append(Monomial(b, c))
    return Polynomial(terms)


def g_poly_rec(r: int) -> Polynomial[Monomial]:
    """g_r from g_{s+3} = w2*g_{s+1} + w3*g_s with g_0 = 1, g_1 = 0, g_2 = w2."""
    if r < 0:
        raise ValueError(f"g_poly_rec needs r >= 0, got {r}")
    w2, w3 = Monomial(1, 0), Monomial(0, 1)
    window = [Polynomial((Monomial(),)), Polynomial(), Polynomial((w2,))]
    if r < 3:
        return window[r]
    for _ in range(3, r + 1):
        nxt = window[1] * w2 + window[0] * w3
        window = [window[1], window[2], nxt]
    return window[2]


def _f_raw(t: int, i: int) -> Polynomial[Monomial]:
    # also defined for i = t, where it vanishes
    return g_poly(2**t - 3 + 2**i)


def _check_index(cfg: TowerConfig, i: int) -> None:
    if not 0 <= i <= cfg.t - 1:
        raise ValueError(f"index i={i} out of range 0..{cfg.t - 1} for t={cfg.t}")


def f_poly(cfg: TowerConfig, i: int) -> Polynomial[Monomial]:
    _check_index(cfg, i)
    return _f_raw(cfg.t, i)


def lm_f_closed_form(cfg: TowerConfig, i: int) -> Monomial:
    _check_index(cfg, i)
    return Monomial(2 ** (cfg.t - 1) - 2**i, 2**i - 1)


def claimed_gb(cfg: TowerConfig) -> BasisSet[Monomial]:
    """{f_0, ..., f_{t-1}} in the lex order w2 > w3."""
    return BasisSet(
        polys=tuple(f_poly(cfg, i) for i in range(cfg.t)),
        order=MonomialOrder.LEX_W2_W3,
    )


def extended_gb_with(cfg: TowerConfig, p: Optional[Polynomial[Monomial]] = None) -> BasisSet[ExtMonomial]:
    """{f_0, ..., f_{t-1}, a^2 + P*a}; P must be zero or homogeneous of degree 2^t - 1."""
    if p is not None and p:
        if p.degrees() != {cfg.deg_a}:
            raise ValueError(f"P must be homogeneous of degree {cfg.deg_a}, got degrees {sorted(p.degrees())}")
    a = ExtPolynomial.generator_a(cfg.t)
    last = a * a
    if p is not None and p:
        last = last + ExtPolynomial.lift(p, cfg.t, r=1)
    polys = [ExtPolynomial.lift(f_poly(cfg, i), cfg.t) for i in range(cfg.t)]
    polys.append(last)
    return BasisSet(polys=tuple(polys), order=MonomialOrder.LEX_A_W2_W3)


@lru_cache(maxsize=64)
def _extended_gb_cached(t: int) -> BasisSet[ExtMonomial]:
    return extended_gb_with(TowerConfig(t=t))


def extended_gb(cfg: TowerConfig) -> BasisSet[ExtMonomial]:
    """The Groebner basis of the cohomology ideal, with a^2 = 0."""
    return _extended_gb_cached(cfg.t)
