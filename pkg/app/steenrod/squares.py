from __future__ import annotations

import logging
import random
from functools import lru_cache
from typing import Optional

from app.algebra.monomial import ExtMonomial, Monomial
from app.algebra.parity import binom_mod2
from app.algebra.polynomial import ExtPolynomial, Polynomial
from app.groebner.engine import reduce
from app.grassmann.cohomology import CohClass, basis_in_degree
from app.grassmann.generators import claimed_gb
from app.grassmann.tower import TowerConfig
from app.utils.verification import CheckReport, expect

logger = logging.getLogger(__name__)

W2 = Monomial(1, 0)
W3 = Monomial(0, 1)


class IndeterminateResult(ArithmeticError):
    """The value depends on Sq^j(a), which is only known up to classes of the w2/w3 part."""


def _maybe_normalize(p: Polynomial[Monomial], cfg: Optional[TowerConfig]) -> Polynomial[Monomial]:
    if cfg is None:
        return p
    return reduce(p, claimed_gb(cfg))


def sq1(p: Polynomial[Monomial], cfg: Optional[TowerConfig] = None) -> Polynomial[Monomial]:
    """Sq^1(w2^b w3^c) = b w2^{b-1} w3^{c+1}, extended additively."""
    out = Polynomial(Monomial(m.b - 1, m.c + 1) for m in p if m.b % 2)
    return _maybe_normalize(out, cfg)


def sq2(p: Polynomial[Monomial], cfg: Optional[TowerConfig] = None) -> Polynomial[Monomial]:
    """Sq^2(w2^b w3^c) = (b+c) w2^{b+1} w3^c + binom(b,2) w2^{b-2} w3^{c+2}, extended additively."""
    terms = []
    for m in p:
        if (m.b + m.c) % 2:
            terms.append(Monomial(m.b + 1, m.c))
        if binom_mod2(m.b, 2):
            terms.append(Monomial(m.b - 2, m.c + 2))
    return _maybe_normalize(Polynomial(terms), cfg)


def sq(j: int, p: Polynomial[Monomial], cfg: Optional[TowerConfig] = None) -> Polynomial[Monomial]:
    if j == 1:
        return sq1(p, cfg)
    if j == 2:
        return sq2(p, cfg)
    raise ValueError(f"only Sq^1 and Sq^2 are supported, got Sq^{j}")


# Wu formulas on the generators
_WU = {
    (1, W2): Polynomial((W3,)),
    (1, W3): Polynomial(),
    (2, W2): Polynomial((Monomial(2, 0),)),
    (2, W3): Polynomial((Monomial(1, 1),)),
}


@lru_cache(maxsize=None)
def _cartan_monomial(j: int, b: int, c: int) -> Polynomial[Monomial]:
    if j == 0:
        return Polynomial((Monomial(b, c),))
    if b == 0 and c == 0:
        return Polynomial()
    x = W2 if b else W3
    q = Monomial(b - 1, c) if b else Monomial(0, c - 1)
    x_poly = Polynomial((x,))
    q_poly = Polynomial((q,))
    sq1_q = _cartan_monomial(1, q.b, q.c)
    if j == 1:
        return _WU[(1, x)] * q_poly + x_poly * sq1_q
    sq2_q = _cartan_monomial(2, q.b, q.c)
    return _WU[(2, x)] * q_poly + _WU[(1, x)] * sq1_q + x_poly * sq2_q


def sq_cartan_oracle(j: int, p: Polynomial[Monomial]) -> Polynomial[Monomial]:
    """Sq^j from the Cartan formula by peeling one generator at a time, seeded only by Wu."""
    if j not in (1, 2):
        raise ValueError(f"only Sq^1 and Sq^2 are supported, got Sq^{j}")
    out: Polynomial[Monomial] = Polynomial()
    for m in p:
        out = out + _cartan_monomial(j, m.b, m.c)
    return out


def sq1_a_in_w_part(cfg: TowerConfig) -> bool:
    """Sq^1(a) lies in degree 2^t, where the basis has no a-carrying monomial."""
    return all(m.r == 0 for m in basis_in_degree(cfg, cfg.deg_a + 1))


def _certify(cfg: TowerConfig, j: int, m: Monomial, wu_axiom: bool) -> Optional[str]:
    """None when every Sq^j(a)-term attached to a*m vanishes, else the reason it may not."""
    top = cfg.imp_top_degree
    if not sq1_a_in_w_part(cfg):
        return "Sq^1(a) is not confined to the w2/w3 part"
    # Sq^2(a)*m and Sq^1(a)*Sq^1(m) share one degree
    degree = cfg.deg_a + j + m.degree
    if degree <= top:
        return f"the Sq^{j}(a) terms of Sq^{j}(a*{m}) sit in degree {degree} <= {top}"
    if j == 2 and not wu_axiom:
        # without the axiom Sq^2(a) may still carry a multiple of a*w2
        a_w2_m = ExtPolynomial((ExtMonomial(1, m.b + 1, m.c, cfg.t),), t=cfg.t)
        if CohClass.of(cfg, a_w2_m).value:
            return f"Sq^2(a)*{m} may contain a*w2*{m}, which is nonzero"
    return None


def sq_on_coh(cfg: TowerConfig, j: int, x: CohClass, *, wu_axiom: bool = False) -> CohClass:
    """
    Sq^j on a cohomology class.

    x = p0 + a*p1 with p0, p1 in the w2/w3 part. The closed forms handle p0 and the a*Sq^j(p1)
    part of the Cartan expansion; every term involving Sq^1(a) or Sq^2(a) must be certified
    zero by degree, otherwise IndeterminateResult is raised. With wu_axiom=True, Sq^2(a) is
    taken to lie in the w2/w3 part.
    """
    if j not in (1, 2):
        raise ValueError(f"only Sq^1 and Sq^2 are supported, got Sq^{j}")
    if x.t != cfg.t:
        raise ValueError(f"class belongs to t={x.t}, not t={cfg.t}")
    p0, p1 = x.split()
    for m in p1:
        reason = _certify(cfg, j, m, wu_axiom)
        if reason is not None:
            logger.warning("Refusing Sq^%s on a*%s at t=%s: %s", j, m, cfg.t, reason)
            raise IndeterminateResult(f"Sq^{j}(a*{m}) is not determined: {reason}")

    value = ExtPolynomial.lift(sq(j, p0), cfg.t) + ExtPolynomial.lift(sq(j, p1), cfg.t, r=1)
    return CohClass.of(cfg, value)


def _random_poly(rng: random.Random, max_exp: int, max_terms: int) -> Polynomial[Monomial]:
    n = rng.randint(0, max_terms)
    return Polynomial(Monomial(rng.randint(0, max_exp), rng.randint(0, max_exp)) for _ in range(n))


def verify_closed_forms(max_total: int = 64, samples: int = 10_000, seed: int = 0) -> CheckReport:
    """Closed forms against the Cartan oracle, plus Sq^1 Sq^1 = 0 and the product rules."""
    monomials = 0
    for total in range(max_total + 1):
        for b in range(total + 1):
            p = Polynomial.monomial(Monomial(b, total - b))
            expect(sq1(p) == sq_cartan_oracle(1, p), "sq.oracle", None, f"Sq^1({p})")
            expect(sq2(p) == sq_cartan_oracle(2, p), "sq.oracle", None, f"Sq^2({p})")
            monomials += 1

    rng = random.Random(seed)
    for _ in range(samples):
        p = _random_poly(rng, max_exp=12, max_terms=4)
        q = _random_poly(rng, max_exp=12, max_terms=4)
        expect(sq1(p) == sq_cartan_oracle(1, p), "sq.oracle", None, f"Sq^1({p})")
        expect(sq2(p) == sq_cartan_oracle(2, p), "sq.oracle", None, f"Sq^2({p})")
        expect(not sq1(sq1(p)), "sq.adem", None, f"Sq^1 Sq^1({p})")
        pq = p * q
        expect(sq1(pq) == sq1(p) * q + p * sq1(q), "sq.derivation", None, f"({p})*({q})")
        expect(
            sq2(pq) == sq2(p) * q + sq1(p) * sq1(q) + p * sq2(q),
            "sq.cartan",
            None,
            f"({p})*({q})",
        )
    logger.info("Steenrod closed forms agree: monomials=%s random_pairs=%s", monomials, samples)
    return CheckReport("sq.closed_forms", None, f"{monomials} monomials, {samples} random pairs")
