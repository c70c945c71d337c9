from __future__ import annotations

import heapq
import logging
from dataclasses import dataclass
from typing import Literal, Optional, Sequence

from app.algebra.monomial import ExtMonomial, Monomial, MonomialOrder
from app.algebra.polynomial import M, Polynomial, ZeroPolynomialError, toggle_term
from app.config import get_engine_config
from app.groebner.basis import BasisSet, SPair

logger = logging.getLogger(__name__)

Strategy = Literal["first", "largest"]


class GroebnerBudgetExceeded(RuntimeError):
    pass


class NotGroebnerError(ValueError):
    pass


class ReductionBudget:
    """Counts reduction steps across one Buchberger run and aborts past the cap."""

    def __init__(self, limit: Optional[int] = None):
        self.limit = limit if limit is not None else get_engine_config().groebner_budget
        self.steps = 0

    def charge(self, n: int = 1) -> None:
        self.steps += n
        if self.steps > self.limit:
            raise GroebnerBudgetExceeded(
                f"reduction budget of {self.limit} steps exceeded (set GROEBNER_BUDGET to raise it)"
            )


def _select_reducer(
    m: M,
    lms: Sequence[M],
    strategy: Strategy,
) -> Optional[int]:
    if strategy == "first":
        for idx, lm in enumerate(lms):
            if lm.divides(m):
                return idx
        return None
    best: Optional[int] = None
    for idx, lm in enumerate(lms):
        if lm.divides(m) and (best is None or lm > lms[best]):
            best = idx
    return best


def s_polynomial(p: Polynomial[M], q: Polynomial[M]) -> Polynomial[M]:
    """(u/LM(p))*p + (u/LM(q))*q with u = lcm(LM(p), LM(q)); symmetric over GF(2)."""
    if not p or not q:
        raise ZeroPolynomialError("S-polynomial of a zero polynomial is undefined")
    lp, lq = p.leading_monomial, q.leading_monomial
    u = lp.lcm(lq)
    return p * u.quotient(lp) + q * u.quotient(lq)


def reduce(
    p: Polynomial[M],
    basis: BasisSet[M],
    *,
    strategy: Strategy = "first",
    budget: Optional[ReductionBudget] = None,
) -> Polynomial[M]:
    """
    Full normal form of p modulo basis: no monomial of the result is divisible by any LM.

    Monomials are processed from the largest down; the reducer is the first basis member
    (in stored order) whose LM divides the current monomial, or the one with the largest
    LM when strategy="largest".
    """
    if not p or not len(basis):
        return p
    lms = basis.leading
    remaining = set(p.terms)
    irreducible: list[M] = []
    while remaining:
        m = max(remaining)
        idx = _select_reducer(m, lms, strategy)
        if idx is None:
            remaining.remove(m)
            irreducible.append(m)
            continue
        if budget is not None:
            budget.charge()
        q = m.quotient(lms[idx])
        for term in basis.polys[idx]:
            toggle_term(remaining, term * q)
    return p.like(irreducible)


def top_reduce(
    p: Polynomial[M],
    basis: BasisSet[M],
    *,
    budget: Optional[ReductionBudget] = None,
) -> Polynomial[M]:
    """Cancel leading monomials until the LM is irreducible (or p vanishes); tail untouched."""
    current = p
    lms = basis.leading
    while current:
        lm = current.leading_monomial
        idx = _select_reducer(lm, lms, "first")
        if idx is None:
            return current
        if budget is not None:
            budget.charge()
        current = current + basis.polys[idx] * lm.quotient(lms[idx])
    return current


def buchberger(
    generators: BasisSet[M],
    *,
    budget: Optional[int] = None,
) -> BasisSet[M]:
    """
    Buchberger's algorithm with a degree-ordered S-pair queue and the coprime-LM criterion.

    The output generates the same ideal and every S-polynomial of its members reduces to 0.
    """
    if not len(generators):
        raise ValueError("buchberger needs at least one nonzero generator")
    counter = ReductionBudget(budget)
    polys: list[Polynomial[M]] = list(generators.polys)
    queue: list[SPair[M]] = []

    def push_pairs(j: int) -> None:
        lm_j = polys[j].leading_monomial
        for i in range(j):
            heapq.heappush(queue, SPair(i, j, polys[i].leading_monomial.lcm(lm_j)))

    for j in range(1, len(polys)):
        push_pairs(j)

    skipped = reduced_to_zero = 0
    while queue:
        pair = heapq.heappop(queue)
        fi, fj = polys[pair.i], polys[pair.j]
        if fi.leading_monomial.is_coprime(fj.leading_monomial):
            skipped += 1
            continue
        snapshot = BasisSet(polys=tuple(polys), order=generators.order)
        h = top_reduce(s_polynomial(fi, fj), snapshot, budget=counter)
        if not h:
            reduced_to_zero += 1
            continue
        logger.debug("S(%s,%s) added LM %s", pair.i, pair.j, h.leading_monomial)
        polys.append(h)
        push_pairs(len(polys) - 1)

    logger.info(
        "Buchberger done: generators=%s basis=%s steps=%s coprime_skipped=%s zero_pairs=%s",
        len(generators),
        len(polys),
        counter.steps,
        skipped,
        reduced_to_zero,
    )
    return BasisSet(polys=tuple(polys), order=generators.order)


@dataclass(frozen=True)
class GroebnerCheck:
    """Outcome of the S-pair criterion; on failure names the first offending pair."""

    ok: bool
    pair: Optional[tuple[int, int]] = None
    remainder: Optional[Polynomial] = None

    def __bool__(self) -> bool:
        return self.ok


def is_groebner(basis: BasisSet[M]) -> GroebnerCheck:
    for j in range(len(basis)):
        for i in range(j):
            nf = reduce(s_polynomial(basis[i], basis[j]), basis)
            if nf:
                return GroebnerCheck(ok=False, pair=(i, j), remainder=nf)
    return GroebnerCheck(ok=True)


def reduce_gb(basis: BasisSet[M]) -> BasisSet[M]:
    """The unique reduced Groebner basis of the ideal, sorted by decreasing LM."""
    check = is_groebner(basis)
    if not check:
        raise NotGroebnerError(
            f"input is not a Groebner basis: S-pair {check.pair} leaves {check.remainder}"
        )
    # minimal: drop members whose LM is divisible by another member's LM
    minimal: list[Polynomial[M]] = []
    for idx, p in enumerate(basis.polys):
        lm = p.leading_monomial
        dominated = any(
            other.leading_monomial.divides(lm) and (other.leading_monomial != lm or k < idx)
            for k, other in enumerate(basis.polys)
            if k != idx
        )
        if not dominated:
            minimal.append(p)

    reduced: list[Polynomial[M]] = []
    for idx, p in enumerate(minimal):
        others = BasisSet(polys=tuple(q for k, q in enumerate(minimal) if k != idx), order=basis.order)
        reduced.append(reduce(p, others))

    out = BasisSet(polys=tuple(reduced), order=basis.order).sorted_by_lm()
    logger.debug("Reduced basis: %s -> %s members", len(basis), len(out))
    return out


def monomials_of_degree(degree: int, order: MonomialOrder, t: Optional[int] = None) -> list:
    """All monomials of the given weighted degree, in decreasing lex order."""
    if degree < 0:
        return []
    out: list = []
    if order is MonomialOrder.LEX_W2_W3:
        for c in range(degree // 3 + 1):
            rest = degree - 3 * c
            if rest % 2 == 0:
                out.append(Monomial(rest // 2, c))
    else:
        if t is None:
            raise ValueError("the extended order needs the tower parameter t")
        deg_a = 2**t - 1
        for r in range(degree // deg_a + 1):
            for m in monomials_of_degree(degree - r * deg_a, MonomialOrder.LEX_W2_W3):
                out.append(ExtMonomial.lift(m, t, r))
    out.sort(reverse=True)
    return out


def standard_monomials(basis: BasisSet[M], degree: int) -> list[M]:
    """Monomials of the given weighted degree divisible by no LM of the (Groebner) basis."""
    t = None
    if basis.order is MonomialOrder.LEX_A_W2_W3:
        if not len(basis):
            raise ValueError("cannot infer t from an empty extended basis")
        t = basis.leading[0].t
    lms = basis.leading
    return [
        m
        for m in monomials_of_degree(degree, basis.order, t)
        if not any(lm.divides(m) for lm in lms)
    ]
