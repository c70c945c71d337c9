"""
Verifiers for the closed-form claims about the cohomology ring.

Each verifier recomputes its claim with the generic engine, raises VerificationFailure
on the first mismatch, and returns a CheckReport summarizing what was checked.
"""
from __future__ import annotations

import logging
from typing import Optional

import numpy as np

from app.algebra.gf2_linalg import gf2_rank
from app.algebra.monomial import ExtMonomial, Monomial
from app.algebra.parity import binom_mod2
from app.algebra.polynomial import ExtPolynomial, Polynomial
from app.groebner.basis import BasisSet
from app.groebner.engine import buchberger, is_groebner, reduce, reduce_gb, s_polynomial, standard_monomials
from app.grassmann.cohomology import (
    additive_basis,
    basis_in_degree,
    betti_table,
    im_betti,
    im_part_columns,
    in_basis,
    normal_form,
)
from app.grassmann.generators import _f_raw, claimed_gb, extended_gb, g_poly, lm_f_closed_form
from app.grassmann.tower import TowerConfig
from app.utils.verification import CheckReport, expect

logger = logging.getLogger(__name__)

# degree-by-degree standard monomials of the extended basis stay cheap up to here
STANDARD_MONOMIAL_MAX_T = 6


def _w(b: int, c: int) -> Monomial:
    return Monomial(b, c)


def verify_reduced_gb(cfg: TowerConfig, *, budget: Optional[int] = None) -> CheckReport:
    t = cfg.t
    gens = BasisSet.of([g_poly(2**t - 2), g_poly(2**t - 1)])
    computed = reduce_gb(buchberger(gens, budget=budget))
    claimed = claimed_gb(cfg)

    missing = claimed.as_set() - computed.as_set()
    extra = computed.as_set() - claimed.as_set()
    expect(
        not missing and not extra,
        "gb.reduced",
        t,
        f"claimed-only={sorted(map(str, missing))} engine-only={sorted(map(str, extra))}",
    )
    violation = claimed.reducedness_violation()
    if violation is not None:
        i, j, m = violation
        expect(False, "gb.reduced", t, f"LM(f_{i}) divides {m} in f_{j}")
    for i in range(t):
        lm = claimed[i].leading_monomial
        expect(lm == lm_f_closed_form(cfg, i), "gb.leading", t, f"LM(f_{i}) = {lm}")
        if i:
            expect(claimed[i - 1].leading_monomial > lm, "gb.leading", t, f"LM(f_{i - 1}) does not exceed LM(f_{i})")
    expect(claimed[t - 1] == Polynomial.monomial(_w(0, 2 ** (t - 1) - 1)), "gb.last", t, f"f_{t - 1} = {claimed[t - 1]}")

    logger.info("Reduced Groebner basis confirmed: t=%s members=%s", t, len(claimed))
    return CheckReport("gb.reduced", t, f"{len(claimed)} members match the engine")


def verify_spoly_identities(cfg: TowerConfig) -> CheckReport:
    t = cfg.t
    f = [_f_raw(t, i) for i in range(t + 1)]
    expect(not f[t], "spoly.ft", t, f"f_t = {f[t]} is not zero")
    checked = 0

    # w3^{2^i} f_i + w2^{2^i} f_{i+1} = f_{i+2}
    for i in range(t - 1):
        lhs = f[i] * _w(0, 2**i) + f[i + 1] * _w(2**i, 0)
        expect(lhs == f[i + 2], "spoly.step", t, f"i={i}: {lhs} != f_{i + 2}")
        expect(s_polynomial(f[i], f[i + 1]) == f[i + 2], "spoly.adjacent", t, f"S(f_{i},f_{i + 1}) != f_{i + 2}")
        checked += 2

    for i in range(t):
        expect(not s_polynomial(f[i], f[i]), "spoly.diagonal", t, f"S(f_{i},f_{i}) != 0")
        for j in range(i + 1, t):
            s = s_polynomial(f[i], f[j])
            lcm = f[i].leading_monomial.lcm(f[j].leading_monomial)
            bound = _w(2 ** (t - 1) - 2**i - 1, 0)
            expect(bound < lcm, "spoly.bound", t, f"(i,j)=({i},{j}): {bound} is not below lcm {lcm}")
            total: Polynomial[Monomial] = Polynomial()
            for k in range(i + 2, j + 2):
                summand = f[k] * _w(2 ** (k - 2) - 2**i, 2**j - 2 ** (k - 1))
                if summand:
                    expect(
                        summand.leading_monomial < bound,
                        "spoly.bound",
                        t,
                        f"(i,j,k)=({i},{j},{k}): LM {summand.leading_monomial} not below {bound}",
                    )
                total = total + summand
            expect(s == total, "spoly.expansion", t, f"(i,j)=({i},{j}): S = {s}, sum = {total}")
            checked += 1

    # S(f_i, f_{j+1}) = w3^{2^j} S(f_i, f_j) + w2^{2^j - 2^i} f_{j+2} for i <= j <= t-2
    for i in range(t - 1):
        for j in range(i, t - 1):
            lhs = s_polynomial(f[i], f[j + 1])
            rhs = s_polynomial(f[i], f[j]) * _w(0, 2**j) + f[j + 2] * _w(2**j - 2**i, 0)
            expect(lhs == rhs, "spoly.shift", t, f"(i,j)=({i},{j}): {lhs} != {rhs}")
            checked += 1

    logger.info("S-polynomial identities hold: t=%s identities=%s", t, checked)
    return CheckReport("spoly.identities", t, f"{checked} identities")


def verify_bounds(cfg: TowerConfig) -> CheckReport:
    t = cfg.t
    top = cfg.imp_top_degree

    # basis-level scan of both parts
    lowest_a = min((cfg.deg_a + 3 * c for c, bound in im_part_columns(t) if bound), default=None)
    expect(lowest_a == cfg.deg_a, "bounds.a_part", t, f"lowest a-carrying basis degree is {lowest_a}")
    highest_w = max(3 * c + 2 * (bound - 1) for c, bound in im_part_columns(t) if bound)
    expect(highest_w == top, "bounds.w_part", t, f"top w2/w3 basis degree {highest_w} != {top}")

    witness = ExtMonomial(0, 2 ** (t - 2) - 1, 2 ** (t - 1) - 2, t)
    expect(witness.degree == top and in_basis(witness), "bounds.top", t, f"{witness} does not realize degree {top}")
    top_slice = [m for m in basis_in_degree(cfg, top) if m.r == 0]
    expect(top_slice == [witness], "bounds.top", t, f"w2/w3 part of degree {top} is {list(map(str, top_slice))}")
    expect(im_betti(cfg)[top] == 1, "bounds.top", t, "top w2/w3 degree is not one-dimensional")

    height = 2 ** (t - 1) - 2
    below = normal_form(cfg, ExtPolynomial.lift(Polynomial.monomial(_w(0, height)), t))
    above = normal_form(cfg, ExtPolynomial.lift(Polynomial.monomial(_w(0, height + 1)), t))
    expect(bool(below), "bounds.height", t, f"w3^{height} vanishes")
    expect(not above, "bounds.height", t, f"w3^{height + 1} = {above}")

    logger.info("Degree bounds hold: t=%s top=%s height(w3)=%s", t, top, height)
    return CheckReport("bounds", t, f"top w2/w3 degree {top}, height of w3 {height}")


def check_lower_bound_lemma(i: int, s_max: int) -> CheckReport:
    """Whenever 2b + 3c = 2^i*s - 3 with binom(b+c, c) odd, c >= 2^i - 1."""
    if i < 0 or s_max < 1:
        raise ValueError(f"need i >= 0 and s_max >= 1, got i={i}, s_max={s_max}")
    cases = 0
    for s in range(1, s_max + 1):
        r = 2**i * s - 3
        if r < 0:
            continue
        for c in range(r // 3 + 1):
            if (r - 3 * c) % 2:
                continue
            b = (r - 3 * c) // 2
            cases += 1
            if binom_mod2(b + c, c):
                expect(c >= 2**i - 1, "lemma.lower_bound", None, f"i={i} s={s} b={b} c={c}")
    logger.info("Lower-bound scan clean: i=%s s_max=%s cases=%s", i, s_max, cases)
    return CheckReport("lemma.lower_bound", None, f"i={i}: {cases} cases")


def verify_generalized_recurrence(cfg: TowerConfig, *, window: int = 16) -> CheckReport:
    """g_{r + 3*2^i} = w2^{2^i} g_{r + 2^i} + w3^{2^i} g_r."""
    t = cfg.t
    checked = 0
    for i in range(t):
        step = 2**i
        for r in range(window):
            lhs = g_poly(r + 3 * step)
            rhs = g_poly(r + step) * _w(step, 0) + g_poly(r) * _w(0, step)
            expect(lhs == rhs, "identities.recurrence", t, f"i={i} r={r}")
            checked += 1
    expect(not g_poly(2**t - 3), "identities.vanishing", t, f"g_{2**t - 3} = {g_poly(2**t - 3)}")
    expect(
        g_poly(2**t) == g_poly(2**t - 2) * _w(1, 0),
        "identities.vanishing",
        t,
        f"g_{2**t} != w2 * g_{2**t - 2}",
    )
    return CheckReport("identities.recurrence", t, f"{checked} instances")


def verify_ideal_membership(cfg: TowerConfig) -> CheckReport:
    t = cfg.t
    basis = claimed_gb(cfg)
    for r in range(2**t - 2, 2 ** (t + 1) + 1):
        nf = reduce(g_poly(r), basis)
        expect(not nf, "identities.membership", t, f"g_{r} leaves {nf}")
    check = is_groebner(basis)
    expect(check.ok, "identities.membership", t, f"S-pair {check.pair} leaves {check.remainder}")
    return CheckReport("identities.membership", t, f"g_r in the ideal for r = {2**t - 2}..{2 ** (t + 1)}")


def verify_duality_pairing(cfg: TowerConfig) -> CheckReport:
    """Every cup-product pairing H^j x H^{D-j} -> H^D is perfect."""
    t = cfg.t
    top = cfg.dim_manifold
    fundamental = ExtMonomial(1, 2 ** (t - 2) - 1, 2 ** (t - 1) - 2, t)
    basis = additive_basis(cfg)
    expect(basis.in_degree(top) == (fundamental,), "duality.top", t, f"top degree spanned by {basis.in_degree(top)}")

    for j in range(top // 2 + 1):
        rows, cols = basis.in_degree(j), basis.in_degree(top - j)
        expect(len(rows) == len(cols), "duality.dims", t, f"dim H^{j} = {len(rows)}, dim H^{top - j} = {len(cols)}")
        if not rows:
            continue
        matrix = np.zeros((len(rows), len(cols)), dtype=np.uint8)
        for x, left in enumerate(rows):
            for y, right in enumerate(cols):
                product = normal_form(cfg, ExtPolynomial((left * right,), t=t))
                matrix[x, y] = 1 if fundamental in product else 0
        rank = gf2_rank(matrix)
        expect(rank == len(rows), "duality.rank", t, f"degree {j}: rank {rank} < {len(rows)}")
    return CheckReport("duality.pairing", t, f"{len(basis)} basis elements paired")


def _counted_betti(cfg: TowerConfig) -> np.ndarray:
    """
    Dimension of every degree, counted monomial by monomial from the membership rule.

    Each column w3^c admits the w2-exponents below min(2^{t-1} - 2^i) over the i with
    c >= 2^i - 1; both a-parts of the column are laid down as stride-2 runs.
    """
    t = cfg.t
    half = 2 ** (t - 1)
    top = cfg.dim_manifold
    dims = np.zeros(top + 1, dtype=np.int64)
    for c in range(half - 1):
        bound = min(half - 2**i for i in range(t) if c >= 2**i - 1)
        expect(
            in_basis(ExtMonomial(0, bound - 1, c, t)) and not in_basis(ExtMonomial(0, bound, c, t)),
            "betti.count",
            t,
            f"column w3^{c}: admissible w2-exponents do not stop at {bound}",
        )
        for r in (0, 1):
            start = r * cfg.deg_a + 3 * c
            last = start + 2 * (bound - 1)
            expect(last <= top, "betti.count", t, f"a^{r}*w2^{bound - 1}*w3^{c} lies above degree {top}")
            dims[start : last + 1 : 2] += 1
    return dims


def verify_tensor_split(cfg: TowerConfig) -> CheckReport:
    """dim H^j = R_j + R_{j - deg a}, R the Betti sequence of the w2/w3 part."""
    t = cfg.t
    table = betti_table(cfg)
    imp = im_betti(cfg)
    counted = _counted_betti(cfg)

    if t <= STANDARD_MONOMIAL_MAX_T:
        gb = extended_gb(cfg)
        for j in range(cfg.dim_manifold + 1):
            found = len(standard_monomials(gb, j))
            expect(found == counted[j], "betti.count", t, f"degree {j}: {found} standard monomials, {counted[j]} counted")

    def r_at(j: int) -> int:
        return imp[j] if 0 <= j < len(imp) else 0

    for j in range(cfg.dim_manifold + 1):
        want = r_at(j) + r_at(j - cfg.deg_a)
        expect(counted[j] == want, "betti.split", t, f"degree {j}: counted {counted[j]} != {want}")
        expect(table[j] == counted[j], "betti.table", t, f"degree {j}: table {table[j]} != counted {counted[j]}")
    expect(table.total == cfg.total_dim, "betti.total", t, f"total {table.total} != {cfg.total_dim}")
    asym = table.asymmetric_degrees()
    expect(not asym, "betti.symmetry", t, f"asymmetric degrees {asym[:5]}")
    return CheckReport("betti.split", t, f"total dimension {table.total}")
