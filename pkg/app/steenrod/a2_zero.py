"""
Proof replay that a^2 = 0.

In degree 2^{t+1} - 2 the basis consists of a*w2^{2^{t-1}-2-3k} w3^{2k+1}, k = 1..K, so
a^2 = sum lambda_k * (that monomial). Applying Sq^1 and Sq^2 to both sides yields GF(2)
linear constraints on the lambda_k; the replay shows they force every lambda_k to vanish.

Sq^1(a^2) = 0 and Sq^2(a^2) = Sq^1(a)^2 lies in the w2/w3 part above its top degree,
so both left-hand sides are zero. On the right-hand side the cross terms involving
Sq^1(a) or Sq^2(a) land in degrees 2^{t+1} - 1 and 2^{t+1}, above the w2/w3 top degree
2^{t+1} - 8, and vanish. Sq^2(a) lying in the w2/w3 part is taken as an axiom here.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from app.algebra.gf2_linalg import gf2_nullspace, gf2_rank
from app.algebra.monomial import ExtMonomial, Monomial
from app.algebra.parity import binom_mod2
from app.algebra.polynomial import ExtPolynomial, Polynomial
from app.grassmann.cohomology import basis_in_degree, in_basis
from app.grassmann.generators import lm_f_closed_form
from app.grassmann.tower import TowerConfig
from app.steenrod.squares import sq1, sq1_a_in_w_part, sq2
from app.utils.verification import CheckReport, expect

logger = logging.getLogger(__name__)


def candidate(cfg: TowerConfig, k: int) -> ExtMonomial:
    half = 2 ** (cfg.t - 1)
    return ExtMonomial(1, half - 2 - 3 * k, 2 * k + 1, cfg.t)


def candidate_count(cfg: TowerConfig) -> int:
    return (2 ** (cfg.t - 1) - 2) // 3


@dataclass(frozen=True)
class SqConstraintSystem:
    """
    Rows are basis monomials of the target degree, columns are the unknowns lambda_k.

    sq1_matrix covers every k; sq2_matrix only the even k, since Sq^1 already settles
    the odd ones.
    """

    t: int
    unknowns: tuple[int, ...]
    candidates: tuple[ExtMonomial, ...]
    sq1_targets: tuple[ExtMonomial, ...]
    sq1_matrix: np.ndarray
    sq2_unknowns: tuple[int, ...]
    sq2_targets: tuple[ExtMonomial, ...]
    sq2_matrix: np.ndarray

    def sq1_kernel(self) -> np.ndarray:
        return gf2_nullspace(self.sq1_matrix)

    def combined_matrix(self) -> np.ndarray:
        """Both constraint blocks over all unknowns."""
        wide = np.zeros((self.sq2_matrix.shape[0], len(self.unknowns)), dtype=np.uint8)
        for col, k in enumerate(self.sq2_unknowns):
            wide[:, self.unknowns.index(k)] = self.sq2_matrix[:, col]
        return np.vstack([self.sq1_matrix, wide])

    def kernel_dim(self) -> int:
        return len(self.unknowns) - gf2_rank(self.combined_matrix())


def _a_times(cfg: TowerConfig, p: Polynomial[Monomial]) -> ExtPolynomial:
    return ExtPolynomial.lift(p, cfg.t, r=1)


def _constraint_block(
    cfg: TowerConfig,
    ks: list[int],
    op,
    degree: int,
) -> tuple[tuple[ExtMonomial, ...], np.ndarray]:
    targets = tuple(basis_in_degree(cfg, degree))
    index = {m: row for row, m in enumerate(targets)}
    matrix = np.zeros((len(targets), len(ks)), dtype=np.uint8)
    for col, k in enumerate(ks):
        m = candidate(cfg, k).w_part
        image = _a_times(cfg, op(Polynomial.monomial(m), cfg))
        for term in image:
            if term not in index:
                raise AssertionError(f"normal form term {term} is not a basis monomial of degree {degree}")
            matrix[index[term], col] ^= 1
    return targets, matrix


def build_constraint_system(cfg: TowerConfig) -> SqConstraintSystem:
    t = cfg.t
    unknowns = tuple(range(1, candidate_count(cfg) + 1))
    candidates = tuple(candidate(cfg, k) for k in unknowns)
    degree = 2 ** (t + 1) - 2

    sq1_targets, sq1_matrix = _constraint_block(cfg, list(unknowns), sq1, degree + 1)
    sq2_unknowns = tuple(k for k in unknowns if k % 2 == 0)
    sq2_targets, sq2_matrix = _constraint_block(cfg, list(sq2_unknowns), sq2, degree + 2)
    logger.debug(
        "Constraint system: t=%s unknowns=%s sq1_rows=%s sq2_rows=%s",
        t,
        len(unknowns),
        len(sq1_targets),
        len(sq2_targets),
    )
    return SqConstraintSystem(
        t=t,
        unknowns=unknowns,
        candidates=candidates,
        sq1_targets=sq1_targets,
        sq1_matrix=sq1_matrix,
        sq2_unknowns=sq2_unknowns,
        sq2_targets=sq2_targets,
        sq2_matrix=sq2_matrix,
    )


def _check_degree_shape(cfg: TowerConfig, system: SqConstraintSystem) -> None:
    t = cfg.t
    degree = 2 ** (t + 1) - 2
    found = basis_in_degree(cfg, degree)
    expect(all(m.r == 1 for m in found), "a2.shape", t, f"w2/w3 monomials in degree {degree}")
    expect(
        sorted(found, reverse=True) == sorted(system.candidates, reverse=True),
        "a2.shape",
        t,
        f"basis {list(map(str, found))} != candidates {list(map(str, system.candidates))}",
    )
    excluded = candidate(cfg, 0)
    expect(
        not in_basis(excluded) and lm_f_closed_form(cfg, 1).divides(excluded.w_part),
        "a2.shape",
        t,
        f"{excluded} should be divisible by LM(f_1)",
    )


def _check_cross_terms(cfg: TowerConfig) -> None:
    t = cfg.t
    top = cfg.imp_top_degree
    expect(sq1_a_in_w_part(cfg), "a2.cross_terms", t, "Sq^1(a) has an a-carrying component")
    for degree in (2 ** (t + 1) - 1, 2 ** (t + 1)):
        expect(degree > top, "a2.cross_terms", t, f"degree {degree} is not above {top}")
        w_part = [m for m in basis_in_degree(cfg, degree) if m.r == 0]
        expect(not w_part, "a2.cross_terms", t, f"w2/w3 classes survive in degree {degree}")


def _check_displayed_coefficients(cfg: TowerConfig, system: SqConstraintSystem) -> None:
    t = cfg.t
    half = 2 ** (t - 1)
    for col, k in enumerate(system.unknowns):
        column = system.sq1_matrix[:, col]
        coeff = (half - 2 - 3 * k) % 2
        target = ExtMonomial(1, half - 3 - 3 * k, 2 * k + 2, t) if coeff else None
        if target is None:
            expect(not column.any(), "a2.sq1", t, f"k={k}: Sq^1 column should vanish")
            continue
        expect(in_basis(target), "a2.sq1", t, f"k={k}: {target} is not a basis monomial")
        hits = [system.sq1_targets[row] for row in np.nonzero(column)[0]]
        expect(hits == [target], "a2.sq1", t, f"k={k}: Sq^1 hits {list(map(str, hits))}, expected {target}")

    seen: set[ExtMonomial] = set()
    for col, k in enumerate(system.sq2_unknowns):
        j = k // 2
        expected = [ExtMonomial(1, half - 1 - 6 * j, 4 * j + 1, t)]
        b = half - 2 - 6 * j
        if binom_mod2(b, 2):
            expected.append(ExtMonomial(1, half - 4 - 6 * j, 4 * j + 3, t))
        for m in expected:
            expect(in_basis(m), "a2.sq2", t, f"k={k}: {m} is not a basis monomial")
            expect(m not in seen, "a2.sq2", t, f"k={k}: {m} is shared with another unknown")
            seen.add(m)
        hits = sorted((system.sq2_targets[row] for row in np.nonzero(system.sq2_matrix[:, col])[0]), reverse=True)
        expect(
            hits == sorted(expected, reverse=True),
            "a2.sq2",
            t,
            f"k={k}: Sq^2 hits {list(map(str, hits))}, expected {list(map(str, expected))}",
        )


def verify_a2_zero(cfg: TowerConfig) -> CheckReport:
    t = cfg.t
    system = build_constraint_system(cfg)
    _check_degree_shape(cfg, system)
    if not system.unknowns:
        logger.info("a^2 = 0 holds for t=%s: degree %s is empty", t, 2 ** (t + 1) - 2)
        return CheckReport("a2.zero", t, "no candidate monomials")

    _check_cross_terms(cfg)

    odd = [k for k in system.unknowns if k % 2]
    kernel = system.sq1_kernel()
    free = sorted({system.unknowns[int(i)] for row in kernel for i in np.nonzero(row)[0]})
    expect(
        kernel.shape[0] == len(system.sq2_unknowns) and free == list(system.sq2_unknowns),
        "a2.sq1",
        t,
        f"Sq^1 rows leave unknowns {free}, expected the even ones",
    )
    sq2_rank = gf2_rank(system.sq2_matrix)
    expect(
        sq2_rank == len(system.sq2_unknowns),
        "a2.sq2",
        t,
        f"Sq^2 rows have rank {sq2_rank} on {len(system.sq2_unknowns)} unknowns",
    )
    _check_displayed_coefficients(cfg, system)
    kernel_dim = system.kernel_dim()
    expect(kernel_dim == 0, "a2.kernel", t, f"kernel of dimension {kernel_dim}")

    logger.info(
        "a^2 = 0 holds for t=%s: unknowns=%s odd=%s even=%s",
        t,
        len(system.unknowns),
        len(odd),
        len(system.sq2_unknowns),
    )
    return CheckReport(
        "a2.zero",
        t,
        f"{len(system.unknowns)} unknowns, {len(odd)} settled by Sq^1, {len(system.sq2_unknowns)} by Sq^2",
    )
