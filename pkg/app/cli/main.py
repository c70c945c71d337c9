"""Command-line entry point: `python -m app.cli <command> ...`."""
from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass
from time import perf_counter
from typing import Callable, List, Optional, Tuple

from app.algebra.monomial import ExponentOverflowError
from app.algebra.parity import UsageError
from app.algebra.text import PolynomialSyntaxError, format_poly, parse
from app.cli.render import betti_table_view, make_console, report_view
from app.cli.schemas import (
    BasisPayload,
    BettiPayload,
    CheckEntry,
    GbPayload,
    VerificationReport,
)
from app.groebner.engine import GroebnerBudgetExceeded
from app.grassmann.cohomology import (
    BasisBudgetExceeded,
    CohClass,
    additive_basis,
    basis_in_degree,
    betti_table,
)
from app.grassmann.generators import claimed_gb, f_poly, g_poly, wbar
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
from app.steenrod.a2_zero import verify_a2_zero
from app.steenrod.squares import IndeterminateResult, sq_on_coh, verify_closed_forms
from app.utils.logging import setup_logging
from app.utils.verification import CheckReport, VerificationFailure

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_INDETERMINATE = 4

LEMMA_S_MAX = 64
SQ_MAX_TOTAL = 64
SQ_SAMPLES = 10_000


# ---------- verification suites ----------


@dataclass(frozen=True)
class Suite:
    first: int
    cap: int
    checks: List[Tuple[str, Callable[[int], Optional[CheckReport]]]]


def _lemma(i: int) -> CheckReport:
    return check_lower_bound_lemma(i, LEMMA_S_MAX)


def _a2(t: int) -> Optional[CheckReport]:
    # t = 2 has no candidate monomials
    if t < 3:
        return None
    return verify_a2_zero(TowerConfig(t=t))


def _sq_closed_forms(_: int) -> CheckReport:
    return verify_closed_forms(max_total=SQ_MAX_TOTAL, samples=SQ_SAMPLES)


def _on_tower(fn: Callable[[TowerConfig], CheckReport]) -> Callable[[int], CheckReport]:
    return lambda t: fn(TowerConfig(t=t))


SUITES = {
    "gb": Suite(2, 8, [("gb.reduced", _on_tower(verify_reduced_gb))]),
    "spoly": Suite(2, 12, [("spoly.identities", _on_tower(verify_spoly_identities))]),
    "bounds": Suite(
        2,
        12,
        [("bounds", _on_tower(verify_bounds)), ("betti.split", _on_tower(verify_tensor_split))],
    ),
    "lemma": Suite(0, 10, [("lemma.lower_bound", _lemma)]),
    "a2": Suite(2, 10, [("a2.zero", _a2)]),
    "identities": Suite(
        2,
        8,
        [
            ("identities.recurrence", _on_tower(verify_generalized_recurrence)),
            ("identities.membership", _on_tower(verify_ideal_membership)),
        ],
    ),
    "duality": Suite(2, 5, [("duality.pairing", _on_tower(verify_duality_pairing))]),
    # tower-independent: a single entry reported at t=0
    "sq": Suite(0, 0, [("sq.closed_forms", _sq_closed_forms)]),
}


def run_suite(suite: Suite, t_max: Optional[int]) -> List[CheckEntry]:
    last = suite.cap if t_max is None else min(t_max, suite.cap)
    entries: List[CheckEntry] = []
    for t in range(suite.first, last + 1):
        for check_id, check in suite.checks:
            t0 = perf_counter()
            try:
                report = check(t)
            except VerificationFailure as e:
                entries.append(CheckEntry(id=check_id, t=t, status="fail", witness=str(e), seconds=perf_counter() - t0))
                logger.error("FAIL %s t=%s: %s", check_id, t, e)
                continue
            elapsed = perf_counter() - t0
            if report is None:
                entries.append(CheckEntry(id=check_id, t=t, status="skip", seconds=elapsed))
                logger.info("SKIP %s t=%s", check_id, t)
            else:
                entries.append(CheckEntry(id=check_id, t=t, status="pass", seconds=elapsed))
                logger.info("PASS %s t=%s (%s) time=%.2fs", check_id, t, report.details, elapsed)
    return entries


# ---------- commands ----------


def cmd_poly(args: argparse.Namespace) -> int:
    if args.g is not None:
        poly = g_poly(args.g)
    elif args.f is not None:
        t, i = args.f
        poly = f_poly(TowerConfig(t=t), i)
    else:
        r, k = args.wbar
        poly = wbar(r, k)
    print(format_poly(poly))
    return EXIT_OK


def cmd_gb(args: argparse.Namespace) -> int:
    cfg = TowerConfig(t=args.t)
    basis = claimed_gb(cfg)
    verified: Optional[bool] = None
    witness = ""
    if args.verify:
        try:
            verify_reduced_gb(cfg)
            verified = True
        except VerificationFailure as e:
            verified, witness = False, str(e)
            logger.error("Groebner basis check failed: %s", e)

    if args.json:
        payload = GbPayload(
            t=cfg.t,
            basis=[format_poly(p) for p in basis],
            leading_monomials=[str(m) for m in basis.leading],
            verified=verified,
        )
        print(payload.to_json())
    else:
        for p in basis:
            print(format_poly(p))
        if verified is not None:
            print("verify: pass" if verified else f"verify: fail: {witness}")
    return EXIT_VERIFICATION if verified is False else EXIT_OK


def cmd_basis(args: argparse.Namespace) -> int:
    cfg = TowerConfig(t=args.t)
    if args.degree is not None:
        if not 0 <= args.degree <= cfg.dim_manifold:
            logger.warning("Degree %s is outside 0..%s; the slice is empty", args.degree, cfg.dim_manifold)
        degrees = {args.degree: basis_in_degree(cfg, args.degree)}
    else:
        basis = additive_basis(cfg)
        degrees = {j: list(basis.in_degree(j)) for j in range(cfg.dim_manifold + 1)}

    if args.json:
        payload = BasisPayload(t=cfg.t, degrees={str(j): [str(m) for m in ms] for j, ms in degrees.items()})
        print(payload.to_json())
    else:
        print(", ".join(str(m) for j in sorted(degrees) for m in degrees[j]))
    return EXIT_OK


def cmd_betti(args: argparse.Namespace) -> int:
    cfg = TowerConfig(t=args.t)
    table = betti_table(cfg)
    symmetric = table.is_symmetric()
    if args.json:
        payload = BettiPayload(
            t=cfg.t,
            n=cfg.n,
            dim_manifold=cfg.dim_manifold,
            total_dim=table.total,
            betti=list(table.dims),
        )
        print(payload.to_json())
    else:
        console = make_console()
        console.print(betti_table_view(table, symmetry=args.symmetry))
        console.print(f"total: {table.total}")
        if args.symmetry:
            console.print(f"symmetry: {'pass' if symmetric else 'fail'}")
    if args.symmetry and not symmetric:
        logger.error("Betti table is not symmetric in degrees %s", table.asymmetric_degrees())
        return EXIT_VERIFICATION
    return EXIT_OK


def cmd_sq(args: argparse.Namespace) -> int:
    cfg = TowerConfig(t=args.t)
    x = parse(args.input, t=cfg.t)
    try:
        result = sq_on_coh(cfg, args.op, CohClass.of(cfg, x), wu_axiom=args.wu_axiom)
    except IndeterminateResult as e:
        logger.warning("%s", e)
        print("indeterminate")
        return EXIT_INDETERMINATE
    print(format_poly(result.value))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    entries: List[CheckEntry] = []
    for name in names:
        entries.extend(run_suite(SUITES[name], args.t_max))
    report = VerificationReport.collect(args.suite, entries)

    if args.json:
        print(report.to_json())
    else:
        console = make_console()
        console.print(report_view(report))
        console.print(f"status: {report.status}")
    logger.info("Verification finished: suite=%s checks=%s status=%s", args.suite, len(entries), report.status)
    return EXIT_OK if report.status == "pass" else EXIT_VERIFICATION


# ---------- parser ----------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="python -m app.cli",
        description="Groebner bases and cohomology of oriented Grassmannians G~(2^t, 3) over GF(2).",
    )
    parser.add_argument("--log-level", default=None, help="Logging level (default: LOG_LEVEL or INFO)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", help="Print a generator polynomial")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--g", type=int, metavar="R", help="g_r")
    which.add_argument("--f", type=int, nargs=2, metavar=("T", "I"), help="f_i for the tower t")
    which.add_argument("--wbar", type=int, nargs=2, metavar=("R", "K"), help="dual class wbar_r in w1..wk")
    p.set_defaults(handler=cmd_poly)

    p = sub.add_parser("gb", help="Print the reduced Groebner basis {f_0, ..., f_{t-1}}")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--verify", action="store_true", help="Compare against an independent Buchberger run")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_gb)

    p = sub.add_parser("basis", help="Print the additive basis of the cohomology ring")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--degree", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_basis)

    p = sub.add_parser("betti", help="Print the Betti table")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--symmetry", action="store_true", help="Add the duality symmetry column and check it")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_betti)

    p = sub.add_parser("sq", help="Apply Sq^1 or Sq^2 to a class and print its normal form")
    p.add_argument("--op", type=int, choices=(1, 2), required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--input", required=True, help='Polynomial in a, w2, w3, e.g. "a*w2 + w3^2"')
    p.add_argument(
        "--wu-axiom",
        action="store_true",
        help="Take Sq^2(a) to lie in the w2/w3 part, resolving terms that are otherwise indeterminate",
    )
    p.set_defaults(handler=cmd_sq)

    p = sub.add_parser("verify", help="Run verification suites")
    p.add_argument("--suite", choices=("all", *SUITES), default="all")
    p.add_argument("--t-max", type=int, default=None, help="Largest t (for lemma: largest i)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_verify)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    setup_logging(args.log_level)
    try:
        return args.handler(args)
    except VerificationFailure as e:
        logger.error("Verification failed: %s", e)
        return EXIT_VERIFICATION
    except (GroebnerBudgetExceeded, BasisBudgetExceeded) as e:
        logger.error("Resource budget exceeded: %s", e)
        return EXIT_BUDGET
    except (PolynomialSyntaxError, UsageError, ExponentOverflowError, ValueError) as e:
        logger.error("Usage error: %s", e)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
