from __future__ import annotations

import sys

from rich import box
from rich.console import Console
from rich.table import Table

from app.cli.schemas import VerificationReport
from app.grassmann.cohomology import BettiTable

CONSOLE_WIDTH = 100


def make_console() -> Console:
    """Plain console on the current stdout: fixed width, no colour, no markup highlighting."""
    return Console(
        file=sys.stdout,
        width=CONSOLE_WIDTH,
        color_system=None,
        highlight=False,
        force_terminal=False,
        soft_wrap=True,
    )


def betti_table_view(table: BettiTable, *, symmetry: bool = False) -> Table:
    view = Table(title=f"Betti numbers, t={table.t}, D={table.dim_manifold}", box=box.ASCII)
    view.add_column("degree", justify="right")
    view.add_column("dim", justify="right")
    if symmetry:
        view.add_column("dim(D-j)", justify="right")
        view.add_column("ok")
    top = table.dim_manifold
    for j in range(top + 1):
        row = [str(j), str(table[j])]
        if symmetry:
            mirror = table[top - j]
            row += [str(mirror), "yes" if mirror == table[j] else "NO"]
        view.add_row(*row)
    return view


def report_view(report: VerificationReport) -> Table:
    view = Table(title=f"verify --suite {report.suite}", box=box.ASCII)
    view.add_column("check")
    view.add_column("t", justify="right")
    view.add_column("status")
    view.add_column("witness")
    for c in report.checks:
        view.add_row(c.id, str(c.t), c.status, c.witness or "")
    return view
