from __future__ import annotations

import io
import logging
from contextlib import redirect_stdout
from dataclasses import dataclass
from pathlib import Path
from time import perf_counter
from typing import Any, Dict, List, Tuple

import yaml

from app.cli.main import main as cli_main
from app.utils.formatting import rows_to_markdown_table
from app.utils.logging import setup_logging

logger = logging.getLogger(__name__)

ROOT = Path(__file__).resolve().parents[2]
GOLDEN_PATH = ROOT / "app" / "eval" / "golden.yaml"
REPORT_PATH = ROOT / "Eval_Report.md"


@dataclass
class CheckResult:
    id: str
    ok: bool
    details: str


def load_cases(path: Path = GOLDEN_PATH) -> List[Dict[str, Any]]:
    data = yaml.safe_load(path.read_text(encoding="utf-8"))
    return data["cases"]


def run_cli(argv: List[str]) -> Tuple[int, str]:
    """Run the CLI in-process and capture what it prints."""
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = cli_main(list(argv))
    return code, buf.getvalue()


def run_one_case(case: Dict[str, Any]) -> CheckResult:
    cid = case["id"]
    expect = case.get("expect", {})
    logger.debug("Running golden case: id=%s argv=%s", cid, case["argv"])

    t0 = perf_counter()
    code, out = run_cli(case["argv"])
    elapsed = perf_counter() - t0

    want_code = int(expect.get("exit_code", 0))
    if code != want_code:
        logger.warning("Exit code mismatch: id=%s expected=%s got=%s", cid, want_code, code)
        return CheckResult(cid, False, f"exit code {code}, expected {want_code}")

    if "stdout" in expect:
        want = str(expect["stdout"]).rstrip()
        got = out.rstrip()
        if got != want:
            logger.warning("Output mismatch: id=%s", cid)
            return CheckResult(cid, False, f"stdout {got!r}, expected {want!r}")

    for needle in expect.get("contains") or []:
        if needle not in out:
            logger.warning("Missing output: id=%s needle=%r", cid, needle)
            return CheckResult(cid, False, f"stdout lacks {needle!r}")

    logger.info("PASS id=%s time=%.2fs", cid, elapsed)
    return CheckResult(cid, True, f"exit {code}, {elapsed:.2f}s")


def render_report(results: List[CheckResult]) -> str:
    passed = sum(1 for r in results if r.ok)
    lines = [
        "# Golden Evaluation Report",
        "",
        f"- Passed: **{passed}/{len(results)}**",
        "",
        rows_to_markdown_table(
            [
                {"Case": f"`{r.id}`", "Status": "PASS" if r.ok else "FAIL", "Details": r.details}
                for r in results
            ],
            columns=("Case", "Status", "Details"),
        ),
        "",
    ]
    return "\n".join(lines)


def main() -> int:
    setup_logging()
    cases = load_cases()
    logger.info("Starting golden checks: cases=%s", len(cases))
    results = [run_one_case(c) for c in cases]
    REPORT_PATH.write_text(render_report(results), encoding="utf-8")

    passed = sum(1 for r in results if r.ok)
    logger.info("Golden checks complete: passed=%s total=%s output=%s", passed, len(results), REPORT_PATH)
    print(f"Wrote: {REPORT_PATH}")
    return 0 if passed == len(results) else 1


if __name__ == "__main__":
    raise SystemExit(main())
