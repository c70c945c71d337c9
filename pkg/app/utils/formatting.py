from __future__ import annotations

from typing import Any, Dict, List, Sequence


def escape_cell(x: Any) -> str:
    s = "" if x is None else str(x)
    return s.replace("|", "\\|").replace("\n", "<br>")


def rows_to_markdown_table(rows: List[Dict[str, Any]], columns: Sequence[str]) -> str:
    """Markdown table with the given column order; missing cells render empty."""
    if not rows:
        return "_No rows._"
    header = "| " + " | ".join(columns) + " |"
    sep = "|" + "|".join("---" for _ in columns) + "|"
    body = ["| " + " | ".join(escape_cell(r.get(c)) for c in columns) + " |" for r in rows]
    return "\n".join([header, sep, *body])
