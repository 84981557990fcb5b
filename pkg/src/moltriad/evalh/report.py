"""Metric report container and markdown/csv rendering."""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field


@dataclass(frozen=True)
class MetricReport:
    """Scores for one task: metric name -> value, plus evaluation counts.

    A value of None renders as "n/a"; `notes` carries the reasons and any
    footers (for example the fingerprint substitution behind "RDKit FTS").
    """
    task: str
    metrics: dict[str, float | None]
    evaluated: int
    skipped: int = 0
    notes: tuple[str, ...] = field(default_factory=tuple)


def _fmt(value: float | None) -> str:
    return "n/a" if value is None else f"{value:.3f}"


def render_report(reports: list[MetricReport], fmt: str = "markdown") -> str:
    """Render reports as one table; columns follow each report's metric order."""
    if not reports:
        raise ValueError("need at least one report")
    columns: list[str] = []
    for report in reports:
        for name in report.metrics:
            if name not in columns:
                columns.append(name)
    header = ["task", *columns, "evaluated", "skipped"]
    rows = [
        [
            report.task,
            *[_fmt(report.metrics.get(c)) if c in report.metrics else "n/a"
              for c in columns],
            str(report.evaluated),
            str(report.skipped),
        ]
        for report in reports
    ]
    notes = [note for report in reports for note in report.notes]
    if fmt == "markdown":
        lines = [
            "| " + " | ".join(header) + " |",
            "| " + " | ".join("---" for _ in header) + " |",
        ]
        lines.extend("| " + " | ".join(row) + " |" for row in rows)
        lines.extend(f"> {note}" for note in notes)
        return "\n".join(lines) + "\n"
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        for note in notes:
            writer.writerow(["#", note])
        return buffer.getvalue()
    raise ValueError(f"unknown report format: {fmt!r}")
