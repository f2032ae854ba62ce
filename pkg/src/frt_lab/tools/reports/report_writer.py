"""
@file_name: report_writer.py
@author: frtlab
@date: 2025-07-20
@description: Report emission (JSON or markdown), loading and verdict-level diffs
"""

import json
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

from tabulate import tabulate

from src.frt_lab.core.errors import BadEntry, ReportIoError, SchemaMismatch
from src.frt_lab.core.logging import logger
from src.frt_lab.models.report_models import Report

FORMATS = ("json", "markdown")


def render_json(report: Report) -> str:
    """Stable key order and a trailing newline; identical reports give identical bytes"""
    return json.dumps(report.to_dict(), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _cell(value: Any, width: int = 60) -> str:
    if value is None:
        return ""
    text = value if isinstance(value, str) else json.dumps(value, sort_keys=True, ensure_ascii=False)
    return text if len(text) <= width else text[: width - 3] + "..."


def render_markdown(report: Report) -> str:
    """Markdown view rendered from the JSON dict"""
    data = report.to_dict()
    summary = data["summary"]
    lines = [
        f"# frtlab report: {data['suite']}",
        "",
        f"artifact `{data['artifact_version']}`, schema {data['schema_version']}, "
        f"seed {data['config'].get('seed')}, q = {data['config'].get('q')}",
        "",
        tabulate([[k, summary[k]] for k in ("PASS", "FAIL", "INFO", "total")],
                 headers=["verdict", "count"], tablefmt="github"),
        "",
        "## Records",
        "",
        tabulate(
            [[r["id"], r["verdict"], _cell(r["anchor"], 48), _cell(r.get("witness"))] for r in data["records"]],
            headers=["id", "verdict", "anchor", "witness"],
            tablefmt="github",
        ),
    ]
    failures = [r for r in data["records"] if r["verdict"] == "FAIL"]
    if failures:
        lines += ["", "## Failures", ""]
        for record in failures:
            lines += [f"### {record['id']}", "", "```json",
                      json.dumps(record["witness"], sort_keys=True, indent=2, ensure_ascii=False), "```", ""]
    return "\n".join(lines).rstrip("\n") + "\n"


def emit_report(report: Report, format: str = "json", path: Optional[str] = None) -> str:
    """
    Render a report and write it to path, or to stdout when path is None

    Returns:
        The rendered text

    Raises:
        ReportIoError: the file cannot be written
    """
    if format not in FORMATS:
        raise BadEntry(f"unknown report format '{format}'")
    text = render_json(report) if format == "json" else render_markdown(report)
    if path is None:
        sys.stdout.write(text)
        return text
    try:
        target = Path(path)
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(text, encoding="utf-8")
    except OSError as e:
        logger.error(f"failed to write report to {path}: {e}")
        raise ReportIoError(f"cannot write report {path}: {e}") from e
    logger.info(f"report written to {path}")
    return text


def load_report(path: str) -> Report:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ReportIoError(f"cannot read report {path}: {e}") from e
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaMismatch(f"{path} is not a JSON report: {e.msg}") from e
    return Report.from_dict(data)


def diff_reports(a: Report, b: Report) -> Dict[str, List[Dict[str, Any]]]:
    """
    Verdict-level differences between two runs of the same suite

    Returns:
        {"changed": [{"id", "before", "after"}], "added": [...], "removed": [...]}
    """
    if a.suite != b.suite:
        raise SchemaMismatch(f"cannot diff suite '{a.suite}' against '{b.suite}'")
    before = {r.id: r.verdict.value for r in a.records}
    after = {r.id: r.verdict.value for r in b.records}
    return {
        "changed": [{"id": k, "before": before[k], "after": after[k]}
                    for k in sorted(before.keys() & after.keys()) if before[k] != after[k]],
        "added": [{"id": k, "verdict": after[k]} for k in sorted(after.keys() - before.keys())],
        "removed": [{"id": k, "verdict": before[k]} for k in sorted(before.keys() - after.keys())],
    }
