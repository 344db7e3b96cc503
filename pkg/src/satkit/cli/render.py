"""Human and JSON renderings of a :class:`Report`."""

from __future__ import annotations

import json
from typing import Any

from satkit.cli.runner import Report


def _scalar(v: Any) -> str:
    if v is True:
        return "true"
    if v is False:
        return "false"
    if v is None:
        return "-"
    return str(v)


def _block(value: Any, indent: int) -> list[str]:
    pad = " " * indent
    if isinstance(value, dict):
        if not value:
            return [pad + "(none)"]
        width = max(len(str(k)) for k in value)
        lines = []
        for k, v in value.items():
            if isinstance(v, list) and v and not _flat(v):
                lines.append(f"{pad}{k}")
                lines.extend(_block(v, indent + 2))
            else:
                lines.append(f"{pad}{str(k).ljust(width)}  {_inline(v)}")
        return lines
    if isinstance(value, list):
        if not value:
            return [pad + "(none)"]
        lines = []
        for item in value:
            if isinstance(item, dict):
                lines.append(pad + "- " + ", ".join(f"{k}={_inline(v)}" for k, v in item.items()))
            else:
                lines.append(pad + "- " + _inline(item))
        return lines
    return [pad + _scalar(value)]


def _flat(v: Any) -> bool:
    """Small enough to print on one line."""
    if isinstance(v, dict):
        return len(v) <= 2 and all(not isinstance(x, (dict, list)) for x in v.values())
    return len(v) <= 1 and all(not isinstance(x, (dict, list)) for x in v)


def _inline(v: Any) -> str:
    if isinstance(v, dict):
        return ", ".join(f"{k}: {_scalar(x)}" for k, x in v.items()) if v else "(none)"
    if isinstance(v, list):
        return ", ".join(_inline(x) for x in v) if v else "(none)"
    return _scalar(v)


def render_human(report: Report) -> str:
    lines: list[str] = []
    for n, rec in enumerate(report.records, 1):
        lines.append(f"[{n}] {rec.command}")
        for label, value in (("verdict", rec.verdict), ("certificate", rec.certificate)):
            if isinstance(value, (dict, list)) and value and not _flat(value):
                lines.append(f"    {label}")
                lines.extend(_block(value, 6))
            else:
                lines.append(f"    {label.ljust(11)}  {_inline(value)}")
        if rec.elapsed_ms is not None:
            lines.append(f"    {'time'.ljust(11)}  {rec.elapsed_ms:.1f} ms")
    return "\n".join(lines) + ("\n" if lines else "")


def render_json(report: Report) -> str:
    return "".join(json.dumps(rec.as_dict(), ensure_ascii=False) + "\n" for rec in report.records)


def render_report(report: Report, format: str = "human") -> str:
    if format == "json":
        return render_json(report)
    if format == "human":
        return render_human(report)
    raise ValueError(f"unknown report format {format!r}")
