"""Report envelopes and deterministic serialization (JSON document + CSV).

Payload bytes are a pure function of the run configuration: keys are sorted,
floats use shortest-roundtrip repr, non-finite numbers are encoded as the
strings "inf"/"-inf"/"nan" (strict JSON has no literals for them), and no
timestamps enter the payload body.  CSV output is comma-separated with '.'
decimals, a mandatory header row, and LF line endings.
"""

from __future__ import annotations

import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Iterable

TOOL_VERSION = "0.1.0"

__all__ = ["TOOL_VERSION", "CsvTable", "ReportEnvelope"]


def _sanitize(obj: Any) -> Any:
    if isinstance(obj, float):
        if math.isnan(obj):
            return "nan"
        if obj == math.inf:
            return "inf"
        if obj == -math.inf:
            return "-inf"
        return obj
    if isinstance(obj, dict):
        return {str(k): _sanitize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_sanitize(v) for v in obj]
    return obj


def _csv_cell(v: Any) -> str:
    if isinstance(v, float):
        if math.isnan(v):
            return "nan"
        if v == math.inf:
            return "inf"
        if v == -math.inf:
            return "-inf"
        return repr(v)
    return str(v)


@dataclass(frozen=True)
class CsvTable:
    """A named CSV artifact; rows are produced lazily by the factory."""

    name: str
    fieldnames: tuple[str, ...]
    rows: Callable[[], Iterable[dict]]

    def write_to(self, stream) -> None:
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(self.fieldnames)
        for row in self.rows():
            writer.writerow([_csv_cell(row[k]) for k in self.fieldnames])

    def as_text(self) -> str:
        buf = io.StringIO()
        self.write_to(buf)
        return buf.getvalue()


@dataclass
class ReportEnvelope:
    """The complete result of one run: echoed config, results, diagnostics."""

    config_echo: dict
    results: dict
    diagnostics: list[tuple[str, str]] = field(default_factory=list)
    tables: list[CsvTable] = field(default_factory=list)
    exit_code: int = 0
    tool_version: str = TOOL_VERSION

    def add_diagnostic(self, level: str, message: str) -> None:
        self.diagnostics.append((level, message))

    def payload(self) -> dict:
        return {
            "tool_version": self.tool_version,
            "config_echo": _sanitize(self.config_echo),
            "results": _sanitize(self.results),
            "diagnostics": [[lvl, msg] for lvl, msg in self.diagnostics],
        }

    def payload_bytes(self) -> bytes:
        text = json.dumps(self.payload(), sort_keys=True, indent=2,
                          ensure_ascii=True)
        return (text + "\n").encode("ascii")

    def write(self, output_path: str | None, fmt: str) -> None:
        """Write according to the format: document, CSV tables, or both."""
        if fmt in ("structured-document", "both"):
            if output_path is None:
                sys.stdout.write(self.payload_bytes().decode("ascii"))
            else:
                Path(output_path).write_bytes(self.payload_bytes())
        if fmt in ("csv", "both"):
            if output_path is None:
                for table in self.tables:
                    sys.stdout.write(f"# table: {table.name}\n")
                    table.write_to(sys.stdout)
            else:
                base = Path(output_path)
                for table in self.tables:
                    target = base.with_name(f"{base.stem}_{table.name}.csv")
                    with open(target, "w", newline="", encoding="ascii") as fh:
                        table.write_to(fh)
