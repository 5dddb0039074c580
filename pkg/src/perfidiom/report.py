"""Scan report serialization: detection records and their JSON container.

Detection records carry exactly the keys file_path, cl, me, idiom,
compli_code, simple_code, lineno, keyno, with lineno encoded as a list of
[[start_line, start_col], [end_line, end_col]] pairs. Line numbers are
1-based, columns 0-based. keyno is always null.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from perfidiom.smells import Detection, SmellKind
from perfidiom.syntax import ScopeInfo, SourceRange


class SchemaError(Exception):
    def __init__(self, key: str, index: int, detail: str = ""):
        self.key = key
        self.index = index
        msg = f"detection record {index}: bad or missing key {key!r}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


@dataclass
class ScanReport:
    tool_version: str
    scanned_files: int
    parse_errors: list[tuple[str, str]] = field(default_factory=list)
    detections: list[Detection] = field(default_factory=list)
    loc_by_file: dict[str, int] = field(default_factory=dict)
    config: dict = field(default_factory=dict)


_RECORD_KEYS = ("file_path", "cl", "me", "idiom", "compli_code", "simple_code", "lineno", "keyno")


def write_detection(d: Detection) -> dict:
    """One detection as a plain JSON-ready record."""
    return {
        "file_path": d.file_path,
        "cl": d.scope.class_name,
        "me": d.scope.function_name,
        "idiom": d.kind.value,
        "compli_code": list(d.compli_code),
        "simple_code": list(d.simple_code),
        "lineno": [r.as_pairs() for r in d.ranges],
        "keyno": None,
    }


def read_detection(record: dict, index: int) -> Detection:
    for key in _RECORD_KEYS:
        if key != "keyno" and key not in record:
            raise SchemaError(key, index)
    try:
        kind = SmellKind.from_label(record["idiom"])
    except ValueError as e:
        raise SchemaError("idiom", index, str(e)) from e
    try:
        ranges = [
            SourceRange(start[0], start[1], end[0], end[1])
            for start, end in record["lineno"]
        ]
    except (TypeError, ValueError, IndexError) as e:
        raise SchemaError("lineno", index, str(e)) from e
    if not ranges:
        raise SchemaError("lineno", index, "empty range list")
    return Detection(
        file_path=record["file_path"],
        scope=ScopeInfo(class_name=record["cl"], function_name=record["me"]),
        kind=kind,
        compli_code=list(record["compli_code"]),
        simple_code=list(record["simple_code"]),
        ranges=ranges,
    )


def report_to_json(report: ScanReport) -> dict:
    return {
        "tool_version": report.tool_version,
        "scanned_files": report.scanned_files,
        "parse_errors": [[path, message] for path, message in report.parse_errors],
        "detections": [write_detection(d) for d in report.detections],
        "loc_by_file": dict(sorted(report.loc_by_file.items())),
        "config": report.config,
    }


def dumps_report(report: ScanReport) -> str:
    """Stable serialization: sorted keys, two-space indent, trailing newline."""
    return json.dumps(report_to_json(report), sort_keys=True, indent=2) + "\n"


def write_report(report: ScanReport, path: str | Path) -> None:
    Path(path).write_text(dumps_report(report), encoding="utf-8")


def report_from_json(doc: dict) -> ScanReport:
    for key in ("tool_version", "scanned_files", "detections"):
        if key not in doc:
            raise SchemaError(key, -1)
    detections = [read_detection(rec, i) for i, rec in enumerate(doc["detections"])]
    return ScanReport(
        tool_version=doc["tool_version"],
        scanned_files=doc["scanned_files"],
        parse_errors=[(p, m) for p, m in doc.get("parse_errors", [])],
        detections=detections,
        loc_by_file=dict(doc.get("loc_by_file", {})),
        config=dict(doc.get("config", {})),
    )


def read_report(path: str | Path) -> ScanReport:
    """Parse a report file; unknown extra keys are ignored, missing ones raise."""
    doc = json.loads(Path(path).read_text(encoding="utf-8"))
    return report_from_json(doc)
