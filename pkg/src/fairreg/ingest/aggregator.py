"""Aggregated tool-index dump parsing via registered field mappings."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from ..registry.model import Person, Release, SourceProvenance, ToolRecord

# Record fields a mapping may target; values are coerced to the field's shape.
_LIST_TARGETS = {
    "links",
    "source_repos",
    "languages",
    "platforms",
    "domains",
    "functions",
    "input_formats",
    "output_formats",
    "award_numbers",
}
_SCALAR_TARGETS = {"name", "description", "tool_type", "doi", "primary_publication"}


@dataclass(frozen=True)
class AggregatorFormat:
    """Column mapping from a source index's field names onto record fields."""

    format_id: str
    field_map: dict[str, str]


_FORMATS: dict[str, AggregatorFormat] = {}


def register_format(fmt: AggregatorFormat) -> None:
    _FORMATS[fmt.format_id] = fmt


def registered_formats() -> list[str]:
    return sorted(_FORMATS)


register_format(
    AggregatorFormat(
        format_id="generic",
        field_map={
            "name": "name",
            "description": "description",
            "homepage": "links",
            "repository": "source_repos",
            "language": "languages",
            "platform": "platforms",
            "domain": "domains",
            "function": "functions",
            "type": "tool_type",
            "doi": "doi",
        },
    )
)
register_format(
    AggregatorFormat(
        format_id="webtools",
        field_map={
            "title": "name",
            "summary": "description",
            "url": "links",
            "lang": "languages",
        },
    )
)


@dataclass(frozen=True)
class RowError:
    line: int
    message: str


@dataclass
class DumpReport:
    records: list[ToolRecord] = field(default_factory=list)
    errors: list[RowError] = field(default_factory=list)


def _apply_mapping(row: dict, fmt: AggregatorFormat) -> ToolRecord:
    record = ToolRecord()
    for src, dst in fmt.field_map.items():
        if src not in row or row[src] in (None, "", []):
            continue
        value = row[src]
        if dst in _LIST_TARGETS:
            items = value if isinstance(value, list) else [value]
            setattr(record, dst, [str(v) for v in items])
        elif dst in _SCALAR_TARGETS:
            setattr(record, dst, str(value))
        else:
            raise ValueError(f"format {fmt.format_id!r} maps to unsupported field {dst!r}")
    if "authors" in row:
        record.authors = [Person(name=str(a)) for a in row["authors"]]
    if "version" in row and row["version"]:
        record.releases = [Release(version=str(row["version"]), date=str(row.get("released", "")))]
    return record


def parse_index_dump(
    file: str | Path,
    format_id: str,
    retrieved_at: str = "",
) -> DumpReport:
    """Parse one JSON-lines dump; bad rows become report errors, not failures."""
    if format_id not in _FORMATS:
        raise KeyError(f"unknown aggregator format: {format_id!r}")
    fmt = _FORMATS[format_id]
    report = DumpReport()
    for lineno, raw in enumerate(Path(file).read_text(encoding="utf-8").splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            row = json.loads(line)
        except json.JSONDecodeError as exc:
            report.errors.append(RowError(lineno, f"invalid JSON: {exc.msg}"))
            continue
        try:
            record = _apply_mapping(row, fmt)
        except (TypeError, ValueError) as exc:
            report.errors.append(RowError(lineno, str(exc)))
            continue
        if not record.name:
            report.errors.append(RowError(lineno, "row has no name"))
            continue
        record.provenance = [
            SourceProvenance(source="aggregator", origin_ref=format_id, retrieved_at=retrieved_at)
        ]
        report.records.append(record)
    return report
