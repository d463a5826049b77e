"""Canonical record serialization: fixed key order, deterministic bytes.

The canonical form is what interchange files, revision diffs, and replay
checks operate on, so it must be byte-stable for equal records.
"""

from __future__ import annotations

import json

from .model import Person, Release, SourceProvenance, ToolRecord, UsageMetrics

# Interchange key order: the metadata schema's own ordering, then internals.
CANONICAL_FIELDS = [
    "name",
    "accession",
    "doi",
    "description",
    "logo_url",
    "image_urls",
    "links",
    "tool_type",
    "functions",
    "source_repos",
    "languages",
    "authors",
    "pis",
    "institutions",
    "primary_publication",
    "other_publications",
    "funding_sources",
    "award_numbers",
    "domains",
    "releases",
    "platforms",
    "input_formats",
    "output_formats",
    "upstream_tools",
    "downstream_tools",
    "reimplementation_of",
    "reimplemented_by",
    "submitter",
    "usage",
    "provenance",
    "pending_refs",
    "revision",
]

_LIST_OF_STR = {
    "logo_url",
    "image_urls",
    "links",
    "functions",
    "source_repos",
    "languages",
    "institutions",
    "other_publications",
    "funding_sources",
    "award_numbers",
    "domains",
    "platforms",
    "input_formats",
    "output_formats",
    "upstream_tools",
    "downstream_tools",
    "reimplementation_of",
    "reimplemented_by",
    "pending_refs",
}


def _person_dict(p: Person) -> dict:
    return {"name": p.name, "orcid": p.orcid}


def _release_dict(r: Release) -> dict:
    return {"version": r.version, "date": r.date}


def canonical_dict(record: ToolRecord) -> dict:
    """Plain-JSON view of a record, keys in canonical order."""
    out: dict = {}
    for key in CANONICAL_FIELDS:
        value = getattr(record, key)
        if key in ("authors", "pis"):
            out[key] = [_person_dict(p) for p in value]
        elif key == "releases":
            out[key] = [_release_dict(r) for r in value]
        elif key == "usage":
            out[key] = {"forks": value.forks, "commits": value.commits}
        elif key == "provenance":
            entries = [
                {"source": p.source, "origin_ref": p.origin_ref, "retrieved_at": p.retrieved_at}
                for p in value
            ]
            entries.sort(key=lambda e: (e["source"], e["origin_ref"], e["retrieved_at"]))
            out[key] = entries
        elif key in _LIST_OF_STR:
            out[key] = list(value)
        else:
            out[key] = value
    return out


def canonical_bytes(record: ToolRecord) -> bytes:
    return dumps_canonical(canonical_dict(record))


def dumps_canonical(cdict: dict) -> bytes:
    return json.dumps(cdict, ensure_ascii=False, separators=(",", ":")).encode("utf-8")


def empty_canonical_dict() -> dict:
    """The null record every revision history starts from."""
    return {key: None for key in CANONICAL_FIELDS}


def record_from_dict(data: dict) -> ToolRecord:
    """Inverse of :func:`canonical_dict`; tolerates missing optional keys."""
    kwargs: dict = {}
    for key in CANONICAL_FIELDS:
        if key not in data or data[key] is None:
            continue
        value = data[key]
        if key in ("authors", "pis"):
            kwargs[key] = [Person(name=p["name"], orcid=p.get("orcid")) for p in value]
        elif key == "releases":
            kwargs[key] = [Release(version=r["version"], date=r["date"]) for r in value]
        elif key == "usage":
            kwargs[key] = UsageMetrics(forks=value.get("forks", 0), commits=value.get("commits", 0))
        elif key == "provenance":
            kwargs[key] = [
                SourceProvenance(
                    source=p["source"],
                    origin_ref=p["origin_ref"],
                    retrieved_at=p["retrieved_at"],
                )
                for p in value
            ]
        else:
            kwargs[key] = value
    return ToolRecord(**kwargs)


def diff_dicts(old: dict, new: dict) -> dict:
    """Field-level diff between two canonical dicts: field -> [old, new]."""
    out = {}
    for key in CANONICAL_FIELDS:
        o = old.get(key)
        n = new.get(key)
        if o != n:
            out[key] = [o, n]
    return out


def apply_diff(cdict: dict, diff: dict) -> dict:
    """Apply a stored diff; raises if the base does not match the diff's old side."""
    out = dict(cdict)
    for key, (old, new) in diff.items():
        if out.get(key) != old:
            raise ValueError(f"diff does not apply cleanly at field {key!r}")
        out[key] = new
    return {key: out.get(key) for key in CANONICAL_FIELDS}


def replay(diffs: list[dict]) -> dict:
    """Rebuild a record's canonical dict by replaying its history from null."""
    state = empty_canonical_dict()
    for diff in diffs:
        state = apply_diff(state, diff)
    return state


def to_jsonl(records) -> str:
    """One canonical record per line."""
    return "\n".join(dumps_canonical(canonical_dict(r)).decode("utf-8") for r in records) + "\n"


def from_jsonl(text: str) -> list[ToolRecord]:
    records = []
    for line in text.splitlines():
        line = line.strip()
        if line:
            records.append(record_from_dict(json.loads(line)))
    return records
