"""Record validation against the 27-field schema and its controlled vocabularies.

Every failure becomes a report entry naming the field and the violated rule;
nothing raises. An empty report means the record is valid.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from datetime import date
from urllib.parse import urlparse

from .model import ToolRecord, is_valid_rid
from .vocab import Vocabularies

ORCID_RE = re.compile(r"^\d{4}-\d{4}-\d{4}-\d{3}[\dX]$")
DOI_RE = re.compile(r"^10\.\d{4,9}/\S+$")


def orcid_checksum_ok(orcid: str) -> bool:
    """ISO 7064 mod 11-2 check digit over the 15 leading digits."""
    digits = orcid.replace("-", "")
    total = 0
    for ch in digits[:-1]:
        total = (total + int(ch)) * 2
    check = (12 - total % 11) % 11
    expected = "X" if check == 10 else str(check)
    return digits[-1] == expected


def is_valid_orcid(orcid: str) -> bool:
    return bool(ORCID_RE.match(orcid)) and orcid_checksum_ok(orcid)


def is_valid_url(url: str) -> bool:
    parsed = urlparse(url)
    return parsed.scheme in ("http", "https") and bool(parsed.netloc)


def is_valid_doi(doi: str) -> bool:
    return bool(DOI_RE.match(doi))


def _is_iso_date(value: str) -> bool:
    try:
        date.fromisoformat(value)
        return True
    except (TypeError, ValueError):
        return False


@dataclass(frozen=True)
class FieldSpec:
    """One schema entry: which record attributes it covers and its rules."""

    name: str
    required: bool
    attrs: tuple[str, ...]
    vocabulary: str | None = None  # vocabulary bundle attribute, if controlled


# Exactly the schema's 27 entries in order. The logo/image pair shares one
# entry (both optional URL lists); every other row maps one to one.
FIELD_SPECS: tuple[FieldSpec, ...] = (
    FieldSpec("name", True, ("name",)),
    FieldSpec("accession", True, ("accession",)),
    FieldSpec("doi", False, ("doi",)),
    FieldSpec("description", True, ("description",)),
    FieldSpec("logo_url/image_urls", False, ("logo_url", "image_urls")),
    FieldSpec("links", True, ("links",)),
    FieldSpec("tool_type", True, ("tool_type",), vocabulary="tool_types"),
    FieldSpec("functions", True, ("functions",), vocabulary="functions"),
    FieldSpec("source_repos", False, ("source_repos",)),
    FieldSpec("languages", False, ("languages",), vocabulary="languages"),
    FieldSpec("authors", True, ("authors",)),
    FieldSpec("pis", False, ("pis",)),
    FieldSpec("institutions", False, ("institutions",), vocabulary="organizations"),
    FieldSpec("primary_publication", False, ("primary_publication",)),
    FieldSpec("other_publications", False, ("other_publications",)),
    FieldSpec("funding_sources", False, ("funding_sources",), vocabulary="funders"),
    FieldSpec("award_numbers", False, ("award_numbers",)),
    FieldSpec("domains", True, ("domains",), vocabulary="domains"),
    FieldSpec("releases", True, ("releases",)),
    FieldSpec("platforms", True, ("platforms",), vocabulary="platforms"),
    FieldSpec("input_formats", False, ("input_formats",), vocabulary="formats"),
    FieldSpec("output_formats", False, ("output_formats",), vocabulary="formats"),
    FieldSpec("upstream_tools", False, ("upstream_tools",)),
    FieldSpec("downstream_tools", False, ("downstream_tools",)),
    FieldSpec("reimplementation_of", False, ("reimplementation_of",)),
    FieldSpec("reimplemented_by", False, ("reimplemented_by",)),
    FieldSpec("submitter", False, ("submitter",)),
)

REQUIRED_FIELDS = tuple(spec.name for spec in FIELD_SPECS if spec.required)

_URL_LIST_FIELDS = {"logo_url", "image_urls", "links", "source_repos"}
_RID_LIST_FIELDS = {"upstream_tools", "downstream_tools", "reimplementation_of", "reimplemented_by"}
_DOI_LIST_FIELDS = {"other_publications"}


@dataclass(frozen=True)
class Violation:
    field: str
    rule: str
    message: str = ""

    def __str__(self) -> str:
        suffix = f": {self.message}" if self.message else ""
        return f"{self.field} [{self.rule}]{suffix}"


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, field_name: str, rule: str, message: str = "") -> None:
        self.violations.append(Violation(field_name, rule, message))

    def fields(self) -> set[str]:
        return {v.field for v in self.violations}

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "violations": [
                {"field": v.field, "rule": v.rule, "message": v.message} for v in self.violations
            ],
        }


def _is_empty(value) -> bool:
    if value is None:
        return True
    if isinstance(value, str):
        return not value.strip()
    if isinstance(value, (list, tuple)):
        return len(value) == 0
    return False


def _vocab_ids(vocabularies: Vocabularies, name: str):
    bundle = getattr(vocabularies, name)
    if isinstance(bundle, set):
        return bundle
    return bundle.terms.keys()


def _check_people(report: ValidationReport, field_name: str, people) -> None:
    for person in people:
        if not person.name or not person.name.strip():
            report.add(field_name, "format", "person name must be non-empty")
        if person.orcid is not None and not is_valid_orcid(person.orcid):
            report.add(field_name, "orcid", f"invalid ORCID {person.orcid!r}")


def validate_record(
    record: ToolRecord,
    vocabularies: Vocabularies,
    require_accession: bool = True,
) -> ValidationReport:
    """Check one record; submissions pending mint pass require_accession=False."""
    report = ValidationReport()

    for spec in FIELD_SPECS:
        values = {attr: getattr(record, attr) for attr in spec.attrs}

        if spec.required and all(_is_empty(v) for v in values.values()):
            if not (spec.name == "accession" and not require_accession):
                report.add(spec.name, "required", "required field is missing or empty")
            continue

        if spec.name == "accession":
            if record.accession is not None and not is_valid_rid(record.accession):
                report.add("accession", "format", f"bad resource id {record.accession!r}")
            continue

        if spec.vocabulary is not None:
            valid_ids = _vocab_ids(vocabularies, spec.vocabulary)
            for attr, value in values.items():
                entries = [value] if isinstance(value, str) else (value or [])
                for entry in entries:
                    if entry not in valid_ids:
                        report.add(spec.name, "vocabulary", f"unknown id {entry!r}")

        for attr, value in values.items():
            if attr in _URL_LIST_FIELDS:
                for url in value or []:
                    if not is_valid_url(url):
                        report.add(spec.name, "url", f"not an absolute http(s) URL: {url!r}")
            elif attr in _RID_LIST_FIELDS:
                for rid in value or []:
                    if not is_valid_rid(rid):
                        report.add(spec.name, "format", f"bad resource id {rid!r}")
                    elif (
                        vocabularies.resource_ids is not None
                        and rid not in vocabularies.resource_ids
                        and rid not in record.pending_refs
                    ):
                        report.add(spec.name, "reference", f"dangling reference {rid!r}")
            elif attr in _DOI_LIST_FIELDS:
                for doi in value or []:
                    if not is_valid_doi(doi):
                        report.add(spec.name, "doi", f"not a DOI: {doi!r}")
            elif attr in ("doi", "primary_publication"):
                if value is not None and not is_valid_doi(value):
                    report.add(spec.name, "doi", f"not a DOI: {value!r}")
            elif attr in ("authors", "pis"):
                _check_people(report, spec.name, value)
            elif attr == "releases":
                for release in value or []:
                    if not release.version or not release.version.strip():
                        report.add(spec.name, "format", "release version must be non-empty")
                    if not _is_iso_date(release.date):
                        report.add(spec.name, "format", f"bad release date {release.date!r}")

    if record.usage.forks < 0 or record.usage.commits < 0:
        report.add("usage", "format", "usage metrics must be non-negative")
    if record.revision < 1:
        report.add("revision", "format", "revision numbers start at 1")

    return report
