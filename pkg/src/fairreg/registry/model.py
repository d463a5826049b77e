"""Tool metadata model: the 27-field record schema plus registry bookkeeping.

Records carry the externally visible metadata fields (name, accession, links,
vocabulary-controlled classifications, people, publications, funding, releases,
formats, and workflow references) together with three internal fields: usage
metrics, source provenance, and a monotonically increasing revision number.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace

RID_PREFIX = "AZ"
_RID_RE = re.compile(r"^AZ([1-9][0-9]*)$")

# Ingestion source kinds, ordered by merge priority (lowest first).
SOURCE_AGGREGATOR = "aggregator"
SOURCE_PUBLICATION = "publication"
SOURCE_USER = "user_submission"
SOURCE_FUNDING = "funding_curation"
SOURCE_PRIORITY = {
    SOURCE_AGGREGATOR: 0,
    SOURCE_PUBLICATION: 1,
    SOURCE_USER: 2,
    SOURCE_FUNDING: 3,
}


def is_valid_rid(value: str) -> bool:
    """A resource id is ``AZ`` + a positive decimal integer, no leading zeros."""
    return bool(_RID_RE.match(value or ""))


def rid_number(value: str) -> int:
    m = _RID_RE.match(value or "")
    if not m:
        raise ValueError(f"not a resource id: {value!r}")
    return int(m.group(1))


def format_rid(n: int) -> str:
    if n < 1:
        raise ValueError("resource id integers start at 1")
    return f"{RID_PREFIX}{n}"


@dataclass(frozen=True)
class Person:
    name: str
    orcid: str | None = None


@dataclass(frozen=True)
class Release:
    version: str
    date: str  # ISO-8601 date


@dataclass(frozen=True)
class UsageMetrics:
    """Repository activity counters; zeros when no repository metadata exists."""

    forks: int = 0
    commits: int = 0


@dataclass(frozen=True)
class SourceProvenance:
    """Which ingestion source contributed to a record, and when."""

    source: str  # one of SOURCE_PRIORITY keys
    origin_ref: str
    retrieved_at: str  # ISO-8601 timestamp

    def priority(self) -> int:
        return SOURCE_PRIORITY[self.source]


@dataclass
class ToolRecord:
    """One registry entry.

    Fields before ``usage`` mirror the interchange schema in its canonical
    order; ``usage``/``provenance``/``revision``/``pending_refs`` are internal.
    Partially mined records may leave required fields empty until curated.
    """

    name: str = ""
    accession: str | None = None
    doi: str | None = None
    description: str = ""
    logo_url: list[str] = field(default_factory=list)
    image_urls: list[str] = field(default_factory=list)
    links: list[str] = field(default_factory=list)
    tool_type: str | None = None
    functions: list[str] = field(default_factory=list)
    source_repos: list[str] = field(default_factory=list)
    languages: list[str] = field(default_factory=list)
    authors: list[Person] = field(default_factory=list)
    pis: list[Person] = field(default_factory=list)
    institutions: list[str] = field(default_factory=list)
    primary_publication: str | None = None
    other_publications: list[str] = field(default_factory=list)
    funding_sources: list[str] = field(default_factory=list)
    award_numbers: list[str] = field(default_factory=list)
    domains: list[str] = field(default_factory=list)
    releases: list[Release] = field(default_factory=list)
    platforms: list[str] = field(default_factory=list)
    input_formats: list[str] = field(default_factory=list)
    output_formats: list[str] = field(default_factory=list)
    upstream_tools: list[str] = field(default_factory=list)
    downstream_tools: list[str] = field(default_factory=list)
    reimplementation_of: list[str] = field(default_factory=list)
    reimplemented_by: list[str] = field(default_factory=list)
    submitter: str | None = None
    usage: UsageMetrics = field(default_factory=UsageMetrics)
    provenance: list[SourceProvenance] = field(default_factory=list)
    revision: int = 1
    # Workflow references acknowledged as dangling (awaiting the referenced
    # tool's registration); validation tolerates exactly these.
    pending_refs: list[str] = field(default_factory=list)

    def copy(self) -> "ToolRecord":
        return replace(
            self,
            logo_url=list(self.logo_url),
            image_urls=list(self.image_urls),
            links=list(self.links),
            functions=list(self.functions),
            source_repos=list(self.source_repos),
            languages=list(self.languages),
            authors=list(self.authors),
            pis=list(self.pis),
            institutions=list(self.institutions),
            other_publications=list(self.other_publications),
            funding_sources=list(self.funding_sources),
            award_numbers=list(self.award_numbers),
            domains=list(self.domains),
            releases=list(self.releases),
            platforms=list(self.platforms),
            input_formats=list(self.input_formats),
            output_formats=list(self.output_formats),
            upstream_tools=list(self.upstream_tools),
            downstream_tools=list(self.downstream_tools),
            reimplementation_of=list(self.reimplementation_of),
            reimplemented_by=list(self.reimplemented_by),
            provenance=list(self.provenance),
            pending_refs=list(self.pending_refs),
        )

    def max_source_priority(self) -> int:
        if not self.provenance:
            return -1
        return max(p.priority() for p in self.provenance)

    def latest_retrieved_at(self) -> str:
        if not self.provenance:
            return ""
        return max(p.retrieved_at for p in self.provenance)


@dataclass(frozen=True)
class Revision:
    """One entry of a record's gapless edit history."""

    accession: str
    revision: int
    editor: str
    timestamp: str
    diff: dict  # field -> [old_value, new_value] over canonical values
