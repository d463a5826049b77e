"""Field-wise merging of records matched as the same tool.

Curated data beats mined data: funding_curation > user_submission >
publication > aggregator. Within equal priority the record with the newer
latest retrieval wins. Empty values always lose; list fields are unioned
with order-preserving dedup; provenance is unioned.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import MergeConflictError
from .model import SOURCE_PRIORITY, ToolRecord, UsageMetrics

_SCALAR_FIELDS = ("name", "doi", "description", "tool_type", "primary_publication", "submitter")
_LIST_FIELDS = (
    "logo_url",
    "image_urls",
    "links",
    "functions",
    "source_repos",
    "languages",
    "authors",
    "pis",
    "institutions",
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
    "pending_refs",
)


@dataclass(frozen=True)
class MergePolicy:
    source_priority: dict = field(default_factory=lambda: dict(SOURCE_PRIORITY))


def _priority(record: ToolRecord, policy: MergePolicy) -> int:
    if not record.provenance:
        return -1
    return max(policy.source_priority[p.source] for p in record.provenance)


def _winner(a: ToolRecord, b: ToolRecord, policy: MergePolicy) -> tuple[ToolRecord, ToolRecord]:
    pa, pb = _priority(a, policy), _priority(b, policy)
    if pa != pb:
        return (a, b) if pa > pb else (b, a)
    ta, tb = a.latest_retrieved_at(), b.latest_retrieved_at()
    if ta != tb:
        return (a, b) if ta > tb else (b, a)
    return a, b


def _union(first: list, second: list) -> list:
    out = []
    seen = []
    for item in list(first) + list(second):
        if item not in seen:
            seen.append(item)
            out.append(item)
    return out


def merge_records(a: ToolRecord, b: ToolRecord, policy: MergePolicy | None = None) -> ToolRecord:
    """Merge two matched records into one; raises on conflicting accessions."""
    policy = policy or MergePolicy()
    if a.accession and b.accession and a.accession != b.accession:
        raise MergeConflictError(
            f"records carry distinct accessions {a.accession} and {b.accession}"
        )

    base = a if a.revision >= b.revision else b
    winner, loser = _winner(a, b, policy)

    merged = base.copy()
    merged.accession = a.accession or b.accession
    merged.revision = base.revision

    for name in _SCALAR_FIELDS:
        w, l = getattr(winner, name), getattr(loser, name)
        value = w if w not in (None, "") else l
        setattr(merged, name, value)

    for name in _LIST_FIELDS:
        setattr(merged, name, _union(getattr(winner, name), getattr(loser, name)))

    merged.usage = UsageMetrics(
        forks=max(a.usage.forks, b.usage.forks),
        commits=max(a.usage.commits, b.usage.commits),
    )
    merged.provenance = _union(a.provenance, b.provenance)
    return merged
