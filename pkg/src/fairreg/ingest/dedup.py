"""Duplicate detection across ingestion sources.

Two records match when their case-folded names are equal or any of their
normalized link/repository URLs coincide; clusters are the transitive
closure of that relation.
"""

from __future__ import annotations

from ..registry.model import ToolRecord
from .publication import normalize_url


def _keys(record: ToolRecord) -> set[tuple[str, str]]:
    keys: set[tuple[str, str]] = set()
    if record.name and record.name.strip():
        keys.add(("name", record.name.strip().casefold()))
    for url in list(record.links) + list(record.source_repos):
        if url and url.strip():
            keys.add(("url", normalize_url(url)))
    return keys


def match_duplicates(candidates: list[ToolRecord]) -> list[list[ToolRecord]]:
    """Partition candidates into clusters of records naming the same tool."""
    parent = list(range(len(candidates)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i: int, j: int) -> None:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)

    by_key: dict[tuple[str, str], int] = {}
    for i, record in enumerate(candidates):
        for key in _keys(record):
            if key in by_key:
                union(i, by_key[key])
            else:
                by_key[key] = i

    clusters: dict[int, list[int]] = {}
    for i in range(len(candidates)):
        clusters.setdefault(find(i), []).append(i)
    return [
        [candidates[i] for i in members]
        for _, members in sorted(clusters.items())
    ]
