"""Funder-name matching against a funding-agency registry."""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

from ..registry.vocab import data_path

DEFAULT_JACCARD_THRESHOLD = 0.8


@dataclass(frozen=True)
class FunderEntry:
    funder_id: str
    canonical_name: str
    aliases: tuple[str, ...] = ()


def normalize_name(name: str) -> str:
    """Lowercase, punctuation stripped, whitespace collapsed."""
    cleaned = re.sub(r"[^a-z0-9]+", " ", name.lower())
    return " ".join(cleaned.split())


class FunderRegistry:
    def __init__(self, entries: list[FunderEntry]):
        self.entries = sorted(entries, key=lambda e: e.funder_id)
        self._exact: dict[str, FunderEntry] = {}
        for entry in self.entries:
            for form in (entry.canonical_name, *entry.aliases):
                self._exact.setdefault(normalize_name(form), entry)

    def __len__(self) -> int:
        return len(self.entries)

    def get(self, funder_id: str) -> FunderEntry | None:
        return next((e for e in self.entries if e.funder_id == funder_id), None)

    def ids(self) -> set[str]:
        return {e.funder_id for e in self.entries}


def load_funder_registry(path: str | Path | None = None) -> FunderRegistry:
    p = Path(path) if path is not None else data_path("funders.tsv")
    entries = []
    for raw in p.read_text(encoding="utf-8").splitlines():
        line = raw.rstrip("\n")
        if not line.strip() or line.startswith("#"):
            continue
        cols = line.split("\t")
        aliases = tuple(a.strip() for a in cols[2].split("|") if a.strip()) if len(cols) > 2 else ()
        entries.append(FunderEntry(funder_id=cols[0].strip(), canonical_name=cols[1].strip(), aliases=aliases))
    return FunderRegistry(entries)


def _jaccard(a: set[str], b: set[str]) -> float:
    if not a or not b:
        return 0.0
    return len(a & b) / len(a | b)


def match_funder_name(
    name: str,
    registry: FunderRegistry,
    threshold: float = DEFAULT_JACCARD_THRESHOLD,
) -> FunderEntry | None:
    """Exact match on normalized name/alias, else best token-Jaccard >= threshold."""
    normalized = normalize_name(name)
    exact = registry._exact.get(normalized)
    if exact is not None:
        return exact

    tokens = set(normalized.split())
    best: tuple[float, str, FunderEntry] | None = None
    for entry in registry.entries:
        for form in (entry.canonical_name, *entry.aliases):
            score = _jaccard(tokens, set(normalize_name(form).split()))
            if score >= threshold and (best is None or score > best[0]
                                       or (score == best[0] and entry.funder_id < best[1])):
                best = (score, entry.funder_id, entry)
    return best[2] if best else None
