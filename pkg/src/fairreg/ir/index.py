"""Searchable snapshot of vectorized tool records.

A PhraseIndex is immutable once built: vectors, inverted postings, idf, and
filterable field values, all tied to one thesaurus version. Snapshots
serialize byte-deterministically so rebuilds from identical input are
identical files.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path

from ..errors import RebuildRequiredError
from ..registry.model import ToolRecord, rid_number
from ..registry.vocab import Vocabularies
from ..thesaurus import Thesaurus
from .vectorize import DocumentVector, IdfTable, match_phrases

FORMAT_TAG = "phrase-index/1"

FILTER_FIELDS = ("name", "tool_type", "domains", "platforms", "languages", "functions")
FIELD_ALIASES = {
    "domain": "domains",
    "platform": "platforms",
    "type": "tool_type",
    "language": "languages",
    "function": "functions",
}


def resolve_filter_field(name: str) -> str | None:
    name = name.lower()
    name = FIELD_ALIASES.get(name, name)
    return name if name in FILTER_FIELDS else None


def usage_score(forks: int, commits: int) -> float:
    """Log-damped repository activity used to break near-ties in ranking."""
    return math.log1p(forks) + math.log1p(commits)


def record_document_text(record: ToolRecord, vocabularies: Vocabularies | None = None) -> str:
    """The indexed text: name + description + function/domain labels."""
    parts = [record.name, record.description]
    for term_id in record.functions:
        if vocabularies is not None and term_id in vocabularies.functions:
            parts.append(vocabularies.functions.terms[term_id].label)
        else:
            parts.append(term_id)
    for term_id in record.domains:
        if vocabularies is not None and term_id in vocabularies.domains:
            parts.append(vocabularies.domains.terms[term_id].label)
        else:
            parts.append(term_id)
    return " ".join(p for p in parts if p)


@dataclass
class PhraseIndex:
    thesaurus_hash: str
    idf: IdfTable = field(default_factory=IdfTable)
    vectors: dict[str, DocumentVector] = field(default_factory=dict)
    postings: dict[int, list[str]] = field(default_factory=dict)
    field_store: dict[str, dict] = field(default_factory=dict)
    usage: dict[str, tuple[int, int]] = field(default_factory=dict)

    @property
    def doc_count(self) -> int:
        return len(self.vectors)

    def doc_ids(self) -> list[str]:
        return sorted(self.vectors, key=rid_number)

    def check_hash(self, other_hash: str, what: str) -> None:
        if other_hash != self.thesaurus_hash:
            raise RebuildRequiredError(
                f"{what} was built against thesaurus {other_hash[:12]}..., "
                f"index uses {self.thesaurus_hash[:12]}...; rebuild required"
            )

    # -- serialization -----------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "format": FORMAT_TAG,
            "thesaurus_hash": self.thesaurus_hash,
            "doc_count": self.doc_count,
            "idf": self.idf.to_dict(),
            "vectors": {
                rid: {str(i): w for i, w in sorted(vec.weights.items())}
                for rid, vec in sorted(self.vectors.items())
            },
            "postings": {str(i): list(rids) for i, rids in sorted(self.postings.items())},
            "field_store": {rid: vals for rid, vals in sorted(self.field_store.items())},
            "usage": {rid: list(u) for rid, u in sorted(self.usage.items())},
        }

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, sort_keys=True, indent=1)

    def save(self, path: str | Path) -> None:
        Path(path).write_text(self.dumps(), encoding="utf-8")

    @classmethod
    def from_dict(cls, data: dict) -> "PhraseIndex":
        if data.get("format") != FORMAT_TAG:
            raise ValueError(f"unsupported index format {data.get('format')!r}")
        thash = data["thesaurus_hash"]
        index = cls(thesaurus_hash=thash, idf=IdfTable.from_dict(data["idf"]))
        index.vectors = {
            rid: DocumentVector(
                doc_id=rid,
                weights={int(i): float(w) for i, w in weights.items()},
                thesaurus_hash=thash,
            )
            for rid, weights in data["vectors"].items()
        }
        index.postings = {int(i): list(rids) for i, rids in data["postings"].items()}
        index.field_store = dict(data["field_store"])
        index.usage = {rid: (int(u[0]), int(u[1])) for rid, u in data["usage"].items()}
        return index

    @classmethod
    def load(cls, path: str | Path) -> "PhraseIndex":
        return cls.from_dict(json.loads(Path(path).read_text(encoding="utf-8")))


def build_index(
    records: list[ToolRecord],
    thesaurus: Thesaurus,
    vocabularies: Vocabularies | None = None,
) -> PhraseIndex:
    """Vectorize records into a fresh searchable snapshot."""
    index = PhraseIndex(thesaurus_hash=thesaurus.version_hash)

    ordered = sorted(records, key=lambda r: rid_number(r.accession))
    counts_by_rid: dict[str, dict[int, int]] = {}
    df: dict[int, int] = {}
    for record in ordered:
        counts = match_phrases(record_document_text(record, vocabularies), thesaurus)
        counts_by_rid[record.accession] = counts
        for idx in counts:
            df[idx] = df.get(idx, 0) + 1

    index.idf = IdfTable(doc_count=len(ordered), df=df)
    for record in ordered:
        rid = record.accession
        counts = counts_by_rid[rid]
        weights = {i: c * index.idf.idf(i) for i, c in counts.items()}
        norm = math.sqrt(sum(w * w for w in weights.values()))
        vec = DocumentVector(
            doc_id=rid,
            weights={i: w / norm for i, w in weights.items()} if norm else {},
            thesaurus_hash=thesaurus.version_hash,
        )
        index.vectors[rid] = vec
        for i in vec.weights:
            index.postings.setdefault(i, []).append(rid)
        index.field_store[rid] = {
            "name": record.name,
            "tool_type": record.tool_type,
            "domains": list(record.domains),
            "platforms": list(record.platforms),
            "languages": list(record.languages),
            "functions": list(record.functions),
        }
        index.usage[rid] = (record.usage.forks, record.usage.commits)

    for i in index.postings:
        index.postings[i].sort(key=rid_number)
    return index
