"""Document and query vectors in thesaurus space.

Document text is greedily tokenized against the thesaurus surface map
(longest match first), synonym surface forms fold onto one canonical
dimension, and weights are tf x idf, L2-normalized. Queries skip idf:
matched phrases carry weight 1.0 and direct hypernyms/hyponyms join at a
reduced weight, so expansion only ever adds support.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from ..thesaurus import Thesaurus, tokenize

EXPANSION_WEIGHT = 0.4


@dataclass
class IdfTable:
    """Smoothed idf per canonical phrase index: 1 + ln(N / df).

    Unseen phrases are treated as df=1, so expansion terms and fresh
    documents still get positive weight. Doubling every document leaves the
    table unchanged, which keeps centroid training invariant to duplication.
    """

    doc_count: int = 0
    df: dict[int, int] = field(default_factory=dict)

    def idf(self, phrase_index: int) -> float:
        n = max(self.doc_count, 1)
        return 1.0 + math.log(n / self.df.get(phrase_index, 1))

    def to_dict(self) -> dict:
        return {"doc_count": self.doc_count, "df": {str(k): v for k, v in self.df.items()}}

    @classmethod
    def from_dict(cls, data: dict) -> "IdfTable":
        return cls(
            doc_count=int(data["doc_count"]),
            df={int(k): int(v) for k, v in data["df"].items()},
        )


@dataclass(frozen=True)
class DocumentVector:
    """Sparse vector over canonical phrase indices, bounded by the thesaurus size."""

    doc_id: str
    weights: dict[int, float]
    thesaurus_hash: str

    def dot(self, other: "DocumentVector") -> float:
        a, b = self.weights, other.weights
        if len(b) < len(a):
            a, b = b, a
        return sum(w * b[i] for i, w in a.items() if i in b)


def match_phrases(text: str, thesaurus: Thesaurus) -> dict[int, int]:
    """Greedy longest-match counts folded onto canonical phrase indices."""
    tokens = tokenize(text)
    counts: dict[int, int] = {}
    max_len = thesaurus.max_surface_tokens
    i, n = 0, len(tokens)
    while i < n:
        matched = False
        for length in range(min(max_len, n - i), 0, -1):
            surface = " ".join(tokens[i : i + length])
            canonical = thesaurus.canonical_of(surface)
            if canonical is not None:
                idx = thesaurus.index_of(canonical)
                counts[idx] = counts.get(idx, 0) + 1
                i += length
                matched = True
                break
        if not matched:
            i += 1
    return counts


def _normalized(weights: dict[int, float]) -> dict[int, float]:
    norm = math.sqrt(sum(w * w for w in weights.values()))
    if norm == 0.0:
        return {}
    return {i: w / norm for i, w in weights.items()}


def vectorize_document(doc_text: str, thesaurus: Thesaurus, idf: IdfTable,
                       doc_id: str = "") -> DocumentVector:
    counts = match_phrases(doc_text, thesaurus)
    weights = {i: c * idf.idf(i) for i, c in counts.items()}
    return DocumentVector(
        doc_id=doc_id,
        weights=_normalized(weights),
        thesaurus_hash=thesaurus.version_hash,
    )


def tokenize_and_expand_query(text: str, thesaurus: Thesaurus) -> DocumentVector:
    """Query vector: matched phrases at 1.0, 1-hop hyper/hyponyms at 0.4."""
    counts = match_phrases(text, thesaurus)
    weights: dict[int, float] = {i: 1.0 for i in counts}
    for idx in list(weights):
        canonical = thesaurus.phrases[idx]
        for related in thesaurus.hypernyms_of(canonical) + thesaurus.hyponyms_of(canonical):
            ridx = thesaurus.index_of(related)
            if ridx not in weights:
                weights[ridx] = EXPANSION_WEIGHT
    return DocumentVector(
        doc_id="query",
        weights=_normalized(weights),
        thesaurus_hash=thesaurus.version_hash,
    )


def cosine(a: DocumentVector, b: DocumentVector) -> float:
    """Both vectors are stored L2-normalized, so the dot product is the cosine."""
    return a.dot(b)
