"""Nearest-centroid topic classification in thesaurus space."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from ..errors import RebuildRequiredError
from ..ir.vectorize import IdfTable, match_phrases
from ..thesaurus import Thesaurus


@dataclass
class LabeledCorpus:
    """(document text, domain label) pairs for training or evaluation."""

    items: list[tuple[str, str]] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.items)

    def labels(self) -> list[str]:
        seen: list[str] = []
        for _, label in self.items:
            if label not in seen:
                seen.append(label)
        return seen

    def validate_labels(self, allowed: set[str]) -> None:
        unknown = {label for _, label in self.items if label not in allowed}
        if unknown:
            raise ValueError(f"labels outside the configured domain list: {sorted(unknown)}")


@dataclass(frozen=True)
class Prediction:
    label: str | None  # None = unclassifiable (zero document vector)
    score: float


def _normalized(weights: dict[int, float]) -> dict[int, float]:
    norm = math.sqrt(sum(w * w for w in weights.values()))
    return {i: w / norm for i, w in weights.items()} if norm else {}


def _sparse_dot(a: dict[int, float], b: dict[int, float]) -> float:
    if len(b) < len(a):
        a, b = b, a
    return sum(w * b[i] for i, w in a.items() if i in b)


class TopicModel:
    """Per-domain centroids over thesaurus-space document vectors."""

    def __init__(self, thesaurus: Thesaurus, idf: IdfTable,
                 centroids: dict[str, dict[int, float]], labels: list[str]):
        self.thesaurus = thesaurus
        self.thesaurus_hash = thesaurus.version_hash
        self.idf = idf
        self.centroids = centroids
        self.labels = labels

    def _vector(self, doc_text: str) -> dict[int, float]:
        counts = match_phrases(doc_text, self.thesaurus)
        return _normalized({i: c * self.idf.idf(i) for i, c in counts.items()})

    def predict(self, doc_text: str) -> Prediction:
        vec = self._vector(doc_text)
        if not vec:
            return Prediction(label=None, score=0.0)
        best_label, best_score = None, -1.0
        for label in sorted(self.labels):
            score = _sparse_dot(vec, self.centroids[label])
            if score > best_score:
                best_label, best_score = label, score
        return Prediction(label=best_label, score=best_score)


def train_topic_model(corpus: LabeledCorpus, thesaurus: Thesaurus) -> TopicModel:
    """Centroid per label = normalized mean of its documents' vectors."""
    if not corpus.items:
        raise ValueError("training corpus is empty")

    df: dict[int, int] = {}
    counts_per_doc = []
    for text, label in corpus.items:
        counts = match_phrases(text, thesaurus)
        counts_per_doc.append((counts, label))
        for i in counts:
            df[i] = df.get(i, 0) + 1
    idf = IdfTable(doc_count=len(corpus.items), df=df)

    sums: dict[str, dict[int, float]] = {}
    members: dict[str, int] = {}
    nonzero: dict[str, int] = {}
    for counts, label in counts_per_doc:
        vec = _normalized({i: c * idf.idf(i) for i, c in counts.items()})
        acc = sums.setdefault(label, {})
        members[label] = members.get(label, 0) + 1
        if vec:
            nonzero[label] = nonzero.get(label, 0) + 1
        for i, w in vec.items():
            acc[i] = acc.get(i, 0.0) + w

    centroids: dict[str, dict[int, float]] = {}
    for label in sorted(sums):
        if nonzero.get(label, 0) == 0:
            raise ValueError(f"every document of label {label!r} vectorizes to zero")
        mean = {i: w / members[label] for i, w in sums[label].items()}
        centroids[label] = _normalized(mean)

    return TopicModel(thesaurus, idf, centroids, corpus.labels())


def predict_topic(doc_text: str, model: TopicModel) -> Prediction:
    """Best-label prediction; ties fall to the lexicographically first label."""
    if model.thesaurus.version_hash != model.thesaurus_hash:
        raise RebuildRequiredError("topic model was trained against a different thesaurus")
    return model.predict(doc_text)
