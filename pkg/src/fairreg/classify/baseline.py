"""Lexical TF-IDF nearest-centroid baseline (no thesaurus folding)."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from ..thesaurus.phrases import tokenize
from .topic import LabeledCorpus, Prediction, _normalized, _sparse_dot


@dataclass
class UnigramVectorizer:
    """Raw word-unigram tf-idf over a fixed training vocabulary."""

    vocab: dict[str, int] = field(default_factory=dict)
    df: dict[int, int] = field(default_factory=dict)
    doc_count: int = 0

    def fit(self, texts: list[str]) -> "UnigramVectorizer":
        self.doc_count = len(texts)
        for text in texts:
            seen = set()
            for token in tokenize(text):
                idx = self.vocab.setdefault(token, len(self.vocab))
                seen.add(idx)
            for idx in seen:
                self.df[idx] = self.df.get(idx, 0) + 1
        return self

    def idf(self, idx: int) -> float:
        n = max(self.doc_count, 1)
        return 1.0 + math.log(n / self.df.get(idx, 1))

    def vectorize(self, text: str) -> dict[int, float]:
        counts: dict[int, int] = {}
        for token in tokenize(text):
            idx = self.vocab.get(token)
            if idx is not None:
                counts[idx] = counts.get(idx, 0) + 1
        return _normalized({i: c * self.idf(i) for i, c in counts.items()})


class TfidfBaseline:
    """Same nearest-centroid contract as the topic model, unigram features."""

    def __init__(self, vectorizer: UnigramVectorizer,
                 centroids: dict[str, dict[int, float]], labels: list[str]):
        self.vectorizer = vectorizer
        self.centroids = centroids
        self.labels = labels

    def predict(self, doc_text: str) -> Prediction:
        vec = self.vectorizer.vectorize(doc_text)
        if not vec:
            return Prediction(label=None, score=0.0)
        best_label, best_score = None, -1.0
        for label in sorted(self.labels):
            score = _sparse_dot(vec, self.centroids[label])
            if score > best_score:
                best_label, best_score = label, score
        return Prediction(label=best_label, score=best_score)


def train_tfidf_baseline(corpus: LabeledCorpus) -> TfidfBaseline:
    if not corpus.items:
        raise ValueError("training corpus is empty")
    vectorizer = UnigramVectorizer().fit([text for text, _ in corpus.items])

    sums: dict[str, dict[int, float]] = {}
    members: dict[str, int] = {}
    nonzero: dict[str, int] = {}
    for text, label in corpus.items:
        vec = vectorizer.vectorize(text)
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
        centroids[label] = _normalized({i: w / members[label] for i, w in sums[label].items()})
    return TfidfBaseline(vectorizer, centroids, corpus.labels())
