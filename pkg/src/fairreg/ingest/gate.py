"""Tool/non-tool publication gate.

The gate is a pluggable scorer; the shipped baseline is a logistic model
over thesaurus-space features, trained by full-batch gradient descent so
identical fixtures always produce identical weights.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import UntrainedModelError
from ..ir.vectorize import IdfTable, vectorize_document
from ..thesaurus import Thesaurus
from .publication import PublicationRecord

DECISION_THRESHOLD = 0.5


@dataclass(frozen=True)
class ToolLabel:
    is_tool: bool
    score: float


class PublicationGate:
    """Interface: score(pub) in [0, 1]; >= 0.5 means tool publication."""

    def score(self, pub: PublicationRecord) -> float:
        raise NotImplementedError

    def classify(self, pub: PublicationRecord) -> ToolLabel:
        score = self.score(pub)
        return ToolLabel(is_tool=score >= DECISION_THRESHOLD, score=score)


class LogisticGate(PublicationGate):
    """Logistic regression over normalized thesaurus-vector features."""

    def __init__(self, thesaurus: Thesaurus):
        self.thesaurus = thesaurus
        # Uniform idf: features are pure L2-normalized phrase counts.
        self._idf = IdfTable(doc_count=0, df={})
        self.weights: np.ndarray | None = None
        self.bias: float = 0.0

    def _features(self, pub: PublicationRecord) -> np.ndarray:
        vec = vectorize_document(pub.text(), self.thesaurus, self._idf)
        dense = np.zeros(len(self.thesaurus))
        for idx, w in vec.weights.items():
            dense[idx] = w
        return dense

    def train(
        self,
        pubs: list[PublicationRecord],
        labels: list[bool],
        learning_rate: float = 0.5,
        epochs: int = 500,
        l2: float = 1e-4,
    ) -> "LogisticGate":
        if len(pubs) != len(labels) or not pubs:
            raise ValueError("need one label per training publication")
        x = np.stack([self._features(p) for p in pubs])
        y = np.asarray(labels, dtype=float)
        w = np.zeros(x.shape[1])
        b = 0.0
        n = len(y)
        for _ in range(epochs):
            z = x @ w + b
            p = 1.0 / (1.0 + np.exp(-z))
            grad_w = x.T @ (p - y) / n + l2 * w
            grad_b = float(np.mean(p - y))
            w -= learning_rate * grad_w
            b -= learning_rate * grad_b
        self.weights = w
        self.bias = b
        return self

    def score(self, pub: PublicationRecord) -> float:
        if self.weights is None:
            raise UntrainedModelError("gate has not been trained")
        z = float(self._features(pub) @ self.weights + self.bias)
        return float(1.0 / (1.0 + np.exp(-z)))
