"""Evaluation harness for topic classifiers: accuracy, per-class, confusion."""

from __future__ import annotations

from dataclasses import dataclass, field

from .topic import LabeledCorpus

UNCLASSIFIED = "(none)"


@dataclass
class EvalReport:
    accuracy: float
    per_class: dict[str, dict[str, float]]  # label -> precision/recall/support
    confusion: dict[str, dict[str, int]]  # true label -> predicted label -> count
    total: int = 0
    labels: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "accuracy": self.accuracy,
            "total": self.total,
            "labels": list(self.labels),
            "per_class": self.per_class,
            "confusion": self.confusion,
        }

    def table(self) -> str:
        lines = [f"accuracy: {self.accuracy:.3f}  (n={self.total})"]
        width = max((len(label) for label in self.labels), default=5)
        lines.append(f"{'label'.ljust(width)}  precision  recall  support")
        for label in self.labels:
            stats = self.per_class[label]
            lines.append(
                f"{label.ljust(width)}  {stats['precision']:9.3f}  {stats['recall']:6.3f}"
                f"  {int(stats['support']):7d}"
            )
        return "\n".join(lines)


def evaluate(model, heldout: LabeledCorpus) -> EvalReport:
    """Score a model on held-out items; unclassifiable predictions count as wrong."""
    if not heldout.items:
        raise ValueError("held-out corpus is empty")

    labels = sorted({label for _, label in heldout.items})
    pred_labels = labels + [UNCLASSIFIED]
    confusion = {t: {p: 0 for p in pred_labels} for t in labels}

    for text, true_label in heldout.items:
        prediction = model.predict(text)
        predicted = prediction.label if prediction.label is not None else UNCLASSIFIED
        if predicted not in confusion[true_label]:
            confusion[true_label][predicted] = 0
        confusion[true_label][predicted] += 1

    total = len(heldout.items)
    correct = sum(confusion[label][label] for label in labels)

    per_class = {}
    for label in labels:
        support = sum(confusion[label].values())
        predicted_as = sum(confusion[t].get(label, 0) for t in labels)
        tp = confusion[label][label]
        per_class[label] = {
            "precision": tp / predicted_as if predicted_as else 0.0,
            "recall": tp / support if support else 0.0,
            "support": float(support),
        }

    return EvalReport(
        accuracy=correct / total,
        per_class=per_class,
        confusion=confusion,
        total=total,
        labels=labels,
    )
