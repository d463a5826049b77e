import json
import math
from pathlib import Path

import pytest

from fairreg.errors import UntrainedModelError
from fairreg.ingest import LogisticGate, PublicationRecord
from fairreg.registry import load_stopwords
from fairreg.registry.vocab import data_path
from fairreg.thesaurus import ThesaurusConfig, build_thesaurus

FIXTURES = Path(__file__).parent / "fixtures"


def load_labeled(path):
    rows = [json.loads(l) for l in Path(path).read_text().splitlines() if l.strip()]
    pubs = [PublicationRecord.from_dict(r["pub"]) for r in rows]
    labels = [bool(r["is_tool"]) for r in rows]
    return pubs, labels


@pytest.fixture(scope="module")
def trained_gate():
    pubs, labels = load_labeled(data_path("gate_training.jsonl"))
    thesaurus = build_thesaurus(
        [p.text() for p in pubs],
        config=ThesaurusConfig(min_count=2, stopwords=frozenset(load_stopwords())),
    )
    gate = LogisticGate(thesaurus).train(pubs, labels)
    return gate, pubs, labels


def test_untrained_gate_errors():
    thesaurus = build_thesaurus(["tool software"] * 5)
    with pytest.raises(UntrainedModelError):
        LogisticGate(thesaurus).score(PublicationRecord(pub_id="x", title="t"))


def test_training_points_are_memorized(trained_gate):
    gate, pubs, labels = trained_gate
    predictions = [gate.classify(p).is_tool for p in pubs]
    assert predictions == labels


def test_empty_text_scores_from_bias_only(trained_gate):
    gate, _, _ = trained_gate
    empty = PublicationRecord(pub_id="e", title="", abstract="")
    expected = 1.0 / (1.0 + math.exp(-gate.bias))
    assert gate.score(empty) == pytest.approx(expected, abs=1e-12)


def test_threshold_defines_label(trained_gate):
    gate, pubs, _ = trained_gate
    label = gate.classify(pubs[0])
    assert label.is_tool == (label.score >= 0.5)
    assert 0.0 <= label.score <= 1.0


def test_heldout_accuracy_at_least_point_nine(trained_gate):
    gate, _, _ = trained_gate
    pubs, labels = load_labeled(FIXTURES / "gate_heldout.jsonl")
    assert len(pubs) == 20
    correct = sum(gate.classify(p).is_tool == y for p, y in zip(pubs, labels))
    assert correct / len(pubs) >= 0.9


def test_deterministic_scores(trained_gate):
    gate, pubs, _ = trained_gate
    assert gate.score(pubs[0]) == gate.score(pubs[0])
