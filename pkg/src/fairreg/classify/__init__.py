"""Topic classification of tool descriptions with an evaluation harness."""

from .baseline import TfidfBaseline, UnigramVectorizer, train_tfidf_baseline
from .benchmark import (
    DOMAIN_ANCHORS,
    Benchmark,
    benchmark_ontology,
    generate_benchmark,
)
from .evaluate import UNCLASSIFIED, EvalReport, evaluate
from .topic import LabeledCorpus, Prediction, TopicModel, predict_topic, train_topic_model

__all__ = [
    "Benchmark",
    "DOMAIN_ANCHORS",
    "EvalReport",
    "LabeledCorpus",
    "Prediction",
    "TfidfBaseline",
    "TopicModel",
    "UNCLASSIFIED",
    "UnigramVectorizer",
    "benchmark_ontology",
    "evaluate",
    "generate_benchmark",
    "predict_topic",
    "train_tfidf_baseline",
    "train_topic_model",
]
