"""Synonym-paraphrase benchmark for the thesaurus vs lexical comparison.

Five biomedical domains, forty documents each, split 50/50. Training and
most test documents use each domain's canonical anchor phrases; a fixed
slice of test documents swaps every anchor for its synonym surface form.
A lexical unigram model loses signal on the swapped documents; thesaurus
folding keeps them on the same dimensions.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from ..thesaurus import OntologyGraph, OntologyTerm, Thesaurus, ThesaurusConfig, build_thesaurus
from .topic import LabeledCorpus

DOCS_PER_DOMAIN = 40
TRAIN_PER_DOMAIN = 20
PARAPHRASE_TEST_DOCS = 4  # per domain, out of 20 test docs
ANCHORS_PER_DOC = 4

DOMAIN_ANCHORS: dict[str, list[tuple[str, str]]] = {
    "genomics": [
        ("genome assembly", "contig construction"),
        ("variant calling", "mutation screening"),
        ("read mapping", "short-read placement"),
        ("rna-seq", "rnaseq"),
        ("snp", "polymorphism"),
        ("exome capture", "target enrichment"),
    ],
    "proteomics": [
        ("mass spectrometry", "ms profiling"),
        ("peptide identification", "spectrum matching"),
        ("protein quantification", "abundance measurement"),
        ("proteome coverage", "protein census"),
        ("spectral library", "reference spectra"),
        ("post-translational modification", "ptm"),
    ],
    "imaging": [
        ("image segmentation", "region partitioning"),
        ("microscopy", "micrograph acquisition"),
        ("image registration", "spatial alignment"),
        ("denoising", "noise suppression"),
        ("cell counting", "cytometry"),
        ("fluorescence imaging", "optical labeling"),
    ],
    "text_mining": [
        ("named entity recognition", "concept tagging"),
        ("relation extraction", "association mining"),
        ("document corpus", "literature collection"),
        ("tokenization", "text chunking"),
        ("abstract screening", "citation triage"),
        ("topic modeling", "theme discovery"),
    ],
    "machine_learning": [
        ("neural network", "deep architecture"),
        ("feature selection", "attribute ranking"),
        ("cross-validation", "holdout evaluation"),
        ("hyperparameter tuning", "parameter search"),
        ("ensemble learning", "model averaging"),
        ("gradient descent", "loss minimization"),
    ],
}

FILLER = [
    "analysis", "tool", "software", "data", "method", "results", "workflow",
    "pipeline", "open", "source", "interface", "documentation", "framework",
    "platform", "researchers", "datasets",
]


def benchmark_ontology() -> OntologyGraph:
    """One term per anchor, carrying its paraphrase as an ontology synonym."""
    graph = OntologyGraph(name="benchmark")
    for domain, anchors in DOMAIN_ANCHORS.items():
        for i, (canonical, synonym) in enumerate(anchors):
            term_id = f"bm_{domain}_{i}"
            graph.terms[term_id] = OntologyTerm(
                term_id=term_id, label=canonical, synonyms=(synonym,)
            )
    return graph


def _doc(domain: str, doc_index: int, rng: random.Random, use_synonyms: bool) -> str:
    anchors = DOMAIN_ANCHORS[domain]
    units = []
    for k in range(ANCHORS_PER_DOC):
        canonical, synonym = anchors[(doc_index + k) % len(anchors)]
        units.append(synonym if use_synonyms else canonical)
    units.extend(rng.sample(FILLER, 6))
    rng.shuffle(units)
    return " ".join(units)


@dataclass
class Benchmark:
    train: LabeledCorpus
    test: LabeledCorpus
    thesaurus: Thesaurus
    ontology: OntologyGraph


def generate_benchmark(seed: int) -> Benchmark:
    """Deterministic per-seed corpus + the thesaurus built from its training half."""
    rng = random.Random(seed)
    train_items: list[tuple[str, str]] = []
    test_items: list[tuple[str, str]] = []
    for domain in sorted(DOMAIN_ANCHORS):
        for i in range(TRAIN_PER_DOMAIN):
            train_items.append((_doc(domain, i, rng, use_synonyms=False), domain))
        n_test = DOCS_PER_DOMAIN - TRAIN_PER_DOMAIN
        for i in range(n_test):
            paraphrase = i >= n_test - PARAPHRASE_TEST_DOCS
            test_items.append((_doc(domain, i, rng, use_synonyms=paraphrase), domain))

    ontology = benchmark_ontology()
    thesaurus = build_thesaurus(
        [text for text, _ in train_items],
        ontologies=[ontology],
        config=ThesaurusConfig(min_count=5, max_len=3),
    )
    return Benchmark(
        train=LabeledCorpus(train_items),
        test=LabeledCorpus(test_items),
        thesaurus=thesaurus,
        ontology=ontology,
    )
