"""Thesaurus construction: phrase extraction, synonyms, ontology enrichment."""

from .build import (
    FORMAT_TAG,
    Thesaurus,
    ThesaurusConfig,
    build_thesaurus,
    enrich_from_ontology,
    thesaurus_from_stats,
)
from .ontology import OntologyGraph, OntologyLoadError, OntologyTerm, load_ontology
from .phrases import PhraseStats, extract_phrases, tokenize
from .synonyms import UnionFind, sparse_cosine, synonym_candidates

__all__ = [
    "FORMAT_TAG",
    "OntologyGraph",
    "OntologyLoadError",
    "OntologyTerm",
    "PhraseStats",
    "Thesaurus",
    "ThesaurusConfig",
    "UnionFind",
    "build_thesaurus",
    "enrich_from_ontology",
    "extract_phrases",
    "load_ontology",
    "sparse_cosine",
    "synonym_candidates",
    "thesaurus_from_stats",
    "tokenize",
]
