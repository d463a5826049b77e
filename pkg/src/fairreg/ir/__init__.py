"""Semantic IR engine: vectorization, indexing, search, ranking, suggestions."""

from .highlight import DEFAULT_URL_TEMPLATE, HighlightSpan, highlight_terms
from .index import (
    FILTER_FIELDS,
    PhraseIndex,
    build_index,
    record_document_text,
    resolve_filter_field,
    usage_score,
)
from .search import (
    DEFAULT_EPSILON,
    EmptyQueryError,
    FilterStage,
    QueryPlan,
    QueryStage,
    SearchHit,
    SearchResult,
    UnknownFieldError,
    match_all_plan,
    plan_from_params,
    rank_with_usage,
    search,
)
from .suggest import Suggester, suggest_terms
from .vectorize import (
    DocumentVector,
    IdfTable,
    cosine,
    match_phrases,
    tokenize_and_expand_query,
    vectorize_document,
)

__all__ = [
    "DEFAULT_EPSILON",
    "DEFAULT_URL_TEMPLATE",
    "DocumentVector",
    "EmptyQueryError",
    "FILTER_FIELDS",
    "FilterStage",
    "HighlightSpan",
    "IdfTable",
    "PhraseIndex",
    "QueryPlan",
    "QueryStage",
    "SearchHit",
    "SearchResult",
    "Suggester",
    "UnknownFieldError",
    "build_index",
    "cosine",
    "highlight_terms",
    "match_all_plan",
    "match_phrases",
    "plan_from_params",
    "rank_with_usage",
    "record_document_text",
    "resolve_filter_field",
    "search",
    "suggest_terms",
    "tokenize_and_expand_query",
    "usage_score",
    "vectorize_document",
]
