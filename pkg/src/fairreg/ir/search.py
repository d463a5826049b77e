"""Query planning, cascaded sub-searches, and usage-aware ranking.

A plan is an ordered stage list: query stages score by cosine similarity,
filter stages match stored field values. The first stage runs over the
whole index; every later stage only narrows the surviving set, so adding a
stage can never grow the result. Final ordering ranks by similarity with
near-ties broken by repository usage.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from ..errors import FairregError
from ..registry.model import rid_number
from ..thesaurus import Thesaurus
from .index import PhraseIndex, resolve_filter_field, usage_score
from .vectorize import tokenize_and_expand_query

DEFAULT_EPSILON = 0.01


class UnknownFieldError(FairregError):
    def __init__(self, field_name: str):
        self.field = field_name
        super().__init__(f"unknown filter field: {field_name}")


class EmptyQueryError(FairregError):
    pass


@dataclass(frozen=True)
class QueryStage:
    text: str


@dataclass(frozen=True)
class FilterStage:
    field: str
    value: str


@dataclass(frozen=True)
class QueryPlan:
    stages: tuple = ()
    page: int | None = None
    per_page: int | None = None
    sort: str = "auto"  # auto | relevance | name | -name
    epsilon: float = DEFAULT_EPSILON

    def has_query(self) -> bool:
        return any(isinstance(s, QueryStage) for s in self.stages)


@dataclass
class SearchHit:
    doc_id: str
    similarity: float
    usage_score: float
    rank: int = 0


@dataclass
class SearchResult:
    hits: list[SearchHit] = field(default_factory=list)
    total: int = 0
    all_doc_ids: list[str] = field(default_factory=list)


def _match_filter(stored, value: str) -> bool:
    if stored is None:
        return False
    values = stored if isinstance(stored, list) else [stored]
    needle = value.lower()
    if needle.endswith("*"):
        prefix = needle[:-1]
        return any(str(v).lower().startswith(prefix) for v in values)
    return any(str(v).lower() == needle for v in values)


def _score_candidates(
    index: PhraseIndex, qvec, candidates: set[str] | None
) -> dict[str, float]:
    sims: dict[str, float] = {}
    for idx, qw in qvec.weights.items():
        for rid in index.postings.get(idx, ()):
            if candidates is not None and rid not in candidates:
                continue
            sims[rid] = sims.get(rid, 0.0) + qw * index.vectors[rid].weights[idx]
    return {rid: s for rid, s in sims.items() if s > 0.0}


def rank_with_usage(hits: list[SearchHit], epsilon: float = DEFAULT_EPSILON) -> list[SearchHit]:
    """Similarity-descending order with usage-sorted epsilon bands.

    A band is the maximal run of hits within ``epsilon`` of its leader;
    inside a band, higher usage wins, then the smaller accession integer.
    The (similarity, usage, id) triple makes the order a total one, so the
    output is invariant under permutation of the input.
    """
    ordered = sorted(hits, key=lambda h: (-h.similarity, rid_number(h.doc_id)))
    out: list[SearchHit] = []
    i = 0
    while i < len(ordered):
        leader = ordered[i].similarity
        j = i
        while j < len(ordered) and leader - ordered[j].similarity <= epsilon:
            j += 1
        band = sorted(
            ordered[i:j], key=lambda h: (-h.usage_score, rid_number(h.doc_id))
        )
        out.extend(band)
        i = j
    for pos, hit in enumerate(out, start=1):
        hit.rank = pos
    return out


def search(index: PhraseIndex, plan: QueryPlan, thesaurus: Thesaurus) -> SearchResult:
    """Evaluate a stage cascade over the index and rank the survivors."""
    if not plan.stages:
        raise EmptyQueryError("a query plan needs at least one stage")
    index.check_hash(thesaurus.version_hash, "query thesaurus")

    candidates: set[str] | None = None  # None = the whole index
    last_sims: dict[str, float] | None = None

    for stage in plan.stages:
        if isinstance(stage, QueryStage):
            if not stage.text.strip():
                raise EmptyQueryError("query stage text is empty")
            qvec = tokenize_and_expand_query(stage.text, thesaurus)
            last_sims = _score_candidates(index, qvec, candidates)
            candidates = set(last_sims)
        elif isinstance(stage, FilterStage):
            field_name = resolve_filter_field(stage.field)
            if field_name is None:
                raise UnknownFieldError(stage.field)
            pool = index.doc_ids() if candidates is None else sorted(candidates, key=rid_number)
            candidates = {
                rid
                for rid in pool
                if _match_filter(index.field_store[rid].get(field_name), stage.value)
            }
        else:
            raise TypeError(f"unknown stage type: {stage!r}")

    surviving = sorted(candidates or (), key=rid_number)

    if plan.has_query() and plan.sort in ("auto", "relevance"):
        hits = [
            SearchHit(
                doc_id=rid,
                similarity=(last_sims or {}).get(rid, 0.0),
                usage_score=usage_score(*index.usage[rid]),
            )
            for rid in surviving
        ]
        hits = rank_with_usage(hits, plan.epsilon)
    else:
        if plan.sort == "relevance" and not plan.has_query():
            raise EmptyQueryError("relevance sort requires a query stage")
        reverse = plan.sort == "-name"
        by_name = sorted(
            surviving,
            key=lambda rid: (str(index.field_store[rid].get("name", "")).casefold(), rid_number(rid)),
            reverse=reverse,
        )
        hits = [
            SearchHit(doc_id=rid, similarity=0.0, usage_score=usage_score(*index.usage[rid]))
            for rid in by_name
        ]
        for pos, hit in enumerate(hits, start=1):
            hit.rank = pos

    total = len(hits)
    all_ids = [h.doc_id for h in hits]
    if plan.page is not None and plan.per_page is not None:
        start = (plan.page - 1) * plan.per_page
        hits = hits[start : start + plan.per_page]
    return SearchResult(hits=hits, total=total, all_doc_ids=all_ids)


def match_all_plan(page: int | None = None, per_page: int | None = None,
                   sort: str = "name") -> QueryPlan:
    """Plan for listings without a query: a match-everything filter stage."""
    return QueryPlan(stages=(FilterStage("name", "*"),), page=page, per_page=per_page, sort=sort)


def plan_from_params(
    queries: list[str],
    filters: list[tuple[str, str]],
    page: int | None = None,
    per_page: int | None = None,
    sort: str = "auto",
    epsilon: float = DEFAULT_EPSILON,
) -> QueryPlan:
    """Build a plan the way the HTTP layer sees it: q stages then filters."""
    stages: list = [QueryStage(q) for q in queries]
    stages.extend(FilterStage(f, v) for f, v in filters)
    if not stages:
        return replace(match_all_plan(page, per_page, "name" if sort == "auto" else sort),
                       epsilon=epsilon)
    return QueryPlan(stages=tuple(stages), page=page, per_page=per_page, sort=sort,
                     epsilon=epsilon)
