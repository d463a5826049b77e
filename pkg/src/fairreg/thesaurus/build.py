"""Thesaurus assembly: corpus phrases + synonym sets + ontology enrichment.

The thesaurus owns the search vector space: one dimension per synonym set,
named by the set's lexicographically least surface form. All derived state
(sets, canonical ids, edges) is a pure function of the stored evidence, so
builds are deterministic and serialization round-trips exactly.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field

from .ontology import OntologyGraph
from .phrases import (
    CONTEXT_WINDOW,
    DEFAULT_MAX_LEN,
    DEFAULT_MIN_COUNT,
    PhraseStats,
    extract_phrases,
    tokenize,
)
from .synonyms import DEFAULT_TAU, UnionFind, synonym_candidates

FORMAT_TAG = "thesaurus/1"


@dataclass(frozen=True)
class ThesaurusConfig:
    min_count: int = DEFAULT_MIN_COUNT
    max_len: int = DEFAULT_MAX_LEN
    tau: float = DEFAULT_TAU
    window: int = CONTEXT_WINDOW
    stopwords: frozenset[str] = frozenset()


def _norm_surface(text: str) -> str:
    return " ".join(tokenize(text))


@dataclass
class Thesaurus:
    """Evidence (surfaces, pairs, edge pairs) plus the derived vector space."""

    surfaces: dict[str, int] = field(default_factory=dict)  # surface -> corpus count
    corpus_pairs: list[tuple[str, str]] = field(default_factory=list)
    ontology_pairs: list[tuple[str, str]] = field(default_factory=list)
    edge_surface_pairs: list[tuple[str, str]] = field(default_factory=list)  # (hypo, hyper)

    # Derived on rebuild().
    phrases: list[str] = field(default_factory=list)
    surface_map: dict[str, str] = field(default_factory=dict)
    synonym_sets: list[list[str]] = field(default_factory=list)
    hyper_edges: list[tuple[str, str]] = field(default_factory=list)
    version_hash: str = ""
    warnings: list[str] = field(default_factory=list)
    _index: dict[str, int] = field(default_factory=dict)
    max_surface_tokens: int = 1

    # -- derived state ---------------------------------------------------

    def rebuild(self) -> "Thesaurus":
        uf = UnionFind()
        for surface in self.surfaces:
            uf.add(surface)
        for a, b in list(self.corpus_pairs) + list(self.ontology_pairs):
            uf.union(a, b)

        self.synonym_sets = uf.sets()
        self.surface_map = {}
        for members in self.synonym_sets:
            canonical = members[0]
            for m in members:
                self.surface_map[m] = canonical
        self.phrases = sorted({self.surface_map[s] for s in self.surfaces} | {
            self.surface_map[m] for members in self.synonym_sets for m in members
        })
        self._index = {p: i for i, p in enumerate(self.phrases)}

        self.hyper_edges = []
        self.warnings = []
        adjacency: dict[str, set[str]] = {}
        for hypo_s, hyper_s in sorted(set(self.edge_surface_pairs)):
            hypo = self.surface_map.get(hypo_s)
            hyper = self.surface_map.get(hyper_s)
            if hypo is None or hyper is None:
                continue
            if hypo == hyper:
                self.warnings.append(f"dropped self-edge at {hypo!r}")
                continue
            if (hypo, hyper) in self.hyper_edges:
                continue
            if self._reaches(adjacency, hyper, hypo):
                self.warnings.append(f"dropped cycle-forming edge {hypo!r} -> {hyper!r}")
                continue
            self.hyper_edges.append((hypo, hyper))
            adjacency.setdefault(hypo, set()).add(hyper)

        self.max_surface_tokens = max((len(s.split()) for s in self.surface_map), default=1)
        self.version_hash = self._digest()
        return self

    @staticmethod
    def _reaches(adjacency: dict[str, set[str]], start: str, target: str) -> bool:
        stack, seen = [start], set()
        while stack:
            cur = stack.pop()
            if cur == target:
                return True
            if cur in seen:
                continue
            seen.add(cur)
            stack.extend(adjacency.get(cur, ()))
        return False

    def _digest(self) -> str:
        payload = {
            "surfaces": dict(sorted(self.surfaces.items())),
            "corpus_pairs": sorted(self.corpus_pairs),
            "ontology_pairs": sorted(self.ontology_pairs),
            "edge_surface_pairs": sorted(self.edge_surface_pairs),
        }
        blob = json.dumps(payload, ensure_ascii=False, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode("utf-8")).hexdigest()

    # -- lookups -----------------------------------------------------------

    def __len__(self) -> int:
        return len(self.phrases)

    def index_of(self, canonical: str) -> int:
        return self._index[canonical]

    def canonical_of(self, surface: str) -> str | None:
        return self.surface_map.get(surface)

    def hypernyms_of(self, canonical: str) -> list[str]:
        return sorted(h for (c, h) in self.hyper_edges if c == canonical)

    def hyponyms_of(self, canonical: str) -> list[str]:
        return sorted(c for (c, h) in self.hyper_edges if h == canonical)

    def canonical_count(self, canonical: str) -> int:
        members = next((m for m in self.synonym_sets if m[0] == canonical), [canonical])
        return sum(self.surfaces.get(m, 0) for m in members)

    # -- serialization ------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "format": FORMAT_TAG,
            "version_hash": self.version_hash,
            "phrase_count": len(self.phrases),
            "surfaces": dict(sorted(self.surfaces.items())),
            "corpus_pairs": sorted(self.corpus_pairs),
            "ontology_pairs": sorted(self.ontology_pairs),
            "edge_surface_pairs": sorted(self.edge_surface_pairs),
            "phrases": list(self.phrases),
            "synonym_sets": [list(m) for m in self.synonym_sets],
            "hyper_edges": [list(e) for e in self.hyper_edges],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, sort_keys=True, indent=1)

    @classmethod
    def from_dict(cls, data: dict) -> "Thesaurus":
        if data.get("format") != FORMAT_TAG:
            raise ValueError(f"unsupported thesaurus format {data.get('format')!r}")
        t = cls(
            surfaces={k: int(v) for k, v in data["surfaces"].items()},
            corpus_pairs=[tuple(p) for p in data["corpus_pairs"]],
            ontology_pairs=[tuple(p) for p in data["ontology_pairs"]],
            edge_surface_pairs=[tuple(p) for p in data["edge_surface_pairs"]],
        )
        t.rebuild()
        stored = data.get("version_hash")
        if stored and stored != t.version_hash:
            raise ValueError("thesaurus file is corrupt: stored hash does not match contents")
        return t

    @classmethod
    def loads(cls, text: str) -> "Thesaurus":
        return cls.from_dict(json.loads(text))


def thesaurus_from_stats(stats: list[PhraseStats], pairs: list[tuple[str, str]]) -> Thesaurus:
    t = Thesaurus(
        surfaces={st.phrase: st.count for st in stats},
        corpus_pairs=sorted(set(pairs)),
    )
    return t.rebuild()


def enrich_from_ontology(thesaurus: Thesaurus, ontology: OntologyGraph) -> Thesaurus:
    """Fold an ontology into the thesaurus.

    Term synonyms merge into synonym sets when the term already has a surface
    in the thesaurus; corpus pairs contradicted by a strict ancestor relation
    are demoted to hypernym edges; parent links become hypernym edges for
    terms present on both sides.
    """
    out = Thesaurus(
        surfaces=dict(thesaurus.surfaces),
        corpus_pairs=list(thesaurus.corpus_pairs),
        ontology_pairs=list(thesaurus.ontology_pairs),
        edge_surface_pairs=list(thesaurus.edge_surface_pairs),
    )

    term_surfaces: dict[str, list[str]] = {}
    for term_id in sorted(ontology.terms):
        term = ontology.terms[term_id]
        surfaces = [_norm_surface(term.label)] + [_norm_surface(s) for s in term.synonyms]
        term_surfaces[term_id] = sorted({s for s in surfaces if s})

    surface_to_term: dict[str, str] = {}
    for term_id in sorted(term_surfaces):
        for s in term_surfaces[term_id]:
            surface_to_term.setdefault(s, term_id)

    # Synonym merging for terms with at least one known surface.
    known = set(out.surfaces)
    for term_id in sorted(term_surfaces):
        surfaces = term_surfaces[term_id]
        if len(surfaces) < 2 or not any(s in known for s in surfaces):
            continue
        anchor = surfaces[0]
        for s in surfaces[1:]:
            out.ontology_pairs.append(tuple(sorted((anchor, s))))
        for s in surfaces:
            if s not in out.surfaces:
                out.surfaces[s] = 0
        known.update(surfaces)

    # Demote corpus pairs the ontology places in a strict ancestor relation.
    kept_pairs = []
    for a, b in out.corpus_pairs:
        ta, tb = surface_to_term.get(a), surface_to_term.get(b)
        if ta and tb and ta != tb:
            if ontology.is_strict_ancestor(ta, tb):
                out.edge_surface_pairs.append((b, a))
                continue
            if ontology.is_strict_ancestor(tb, ta):
                out.edge_surface_pairs.append((a, b))
                continue
        kept_pairs.append((a, b))
    out.corpus_pairs = kept_pairs

    # Parent links for terms with surfaces present on both sides.
    def present_repr(term_id: str) -> str | None:
        present = [s for s in term_surfaces.get(term_id, []) if s in known]
        return present[0] if present else None

    for term_id in sorted(ontology.terms):
        child_surface = present_repr(term_id)
        if child_surface is None:
            continue
        for parent_id in ontology.terms[term_id].parents:
            parent_surface = present_repr(parent_id)
            if parent_surface is not None:
                out.edge_surface_pairs.append((child_surface, parent_surface))

    out.ontology_pairs = sorted(set(out.ontology_pairs))
    out.edge_surface_pairs = sorted(set(out.edge_surface_pairs))
    return out.rebuild()


def build_thesaurus(
    corpus: list[str],
    ontologies: list[OntologyGraph] | None = None,
    config: ThesaurusConfig | None = None,
) -> Thesaurus:
    """Full pipeline: phrase extraction, synonym discovery, enrichment."""
    config = config or ThesaurusConfig()
    stats = extract_phrases(
        corpus,
        min_count=config.min_count,
        max_len=config.max_len,
        stopwords=set(config.stopwords),
        window=config.window,
    )
    pairs = synonym_candidates(stats, tau=config.tau)
    thesaurus = thesaurus_from_stats(stats, pairs)
    for ontology in ontologies or []:
        thesaurus = enrich_from_ontology(thesaurus, ontology)
    return thesaurus
