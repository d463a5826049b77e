"""Prefix suggestions over thesaurus phrases and ontology labels."""

from __future__ import annotations

from ..thesaurus import OntologyGraph, Thesaurus
from ..thesaurus.phrases import tokenize


class Suggester:
    """Ranks candidate terms by corpus count, ties broken alphabetically."""

    def __init__(self, thesaurus: Thesaurus, ontologies: list[OntologyGraph] | None = None):
        self._pool: dict[str, int] = {}
        for canonical in thesaurus.phrases:
            self._add(canonical, thesaurus.canonical_count(canonical))
        for ontology in ontologies or []:
            for term in ontology.terms.values():
                canonical = thesaurus.canonical_of(" ".join(tokenize(term.label)))
                count = thesaurus.canonical_count(canonical) if canonical else 0
                self._add(term.label, count)

    def _add(self, term: str, count: int) -> None:
        key = term.lower()
        if key not in self._pool or count > self._pool[key]:
            self._pool[key] = count

    def suggest(self, prefix: str, limit: int = 10) -> list[str]:
        if not prefix:
            return []
        needle = prefix.lower()
        matches = [(term, count) for term, count in self._pool.items() if term.startswith(needle)]
        matches.sort(key=lambda tc: (-tc[1], tc[0]))
        return [term for term, _ in matches[:limit]]


def suggest_terms(
    prefix: str,
    limit: int,
    thesaurus: Thesaurus,
    ontologies: list[OntologyGraph] | None = None,
) -> list[str]:
    return Suggester(thesaurus, ontologies).suggest(prefix, limit)
