"""Ontology-term highlighting inside tool descriptions."""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..thesaurus import OntologyGraph

DEFAULT_URL_TEMPLATE = "/ontology/{term_id}"


@dataclass(frozen=True)
class HighlightSpan:
    start: int
    end: int
    term_id: str
    url: str


def highlight_terms(
    description: str,
    ontology: OntologyGraph,
    url_template: str = DEFAULT_URL_TEMPLATE,
) -> list[HighlightSpan]:
    """Non-overlapping, leftmost-longest, case-insensitive label matches.

    Alternatives are ordered longest-first so the regex engine prefers the
    longest term at each position; finditer never yields overlapping spans.
    """
    surface_to_term: dict[str, str] = {}
    for term in ontology.terms.values():
        for surface in (term.label, *term.synonyms):
            surface_to_term.setdefault(surface.lower(), term.term_id)
    if not surface_to_term or not description:
        return []

    alternatives = sorted(surface_to_term, key=lambda s: (-len(s), s))
    pattern = re.compile(
        r"\b(?:" + "|".join(re.escape(s) for s in alternatives) + r")\b",
        re.IGNORECASE,
    )
    spans = []
    for match in pattern.finditer(description):
        term_id = surface_to_term[match.group(0).lower()]
        spans.append(
            HighlightSpan(
                start=match.start(),
                end=match.end(),
                term_id=term_id,
                url=url_template.format(term_id=term_id),
            )
        )
    return spans
