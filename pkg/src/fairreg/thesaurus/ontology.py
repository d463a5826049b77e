"""Minimal ontology files: terms with labels, synonyms, and parent links.

Format is one term per line:
    term_id<TAB>label<TAB>syn1|syn2|...<TAB>parent1|parent2|...
with the synonym and parent columns optional/empty.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path


class OntologyLoadError(ValueError):
    pass


@dataclass(frozen=True)
class OntologyTerm:
    term_id: str
    label: str
    synonyms: tuple[str, ...] = ()
    parents: tuple[str, ...] = ()


@dataclass
class OntologyGraph:
    """Term table plus the implied hypernym (child -> parent) edges."""

    terms: dict[str, OntologyTerm] = field(default_factory=dict)
    name: str = ""

    def __contains__(self, term_id: str) -> bool:
        return term_id in self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def labels(self) -> list[str]:
        return [t.label for t in self.terms.values()]

    def surface_forms(self) -> dict[str, str]:
        """Every label and synonym, lowercased, mapped to its term id."""
        out: dict[str, str] = {}
        for term in self.terms.values():
            out.setdefault(term.label.lower(), term.term_id)
            for syn in term.synonyms:
                out.setdefault(syn.lower(), term.term_id)
        return out

    def ancestors(self, term_id: str) -> set[str]:
        seen: set[str] = set()
        stack = list(self.terms[term_id].parents) if term_id in self.terms else []
        while stack:
            cur = stack.pop()
            if cur in seen:
                continue
            seen.add(cur)
            if cur in self.terms:
                stack.extend(self.terms[cur].parents)
        return seen

    def is_strict_ancestor(self, a: str, b: str) -> bool:
        """True when term ``a`` lies strictly above term ``b``."""
        return a != b and a in self.ancestors(b)


def _split_multi(cell: str) -> tuple[str, ...]:
    return tuple(part.strip() for part in cell.split("|") if part.strip())


def load_ontology(path: str | Path, name: str = "") -> OntologyGraph:
    """Parse an ontology file; duplicate ids and dangling parents are errors."""
    path = Path(path)
    graph = OntologyGraph(name=name or path.stem)
    rows: list[tuple[int, OntologyTerm]] = []
    for lineno, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        line = raw.rstrip("\n")
        if not line.strip() or line.startswith("#"):
            continue
        cols = line.split("\t")
        if len(cols) < 2 or not cols[0].strip() or not cols[1].strip():
            raise OntologyLoadError(f"{path}:{lineno}: expected term_id<TAB>label")
        term = OntologyTerm(
            term_id=cols[0].strip(),
            label=cols[1].strip(),
            synonyms=_split_multi(cols[2]) if len(cols) > 2 else (),
            parents=_split_multi(cols[3]) if len(cols) > 3 else (),
        )
        if term.term_id in graph.terms:
            raise OntologyLoadError(f"{path}:{lineno}: duplicate term id {term.term_id!r}")
        graph.terms[term.term_id] = term
        rows.append((lineno, term))
    for lineno, term in rows:
        for parent in term.parents:
            if parent not in graph.terms:
                raise OntologyLoadError(
                    f"{path}:{lineno}: term {term.term_id!r} references undefined parent {parent!r}"
                )
    return graph
