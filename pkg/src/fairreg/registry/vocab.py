"""Controlled vocabularies the validator resolves field values against."""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from ..thesaurus.ontology import OntologyGraph, load_ontology


@dataclass
class Vocabularies:
    """The vocabulary bundle validate_record needs.

    ``resource_ids`` is optional: when provided (normally by the store),
    workflow references are checked for resolvability.
    """

    tool_types: set[str] = field(default_factory=set)
    platforms: set[str] = field(default_factory=set)
    languages: set[str] = field(default_factory=set)
    organizations: set[str] = field(default_factory=set)
    funders: set[str] = field(default_factory=set)
    functions: OntologyGraph = field(default_factory=OntologyGraph)
    domains: OntologyGraph = field(default_factory=OntologyGraph)
    formats: OntologyGraph = field(default_factory=OntologyGraph)
    resource_ids: set[str] | None = None

    def with_resource_ids(self, rids: set[str]) -> "Vocabularies":
        return Vocabularies(
            tool_types=self.tool_types,
            platforms=self.platforms,
            languages=self.languages,
            organizations=self.organizations,
            funders=self.funders,
            functions=self.functions,
            domains=self.domains,
            formats=self.formats,
            resource_ids=rids,
        )


def _read_lines(path: Path) -> list[str]:
    out = []
    for raw in path.read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append(line)
    return out


def _read_id_column(path: Path) -> set[str]:
    return {line.split("\t")[0].strip() for line in _read_lines(path)}


def data_path(name: str) -> Path:
    """Path of a packaged data file."""
    return Path(str(resources.files("fairreg").joinpath("data", name)))


def load_vocabularies(root: str | Path | None = None) -> Vocabularies:
    """Load vocabularies from a directory, defaulting to the packaged files."""
    base = Path(root) if root is not None else data_path("").parent / "data"
    return Vocabularies(
        tool_types=set(_read_lines(base / "tool_types.txt")),
        platforms=set(_read_lines(base / "platforms.txt")),
        languages=set(_read_lines(base / "languages.txt")),
        organizations=_read_id_column(base / "organizations.tsv"),
        funders=_read_id_column(base / "funders.tsv"),
        functions=load_ontology(base / "functions.tsv", name="functions"),
        domains=load_ontology(base / "domains.tsv", name="domains"),
        formats=load_ontology(base / "formats.tsv", name="formats"),
    )


def load_stopwords(path: str | Path | None = None) -> set[str]:
    p = Path(path) if path is not None else data_path("stopwords.txt")
    return set(_read_lines(p))
