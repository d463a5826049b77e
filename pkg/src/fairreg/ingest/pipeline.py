"""Publication-to-record assembly and the batch ingestion pipeline."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from ..errors import NeedsCurationError, NotFoundError, UnknownICError
from ..registry.model import SourceProvenance, ToolRecord, UsageMetrics
from ..registry.store import RecordStore, STATE_ACTIVE
from ..registry.vocab import data_path
from .dedup import match_duplicates
from .funders import FunderEntry, FunderRegistry, match_funder_name, normalize_name
from .gate import PublicationGate
from .grants import GrantRef, ICTable, extract_grants, map_grant_to_ic
from .publication import (
    DEFAULT_REPO_HOSTS,
    PublicationRecord,
    extract_acknowledgements,
    extract_repo_urls,
    extract_tool_name,
    extract_urls,
)
from .repos import RepoClient, RepoMetadata, fetch_repo_metadata


def load_organizations(path: str | Path | None = None) -> dict[str, str]:
    p = Path(path) if path is not None else data_path("organizations.tsv")
    out = {}
    for line in p.read_text(encoding="utf-8").splitlines():
        if line.strip() and not line.startswith("#"):
            org_id, name = line.split("\t")[:2]
            out[org_id.strip()] = name.strip()
    return out


def match_institutions(names: list[str], organizations: dict[str, str]) -> list[str]:
    """Map free-text institution names onto registry ids; unmatched are dropped."""
    by_norm = {normalize_name(name): org_id for org_id, name in organizations.items()}
    out = []
    for name in names:
        org_id = by_norm.get(normalize_name(name))
        if org_id is not None and org_id not in out:
            out.append(org_id)
    return out


def build_record_from_publication(
    pub: PublicationRecord,
    repo_meta: RepoMetadata | None = None,
    grants: list[GrantRef] = (),
    funders: list[FunderEntry] = (),
    topic_model=None,
    organizations: dict[str, str] | None = None,
    retrieved_at: str = "",
    repo_hosts: tuple[str, ...] = DEFAULT_REPO_HOSTS,
) -> ToolRecord:
    """Assemble a partially populated record from one positive publication.

    Raises NeedsCurationError when neither the title/abstract heuristics nor
    the repository metadata yield a name; such publications are parked.
    """
    name = extract_tool_name(pub.title, pub.abstract)
    if not name and repo_meta is not None and repo_meta.name:
        name = repo_meta.name
    if not name:
        raise NeedsCurationError(f"publication {pub.pub_id}: no extractable tool name")

    text = " ".join(part for part in (pub.title, pub.abstract, pub.full_text or "") if part)
    record = ToolRecord(
        name=name,
        description=pub.abstract,
        links=extract_urls(text),
        source_repos=extract_repo_urls(text, repo_hosts),
        authors=list(pub.authors),
        award_numbers=[g.canonical for g in grants],
        funding_sources=[f.funder_id for f in funders],
        provenance=[
            SourceProvenance(source="publication", origin_ref=pub.pub_id, retrieved_at=retrieved_at)
        ],
    )
    if organizations:
        record.institutions = match_institutions(pub.institutions, organizations)
    if repo_meta is not None:
        if repo_meta.language:
            record.languages = [repo_meta.language]
        record.usage = UsageMetrics(forks=repo_meta.forks, commits=repo_meta.commits)
    if topic_model is not None and pub.abstract:
        prediction = topic_model.predict(pub.abstract)
        if prediction.label is not None:
            record.domains = [prediction.label]
    return record


@dataclass
class IngestReport:
    examined: int = 0
    positives: int = 0
    built: int = 0
    needs_curation: int = 0
    stored_active: int = 0
    stored_parked: int = 0
    duplicate_flags: int = 0
    stored_rids: list[str] = field(default_factory=list)
    errors: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "examined": self.examined,
            "positives": self.positives,
            "built": self.built,
            "needs_curation": self.needs_curation,
            "stored_active": self.stored_active,
            "stored_parked": self.stored_parked,
            "duplicate_flags": self.duplicate_flags,
            "stored_rids": list(self.stored_rids),
            "errors": list(self.errors),
        }


def run_ingest(
    pubs: list[PublicationRecord],
    gate: PublicationGate,
    store: RecordStore | None,
    repo_client: RepoClient | None = None,
    ic_table: ICTable | None = None,
    funder_registry: FunderRegistry | None = None,
    topic_model=None,
    organizations: dict[str, str] | None = None,
    retrieved_at: str = "",
    dry_run: bool = False,
) -> IngestReport:
    """Gate, extract, assemble, dedup, and store a publication batch.

    With dry_run (or store=None) nothing is written; the report still counts
    every stage so operators can preview a batch.
    """
    report = IngestReport()
    built: list[ToolRecord] = []

    for pub in pubs:
        report.examined += 1
        if not gate.classify(pub).is_tool:
            continue
        report.positives += 1

        repo_meta = None
        if repo_client is not None:
            for url in extract_repo_urls(
                " ".join(p for p in (pub.title, pub.abstract, pub.full_text or "") if p)
            ):
                try:
                    repo_meta = fetch_repo_metadata(url, repo_client)
                    break
                except NotFoundError:
                    continue

        grants = extract_grants(extract_acknowledgements(pub.full_text))
        funders: list[FunderEntry] = []
        if ic_table is not None and funder_registry is not None:
            for grant in grants:
                try:
                    institute = map_grant_to_ic(grant, ic_table)
                except UnknownICError:
                    continue
                funder = match_funder_name(institute.name, funder_registry)
                if funder is not None and funder not in funders:
                    funders.append(funder)

        try:
            record = build_record_from_publication(
                pub,
                repo_meta=repo_meta,
                grants=grants,
                funders=funders,
                topic_model=topic_model,
                organizations=organizations,
                retrieved_at=retrieved_at,
            )
        except NeedsCurationError as exc:
            report.needs_curation += 1
            report.errors.append(str(exc))
            continue
        built.append(record)
        report.built += 1

    if store is None or dry_run:
        return report

    existing = store.all_records()
    for record in built:
        rid, state = store.put(record, editor="ingest", timestamp=retrieved_at)
        report.stored_rids.append(rid)
        if state == STATE_ACTIVE:
            report.stored_active += 1
        else:
            report.stored_parked += 1
        stored = store.get(rid)
        for cluster in match_duplicates(existing + [stored]):
            if len(cluster) > 1 and any(r.accession == rid for r in cluster):
                others = [r.accession for r in cluster if r.accession != rid]
                store.flag(rid, "duplicate_of:" + ",".join(sorted(others)))
                report.duplicate_flags += 1
        existing.append(stored)
    return report
