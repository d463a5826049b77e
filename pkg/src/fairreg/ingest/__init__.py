"""Four-source ingestion: publications, aggregators, submissions, funding."""

from .aggregator import (
    AggregatorFormat,
    DumpReport,
    RowError,
    parse_index_dump,
    register_format,
    registered_formats,
)
from .dedup import match_duplicates
from .funders import (
    FunderEntry,
    FunderRegistry,
    load_funder_registry,
    match_funder_name,
    normalize_name,
)
from .gate import DECISION_THRESHOLD, LogisticGate, PublicationGate, ToolLabel
from .grants import GrantRef, ICTable, Institute, extract_grants, load_ic_table, map_grant_to_ic
from .pipeline import (
    IngestReport,
    build_record_from_publication,
    load_organizations,
    match_institutions,
    run_ingest,
)
from .publication import (
    DEFAULT_REPO_HOSTS,
    PublicationRecord,
    extract_acknowledgements,
    extract_repo_urls,
    extract_tool_name,
    extract_urls,
    normalize_url,
)
from .repos import (
    FailingRepoClient,
    FixtureRepoClient,
    RepoClient,
    RepoMetadata,
    fetch_repo_metadata,
)

__all__ = [
    "AggregatorFormat",
    "DECISION_THRESHOLD",
    "DEFAULT_REPO_HOSTS",
    "DumpReport",
    "FailingRepoClient",
    "FixtureRepoClient",
    "FunderEntry",
    "FunderRegistry",
    "GrantRef",
    "ICTable",
    "IngestReport",
    "Institute",
    "LogisticGate",
    "PublicationGate",
    "PublicationRecord",
    "RepoClient",
    "RepoMetadata",
    "RowError",
    "ToolLabel",
    "build_record_from_publication",
    "extract_acknowledgements",
    "extract_grants",
    "extract_repo_urls",
    "extract_tool_name",
    "extract_urls",
    "fetch_repo_metadata",
    "load_funder_registry",
    "load_ic_table",
    "load_organizations",
    "map_grant_to_ic",
    "match_duplicates",
    "match_funder_name",
    "match_institutions",
    "normalize_name",
    "normalize_url",
    "parse_index_dump",
    "register_format",
    "registered_formats",
    "run_ingest",
]
