"""Tool metadata model, validation, merging, and the revisioned store."""

from .canonical import (
    CANONICAL_FIELDS,
    canonical_bytes,
    canonical_dict,
    from_jsonl,
    record_from_dict,
    to_jsonl,
)
from .merge import MergePolicy, merge_records
from .model import (
    Person,
    Release,
    Revision,
    SourceProvenance,
    ToolRecord,
    UsageMetrics,
    format_rid,
    is_valid_rid,
    rid_number,
)
from .store import RecordStore, RidCounter, STATE_ACTIVE, STATE_PARKED, mint_rid
from .validate import (
    FIELD_SPECS,
    REQUIRED_FIELDS,
    ValidationReport,
    Violation,
    is_valid_orcid,
    validate_record,
)
from .vocab import Vocabularies, load_stopwords, load_vocabularies

__all__ = [
    "CANONICAL_FIELDS",
    "FIELD_SPECS",
    "MergePolicy",
    "Person",
    "RecordStore",
    "Release",
    "REQUIRED_FIELDS",
    "Revision",
    "RidCounter",
    "STATE_ACTIVE",
    "STATE_PARKED",
    "SourceProvenance",
    "ToolRecord",
    "UsageMetrics",
    "ValidationReport",
    "Violation",
    "Vocabularies",
    "canonical_bytes",
    "canonical_dict",
    "format_rid",
    "from_jsonl",
    "is_valid_orcid",
    "is_valid_rid",
    "load_stopwords",
    "load_vocabularies",
    "merge_records",
    "mint_rid",
    "record_from_dict",
    "rid_number",
    "to_jsonl",
    "validate_record",
]
