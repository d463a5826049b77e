"""Exception types shared across the registry, ingestion, and search layers."""


class FairregError(Exception):
    """Base class for all package-specific errors."""


class StorageError(FairregError):
    """Persistence failed; the operation was rolled back."""


class NotFoundError(FairregError):
    """A referenced record, repository, or vocabulary entry does not exist."""


class RetryableClientError(FairregError):
    """Transient I/O failure talking to an external client."""


class MergeConflictError(FairregError):
    """Both records carry distinct minted accessions; a curator must resolve."""


class RevisionConflictError(FairregError):
    """Optimistic-concurrency check failed: base revision is stale."""


class ValidationFailedError(FairregError):
    """An edit or submission produced an invalid record."""

    def __init__(self, report):
        self.report = report
        super().__init__("; ".join(str(v) for v in report.violations))


class UnknownICError(FairregError):
    """Grant IC code is not present in the configured institute table."""


class NeedsCurationError(FairregError):
    """A mined record lacks the minimum identity fields and was parked."""


class RebuildRequiredError(FairregError):
    """Vector or snapshot was built against a different thesaurus version."""


class UntrainedModelError(FairregError):
    """A classifier was asked to score before being trained."""
