"""Repository metadata clients behind one interface.

Production deployments would plug an HTTP client in here; the shipped
implementation reads a JSON-lines fixture keyed by repository URL so the
pipeline stays deterministic and offline.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from ..errors import NotFoundError, RetryableClientError
from .publication import normalize_url


@dataclass(frozen=True)
class RepoMetadata:
    url: str
    name: str = ""
    language: str | None = None
    license: str | None = None
    forks: int = 0
    commits: int = 0


class RepoClient:
    """Interface: lookup(url) returns a raw metadata dict or raises KeyError."""

    def lookup(self, url: str) -> dict:
        raise NotImplementedError


class FixtureRepoClient(RepoClient):
    """Serves repository metadata from a JSON-lines file keyed by URL."""

    def __init__(self, source: str | Path | dict):
        if isinstance(source, dict):
            raw = dict(source)
        else:
            raw = {}
            for line in Path(source).read_text(encoding="utf-8").splitlines():
                line = line.strip()
                if not line:
                    continue
                entry = json.loads(line)
                raw[entry["url"]] = entry
        self._by_key = {normalize_url(url): entry for url, entry in raw.items()}

    def lookup(self, url: str) -> dict:
        return self._by_key[normalize_url(url)]


class FailingRepoClient(RepoClient):
    """Always raises an I/O error; used to exercise the retryable path."""

    def lookup(self, url: str) -> dict:
        raise OSError("simulated connection failure")


def fetch_repo_metadata(url: str, repo_client: RepoClient) -> RepoMetadata:
    """Resolve repository metadata; absent optional fields stay None/zero."""
    if not url or not url.lower().startswith(("http://", "https://")):
        raise ValueError(f"not an absolute repository URL: {url!r}")
    try:
        entry = repo_client.lookup(url)
    except KeyError as exc:
        raise NotFoundError(f"unknown repository: {url}") from exc
    except OSError as exc:
        raise RetryableClientError(f"repository client failure for {url}: {exc}") from exc
    return RepoMetadata(
        url=url,
        name=entry.get("name", ""),
        language=entry.get("language"),
        license=entry.get("license"),
        forks=int(entry.get("forks", 0)),
        commits=int(entry.get("commits", 0)),
    )
