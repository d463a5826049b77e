"""Mined-publication records and text extraction heuristics.

Extractors are pure functions over pre-extracted article text: tool-name
heuristics over titles/abstracts, absolute-URL and repository-URL detection,
and acknowledgements sectioning.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from ..registry.model import Person

DEFAULT_REPO_HOSTS = ("github.com", "gitlab.com", "bitbucket.org", "sourceforge.net")

_NAME_TOKEN = r"[A-Za-z0-9][\w\-.+]{0,39}"
_COLON_RE = re.compile(rf"^({_NAME_TOKEN}):\s+")
_DASH_RE = re.compile(rf"^({_NAME_TOKEN})\s+[-–—]\s+(?:a|an)\b", re.IGNORECASE)
_ABSTRACT_RE = re.compile(r"\b([A-Z][\w\-.+]*)\s+(?:is\s+an?\b|provides\b|enables\b)")
# Sentence-leading pronouns/determiners never name a tool.
_NOT_A_NAME = {"it", "this", "that", "the", "we", "here", "these", "those", "a", "an", "our", "one"}

_URL_RE = re.compile(r"https?://[^\s<>\"'\)\]\}]+")
_TRAILING_PUNCT = ".,;:!?'\""

_HEADING_RE = re.compile(r"^\s*(acknowledg(?:e)?ments?|funding)\s*$", re.IGNORECASE)


@dataclass
class PublicationRecord:
    """One mined publication from a corpus file."""

    pub_id: str
    title: str
    abstract: str = ""
    subject_headings: list[str] = field(default_factory=list)
    journal: str = ""
    year: int = 0
    full_text: str | None = None
    authors: list[Person] = field(default_factory=list)
    institutions: list[str] = field(default_factory=list)

    def text(self) -> str:
        """Title, abstract, and subject headings joined for feature building."""
        return " ".join(
            part for part in (self.title, self.abstract, " ".join(self.subject_headings)) if part
        )

    @classmethod
    def from_dict(cls, data: dict) -> "PublicationRecord":
        return cls(
            pub_id=str(data["pub_id"]),
            title=data.get("title", ""),
            abstract=data.get("abstract", ""),
            subject_headings=list(data.get("subject_headings", [])),
            journal=data.get("journal", ""),
            year=int(data.get("year", 0)),
            full_text=data.get("full_text"),
            authors=[Person(name=a["name"], orcid=a.get("orcid")) for a in data.get("authors", [])],
            institutions=list(data.get("institutions", [])),
        )

    def to_dict(self) -> dict:
        return {
            "pub_id": self.pub_id,
            "title": self.title,
            "abstract": self.abstract,
            "subject_headings": list(self.subject_headings),
            "journal": self.journal,
            "year": self.year,
            "full_text": self.full_text,
            "authors": [{"name": a.name, "orcid": a.orcid} for a in self.authors],
            "institutions": list(self.institutions),
        }


def extract_tool_name(title: str, abstract: str = "") -> str | None:
    """Candidate tool name, or None when no heuristic fires.

    Heuristics in order: a leading ``Name:`` pattern, a leading
    ``Name - a/an`` pattern, then the first plausible capitalized token in
    the abstract introduced by "is a(n)" / "provides" / "enables".
    """
    if not title or not title.strip():
        raise ValueError("title must be non-empty")

    m = _COLON_RE.match(title.strip())
    if m:
        return m.group(1)
    m = _DASH_RE.match(title.strip())
    if m:
        return m.group(1)
    for m in _ABSTRACT_RE.finditer(abstract or ""):
        candidate = m.group(1)
        if candidate.lower() not in _NOT_A_NAME:
            return candidate
    return None


def extract_urls(text: str) -> list[str]:
    """All absolute http(s) URLs, trailing punctuation stripped, first-seen order."""
    out: list[str] = []
    seen: set[str] = set()
    for raw in _URL_RE.findall(text or ""):
        url = raw.rstrip(_TRAILING_PUNCT)
        if not url:
            continue
        key = normalize_url(url)
        if key not in seen:
            seen.add(key)
            out.append(url)
    return out


def _host_of(url: str) -> str:
    m = re.match(r"https?://([^/\s:]+)", url)
    host = (m.group(1) if m else "").lower()
    return host[4:] if host.startswith("www.") else host


def extract_repo_urls(text: str, hosts: tuple[str, ...] = DEFAULT_REPO_HOSTS) -> list[str]:
    """URLs whose host is (a subdomain of) a configured repository host."""
    out = []
    for url in extract_urls(text):
        host = _host_of(url)
        if any(host == h or host.endswith("." + h) for h in hosts):
            out.append(url)
    return out


def normalize_url(url: str) -> str:
    """Scheme- and www-insensitive key used for URL identity."""
    rest = re.sub(r"^https?://", "", url.strip().lower())
    if rest.startswith("www."):
        rest = rest[4:]
    return rest.rstrip("/")


def _looks_like_heading(line: str) -> bool:
    stripped = line.strip()
    if not stripped or len(stripped) > 80:
        return False
    if any(ch in stripped for ch in ".,;:!?"):
        return False
    words = stripped.split()
    return len(words) <= 8 and stripped[0].isupper()


def extract_acknowledgements(full_text: str | None) -> str | None:
    """Text under acknowledgements/funding headings, to the next heading.

    Multiple qualifying sections concatenate in document order; returns None
    when no heading is present.
    """
    if not full_text:
        return None
    lines = full_text.splitlines()
    sections: list[str] = []
    i = 0
    while i < len(lines):
        if _HEADING_RE.match(lines[i]):
            body: list[str] = []
            i += 1
            while i < len(lines) and not _looks_like_heading(lines[i]):
                body.append(lines[i])
                i += 1
            section = "\n".join(body).strip()
            if section:
                sections.append(section)
        else:
            i += 1
    if not sections:
        return None
    return "\n\n".join(sections)
