"""NIH-style grant number extraction and institute mapping."""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

from ..errors import UnknownICError
from ..registry.vocab import data_path

# Optional 1-digit application type, 3-char activity code, 2-letter
# institute code, 6-digit serial; single space/hyphen separators allowed.
_GRANT_RE = re.compile(
    r"(?<![A-Za-z0-9])(?:\d[\s-]?)?([A-Z][A-Z0-9]{2})[\s-]?([A-Z]{2})[\s-]?(\d{6})(?!\d)"
)


@dataclass(frozen=True)
class GrantRef:
    raw: str
    activity_code: str
    ic_code: str
    serial: str

    @property
    def canonical(self) -> str:
        return f"{self.activity_code}{self.ic_code}{self.serial}"


@dataclass(frozen=True)
class Institute:
    acronym: str
    name: str
    ic_code: str


class ICTable:
    """Institute/center lookup keyed by the 2-letter grant code."""

    def __init__(self, institutes: list[Institute]):
        self.institutes = list(institutes)
        self.by_code = {inst.ic_code: inst for inst in institutes}
        self.by_acronym = {inst.acronym: inst for inst in institutes}

    def __len__(self) -> int:
        return len(self.institutes)

    def __contains__(self, ic_code: str) -> bool:
        return ic_code in self.by_code


def load_ic_table(path: str | Path | None = None) -> ICTable:
    p = Path(path) if path is not None else data_path("ic_table.tsv")
    institutes = []
    for raw in p.read_text(encoding="utf-8").splitlines():
        line = raw.strip("\n")
        if not line.strip() or line.startswith("#"):
            continue
        acronym, name, ic_code = line.split("\t")
        institutes.append(Institute(acronym=acronym.strip(), name=name.strip(), ic_code=ic_code.strip()))
    return ICTable(institutes)


def extract_grants(ack_text: str | None) -> list[GrantRef]:
    """All grant-shaped matches, deduplicated on their components."""
    if not ack_text:
        return []
    out: list[GrantRef] = []
    seen: set[tuple[str, str, str]] = set()
    for m in _GRANT_RE.finditer(ack_text):
        key = (m.group(1), m.group(2), m.group(3))
        if key in seen:
            continue
        seen.add(key)
        out.append(
            GrantRef(raw=m.group(0).strip(), activity_code=key[0], ic_code=key[1], serial=key[2])
        )
    return out


def map_grant_to_ic(grant: GrantRef, ic_table: ICTable) -> Institute:
    institute = ic_table.by_code.get(grant.ic_code)
    if institute is None:
        raise UnknownICError(f"no institute with code {grant.ic_code!r}")
    return institute
