"""Registry store: minted identifiers, current records, and revision history.

Mutations are serialized per store; reads hand out the current immutable
record objects. Records that fail validation are parked (curator-only)
instead of rejected, so sparse mined metadata can wait for curation.
"""

from __future__ import annotations

import json
import threading
from pathlib import Path
from typing import Callable

from ..errors import RevisionConflictError, StorageError, ValidationFailedError
from .canonical import (
    canonical_dict,
    diff_dicts,
    dumps_canonical,
    empty_canonical_dict,
    record_from_dict,
    replay,
)
from .model import Revision, ToolRecord, format_rid, rid_number
from .validate import validate_record
from .vocab import Vocabularies

STATE_ACTIVE = "active"
STATE_PARKED = "parked"


class RidCounter:
    """Atomic sequential id counter; ids are never reused.

    ``persist`` is called with the advanced value while the lock is held; if
    it raises, the counter rolls back and the mint fails.
    """

    def __init__(self, start: int = 0, persist: Callable[[int], None] | None = None):
        if start < 0:
            raise ValueError("counter must be non-negative")
        self._value = start
        self._persist = persist
        self._lock = threading.Lock()

    @property
    def value(self) -> int:
        with self._lock:
            return self._value

    def advance_to(self, n: int) -> None:
        with self._lock:
            if n > self._value:
                self._value = n

    def mint(self) -> str:
        with self._lock:
            nxt = self._value + 1
            if self._persist is not None:
                try:
                    self._persist(nxt)
                except Exception as exc:
                    raise StorageError(f"mint aborted: {exc}") from exc
            self._value = nxt
            return format_rid(nxt)


def mint_rid(counter: RidCounter) -> str:
    """Mint the next resource id from a persisted counter."""
    return counter.mint()


class RecordStore:
    """In-memory registry with optional JSON state persistence."""

    def __init__(self, vocabularies: Vocabularies, persist_counter=None):
        self.vocabularies = vocabularies
        self.counter = RidCounter(persist=persist_counter)
        self._records: dict[str, ToolRecord] = {}
        self._revisions: dict[str, list[Revision]] = {}
        self._states: dict[str, str] = {}
        self._flags: dict[str, list[str]] = {}
        self._lock = threading.RLock()

    # -- reads ---------------------------------------------------------------

    def __contains__(self, rid: str) -> bool:
        return rid in self._records

    def __len__(self) -> int:
        return len(self._records)

    def get(self, rid: str) -> ToolRecord | None:
        return self._records.get(rid)

    def state(self, rid: str) -> str | None:
        return self._states.get(rid)

    def flags(self, rid: str) -> list[str]:
        return list(self._flags.get(rid, []))

    def revisions(self, rid: str) -> list[Revision]:
        return list(self._revisions.get(rid, []))

    def resource_ids(self) -> set[str]:
        return set(self._records)

    def all_records(self) -> list[ToolRecord]:
        return [self._records[rid] for rid in sorted(self._records, key=rid_number)]

    def active_records(self) -> list[ToolRecord]:
        return [r for r in self.all_records() if self._states[r.accession] == STATE_ACTIVE]

    def validation_vocabularies(self, extra_rid: str | None = None) -> Vocabularies:
        rids = self.resource_ids()
        if extra_rid:
            rids.add(extra_rid)
        return self.vocabularies.with_resource_ids(rids)

    # -- mutations -----------------------------------------------------------

    def put(self, record: ToolRecord, editor: str = "system", timestamp: str = "") -> tuple[str, str]:
        """Store a new record, minting an accession if absent.

        Returns (resource id, state); invalid records are parked, not refused.
        """
        with self._lock:
            record = record.copy()
            if record.accession:
                if record.accession in self._records:
                    raise ValueError(f"accession {record.accession} already stored")
                self.counter.advance_to(rid_number(record.accession))
            else:
                record.accession = self.counter.mint()
            record.revision = 1

            report = validate_record(record, self.validation_vocabularies(record.accession))
            state = STATE_ACTIVE if report.ok else STATE_PARKED

            diff = diff_dicts(empty_canonical_dict(), canonical_dict(record))
            self._records[record.accession] = record
            self._states[record.accession] = state
            self._revisions[record.accession] = [
                Revision(record.accession, 1, editor, timestamp, diff)
            ]
            return record.accession, state

    def revise(
        self,
        rid: str,
        edit: dict,
        editor: str,
        base_revision: int,
        timestamp: str = "",
    ) -> tuple[ToolRecord, Revision]:
        """Apply a field-level edit under optimistic concurrency."""
        if "accession" in edit or "revision" in edit:
            raise ValueError("accession and revision cannot be edited")
        with self._lock:
            current = self._records.get(rid)
            if current is None:
                raise KeyError(rid)
            if base_revision != current.revision:
                raise RevisionConflictError(
                    f"base revision {base_revision} is stale (current {current.revision})"
                )
            old_c = canonical_dict(current)
            new_c = dict(old_c)
            new_c.update(edit)
            new_c["revision"] = current.revision + 1
            candidate = record_from_dict(new_c)

            report = validate_record(candidate, self.validation_vocabularies(rid))
            if not report.ok:
                raise ValidationFailedError(report)

            revision = Revision(
                rid, candidate.revision, editor, timestamp, diff_dicts(old_c, canonical_dict(candidate))
            )
            self._records[rid] = candidate
            self._states[rid] = STATE_ACTIVE
            self._revisions[rid].append(revision)
            return candidate, revision

    def flag(self, rid: str, note: str) -> None:
        with self._lock:
            self._flags.setdefault(rid, []).append(note)

    # -- history -------------------------------------------------------------

    def replay_canonical(self, rid: str) -> bytes:
        """Rebuild the record's canonical bytes from its revision diffs."""
        diffs = [rev.diff for rev in self._revisions[rid]]
        return dumps_canonical(replay(diffs))

    # -- persistence ----------------------------------------------------------

    def save(self, path: str | Path) -> None:
        with self._lock:
            state = {
                "counter": self.counter.value,
                "records": [canonical_dict(r) for r in self.all_records()],
                "states": dict(self._states),
                "flags": dict(self._flags),
                "revisions": {
                    rid: [
                        {
                            "revision": rev.revision,
                            "editor": rev.editor,
                            "timestamp": rev.timestamp,
                            "diff": rev.diff,
                        }
                        for rev in revs
                    ]
                    for rid, revs in self._revisions.items()
                },
            }
        Path(path).write_text(json.dumps(state, ensure_ascii=False, indent=1), encoding="utf-8")

    @classmethod
    def load(cls, path: str | Path, vocabularies: Vocabularies) -> "RecordStore":
        state = json.loads(Path(path).read_text(encoding="utf-8"))
        store = cls(vocabularies)
        store.counter.advance_to(state["counter"])
        for cdict in state["records"]:
            record = record_from_dict(cdict)
            store._records[record.accession] = record
        store._states = dict(state["states"])
        store._flags = {k: list(v) for k, v in state.get("flags", {}).items()}
        store._revisions = {
            rid: [
                Revision(rid, rev["revision"], rev["editor"], rev["timestamp"], rev["diff"])
                for rev in revs
            ]
            for rid, revs in state["revisions"].items()
        }
        return store
