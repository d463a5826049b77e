"""Keyless REST API over the registry and the search engine.

Reads need no credentials; writes need a bearer token; admin operations
need the admin role. The serving index is an immutable snapshot swapped
atomically on reindex, so in-flight queries always finish consistently.
"""

from __future__ import annotations

import json
import threading
from datetime import datetime, timezone
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from ..config import AppConfig
from ..errors import (
    NotFoundError,
    RevisionConflictError,
    ValidationFailedError,
)
from ..ingest.dedup import match_duplicates
from ..ingest.grants import extract_grants, load_ic_table
from ..ingest.funders import load_funder_registry
from ..ir import (
    EmptyQueryError,
    FilterStage,
    PhraseIndex,
    QueryPlan,
    QueryStage,
    Suggester,
    UnknownFieldError,
    build_index,
    highlight_terms,
    match_all_plan,
    search,
)
from ..registry.canonical import canonical_dict, record_from_dict
from ..registry.model import SourceProvenance, rid_number
from ..registry.store import RecordStore, STATE_ACTIVE
from ..registry.validate import validate_record
from ..registry.vocab import load_stopwords, load_vocabularies
from ..thesaurus import (
    OntologyGraph,
    Thesaurus,
    ThesaurusConfig,
    build_thesaurus,
    load_ontology,
)
from ..ir.index import record_document_text
from .auth import AuthStore, DuplicateEmailError
from .events import EventLog

_SORTS = ("auto", "relevance", "name", "-name")


class ApiError(Exception):
    def __init__(self, status: int, error: str, details: list | None = None):
        self.status = status
        self.error = error
        self.details = details or []
        super().__init__(error)


def _now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


class ServiceState:
    """Everything the handlers share: store, snapshot, auth, event log."""

    def __init__(self, config: AppConfig | None = None, store: RecordStore | None = None):
        self.config = config or AppConfig()
        self.vocab = load_vocabularies(self.config.vocab_dir)
        if store is not None:
            self.store = store
        elif self.config.store_path and Path(self.config.store_path).exists():
            self.store = RecordStore.load(self.config.store_path, self.vocab)
        else:
            self.store = RecordStore(self.vocab)
        self.ic_table = load_ic_table()
        self.funder_registry = load_funder_registry()
        self.auth = AuthStore(self.config.admin_emails, self.config.curator_emails)
        self.events = EventLog()
        self.stopwords = load_stopwords()

        # One merged ontology powers suggestions and description highlighting.
        self.display_ontology = OntologyGraph(name="display")
        for graph in (self.vocab.functions, self.vocab.domains):
            self.display_ontology.terms.update(graph.terms)

        self._lock = threading.Lock()
        self._dirty = True
        self._thesaurus: Thesaurus | None = None
        self._index: PhraseIndex | None = None
        self._suggester: Suggester | None = None
        self._fixed_thesaurus = bool(self.config.thesaurus_path or self.config.corpus_path)

    # -- snapshot management -------------------------------------------------

    def _build_thesaurus(self) -> Thesaurus:
        config = ThesaurusConfig(
            min_count=self.config.min_count,
            max_len=self.config.max_len,
            tau=self.config.tau,
            window=self.config.window,
            stopwords=frozenset(self.stopwords),
        )
        ontologies = [load_ontology(p) for p in self.config.ontology_paths]
        ontologies.extend([self.vocab.functions, self.vocab.domains])
        if self.config.thesaurus_path:
            return Thesaurus.loads(Path(self.config.thesaurus_path).read_text(encoding="utf-8"))
        if self.config.corpus_path:
            corpus = []
            for line in Path(self.config.corpus_path).read_text(encoding="utf-8").splitlines():
                if line.strip():
                    pub = json.loads(line)
                    corpus.append(
                        " ".join(
                            [pub.get("title", ""), pub.get("abstract", "")]
                            + list(pub.get("subject_headings", []))
                        )
                    )
            return build_thesaurus(corpus, ontologies, config)
        # Fallback: derive the vocabulary from the records themselves.
        corpus = [record_document_text(r, self.vocab) for r in self.store.active_records()]
        return build_thesaurus(corpus, ontologies, config)

    def reindex(self) -> PhraseIndex:
        """Rebuild (and atomically swap) the serving snapshot."""
        with self._lock:
            if self._thesaurus is None or not self._fixed_thesaurus:
                self._thesaurus = self._build_thesaurus()
            index = build_index(self.store.active_records(), self._thesaurus, self.vocab)
            self._index = index
            self._suggester = Suggester(self._thesaurus, [self.display_ontology])
            self._dirty = False
            if self.config.snapshot_path:
                index.save(self.config.snapshot_path)
            return index

    def mark_dirty(self) -> None:
        with self._lock:
            self._dirty = True

    def current(self) -> tuple[PhraseIndex, Thesaurus, Suggester]:
        with self._lock:
            if not self._dirty and self._index is not None:
                return self._index, self._thesaurus, self._suggester
        self.reindex()
        with self._lock:
            return self._index, self._thesaurus, self._suggester

    # -- shared handler logic --------------------------------------------------

    def account_for(self, request: Request):
        header = request.headers.get("authorization", "")
        token = header[7:] if header.lower().startswith("bearer ") else None
        return self.auth.verify(token)

    def require_account(self, request: Request):
        account = self.account_for(request)
        if account is None:
            raise ApiError(401, "authentication required")
        return account

    def session_of(self, request: Request) -> str:
        return request.headers.get("x-session-id", "anon")

    def visible_record(self, rid: str, request: Request):
        record = self.store.get(rid)
        if record is None:
            raise ApiError(404, f"no tool with accession {rid}")
        if self.store.state(rid) != STATE_ACTIVE:
            account = self.account_for(request)
            if account is None or not account.has_role("curator"):
                raise ApiError(404, f"no tool with accession {rid}")
        return record

    def flag_duplicates(self, rid: str) -> int:
        stored = self.store.get(rid)
        others = [r for r in self.store.all_records() if r.accession != rid]
        flags = 0
        for cluster in match_duplicates(others + [stored]):
            if len(cluster) > 1 and any(r.accession == rid for r in cluster):
                dup_of = sorted(r.accession for r in cluster if r.accession != rid)
                self.store.flag(rid, "duplicate_of:" + ",".join(dup_of))
                flags += 1
        return flags

    def institutes_with_counts(self) -> list[dict]:
        counts: dict[str, set[str]] = {}
        for record in self.store.active_records():
            for award in record.award_numbers:
                for grant in extract_grants(award):
                    if grant.ic_code in self.ic_table:
                        counts.setdefault(grant.ic_code, set()).add(record.accession)
        return [
            {
                "acronym": inst.acronym,
                "name": inst.name,
                "ic_code": inst.ic_code,
                "tool_count": len(counts.get(inst.ic_code, ())),
            }
            for inst in self.ic_table.institutes
        ]


def _parse_stages(request: Request) -> list:
    stages: list = []
    for key, value in request.query_params.multi_items():
        if key == "q":
            if not value.strip():
                raise ApiError(422, "empty q value")
            stages.append(QueryStage(value))
        elif key.startswith("field."):
            stages.append(FilterStage(key[len("field."):], value))
    return stages


def _parse_int(request: Request, name: str, default: int, lo: int, hi: int) -> int:
    raw = request.query_params.get(name)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ApiError(400, f"{name} must be an integer")
    if not lo <= value <= hi:
        raise ApiError(400, f"{name} must be between {lo} and {hi}")
    return value


def _hit_payload(hit, state: ServiceState) -> dict:
    record = state.store.get(hit.doc_id)
    return {
        "accession": hit.doc_id,
        "similarity": hit.similarity,
        "usage_score": hit.usage_score,
        "rank": hit.rank,
        "record": canonical_dict(record),
    }


def create_app(config: AppConfig | None = None, store: RecordStore | None = None) -> FastAPI:
    state = ServiceState(config, store)
    app = FastAPI(title="fairreg", docs_url=None, redoc_url=None)
    app.state.service = state

    app.add_middleware(
        CORSMiddleware,
        allow_origins=[state.config.ui_origin],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(ApiError)
    async def _api_error(_request: Request, exc: ApiError):
        return JSONResponse({"error": exc.error, "details": exc.details}, status_code=exc.status)

    # -- search ----------------------------------------------------------------

    @app.get("/api/v1/tools")
    def list_tools(request: Request):
        sort = request.query_params.get("sort", "auto")
        if sort not in _SORTS:
            raise ApiError(400, f"unknown sort: {sort}")
        page = _parse_int(request, "page", 1, 1, 10_000_000)
        per_page = _parse_int(request, "per_page", 10, 1, 100)
        stages = _parse_stages(request)
        index, thesaurus, _ = state.current()
        if stages:
            plan = QueryPlan(
                stages=tuple(stages), page=page, per_page=per_page,
                sort=sort, epsilon=state.config.epsilon,
            )
        else:
            plan = match_all_plan(page, per_page, "name" if sort in ("auto", "relevance") else sort)
        try:
            result = search(index, plan, thesaurus)
        except UnknownFieldError as exc:
            raise ApiError(400, str(exc))
        except EmptyQueryError as exc:
            raise ApiError(422 if "empty" in str(exc) else 400, str(exc))
        state.events.record("query", state.session_of(request), str(request.query_params))
        return {
            "total": result.total,
            "page": page,
            "per_page": per_page,
            "hits": [_hit_payload(h, state) for h in result.hits],
        }

    @app.get("/api/v1/tools/{rid}")
    def get_tool(rid: str, request: Request):
        record = state.visible_record(rid, request)
        state.events.record("view", state.session_of(request), rid)
        spans = highlight_terms(
            record.description, state.display_ontology, state.config.highlight_url_template
        )
        return {
            "record": canonical_dict(record),
            "state": state.store.state(rid),
            "flags": state.store.flags(rid),
            "highlights": [
                {"start": s.start, "end": s.end, "term_id": s.term_id, "url": s.url}
                for s in spans
            ],
        }

    @app.get("/api/v1/tools/{rid}/revisions")
    def get_revisions(rid: str, request: Request):
        state.visible_record(rid, request)
        return {
            "revisions": [
                {
                    "revision": rev.revision,
                    "editor": rev.editor,
                    "timestamp": rev.timestamp,
                    "diff": rev.diff,
                }
                for rev in state.store.revisions(rid)
            ]
        }

    # -- writes ------------------------------------------------------------------

    async def _json_body(request: Request) -> dict:
        try:
            body = await request.json()
        except json.JSONDecodeError:
            raise ApiError(400, "request body is not valid JSON")
        if not isinstance(body, dict):
            raise ApiError(400, "request body must be a JSON object")
        return body

    @app.post("/api/v1/tools", status_code=201)
    async def submit_tool(request: Request):
        account = state.require_account(request)
        body = await _json_body(request)
        body.pop("accession", None)
        body.pop("revision", None)
        try:
            record = record_from_dict(body)
        except (KeyError, TypeError, ValueError) as exc:
            raise ApiError(422, f"malformed record: {exc}")
        record.submitter = account.user_id
        record.provenance = [
            SourceProvenance("user_submission", account.user_id, _now())
        ]
        report = validate_record(
            record, state.store.validation_vocabularies(), require_accession=False
        )
        if not report.ok:
            raise ApiError(422, "validation failed", report.to_dict()["violations"])
        rid, _ = state.store.put(record, editor=account.user_id, timestamp=_now())
        state.flag_duplicates(rid)
        state.events.record("submit", state.session_of(request), rid)
        state.mark_dirty()
        return {"accession": rid}

    @app.put("/api/v1/tools/{rid}")
    async def edit_tool(rid: str, request: Request):
        account = state.require_account(request)
        if state.store.get(rid) is None:
            raise ApiError(404, f"no tool with accession {rid}")
        body = await _json_body(request)
        if "base_revision" not in body:
            raise ApiError(422, "base_revision is required")
        edit = body.get("edit", {})
        if not isinstance(edit, dict) or not edit:
            raise ApiError(422, "edit must be a non-empty object")
        try:
            record, revision = state.store.revise(
                rid, edit, editor=account.user_id,
                base_revision=int(body["base_revision"]), timestamp=_now(),
            )
        except RevisionConflictError as exc:
            raise ApiError(409, str(exc))
        except ValidationFailedError as exc:
            raise ApiError(422, "validation failed", exc.report.to_dict()["violations"])
        except ValueError as exc:
            raise ApiError(422, str(exc))
        state.events.record("edit", state.session_of(request), rid)
        state.mark_dirty()
        return {"accession": rid, "revision": revision.revision}

    # -- discovery ----------------------------------------------------------------

    @app.get("/api/v1/suggest")
    def suggest(request: Request):
        prefix = request.query_params.get("prefix", "")
        if len(prefix) < 1:
            raise ApiError(422, "prefix must be at least one character")
        limit = _parse_int(request, "limit", 10, 1, 50)
        _, _, suggester = state.current()
        return {"terms": suggester.suggest(prefix, limit)}

    @app.get("/api/v1/facets")
    def facets(request: Request):
        stages = _parse_stages(request)
        index, thesaurus, _ = state.current()
        plan = QueryPlan(stages=tuple(stages)) if stages else match_all_plan()
        try:
            result = search(index, plan, thesaurus)
        except UnknownFieldError as exc:
            raise ApiError(400, str(exc))
        except EmptyQueryError as exc:
            raise ApiError(422 if "empty" in str(exc) else 400, str(exc))
        counts: dict[str, dict[str, int]] = {
            "domains": {}, "platforms": {}, "tool_type": {}, "languages": {},
        }
        for rid in result.all_doc_ids:
            fields = index.field_store[rid]
            for facet in counts:
                values = fields.get(facet)
                values = values if isinstance(values, list) else [values]
                for value in values:
                    if value:
                        counts[facet][value] = counts[facet].get(value, 0) + 1
        return {"total": result.total, "counts": counts}

    @app.get("/api/v1/institutes")
    def institutes():
        return {"institutes": state.institutes_with_counts()}

    @app.get("/api/v1/institutes/{code}/tools")
    def institute_tools(code: str):
        institute = state.ic_table.by_code.get(code)
        if institute is None:
            raise ApiError(404, f"no institute with code {code}")
        tools = []
        for record in state.store.active_records():
            ics = {
                g.ic_code for award in record.award_numbers for g in extract_grants(award)
            }
            if code in ics:
                tools.append(canonical_dict(record))
        tools.sort(key=lambda r: rid_number(r["accession"]))
        return {
            "institute": {
                "acronym": institute.acronym,
                "name": institute.name,
                "ic_code": institute.ic_code,
            },
            "total": len(tools),
            "tools": tools,
        }

    # -- auth ------------------------------------------------------------------------

    @app.post("/api/v1/auth/register", status_code=201)
    async def register(request: Request):
        body = await _json_body(request)
        email, password = body.get("email"), body.get("password")
        if not email or not password:
            raise ApiError(422, "email and password are required")
        try:
            account = state.auth.register(email, password)
        except DuplicateEmailError as exc:
            raise ApiError(409, str(exc))
        token = state.auth.login(email, password)
        return {"user_id": account.user_id, "token": token}

    @app.post("/api/v1/auth/login")
    async def login(request: Request):
        body = await _json_body(request)
        token = state.auth.login(body.get("email", ""), body.get("password", ""))
        if token is None:
            raise ApiError(401, "bad credentials")
        return {"token": token}

    # -- admin ------------------------------------------------------------------------

    @app.post("/api/v1/admin/reindex")
    def reindex(request: Request):
        account = state.require_account(request)
        if not account.has_role("admin"):
            raise ApiError(403, "admin role required")
        index = state.reindex()
        return {"doc_count": index.doc_count, "thesaurus_hash": index.thesaurus_hash}

    # -- static UI ----------------------------------------------------------------------

    if state.config.static_dir and Path(state.config.static_dir).is_dir():
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=state.config.static_dir, html=True), name="ui")

    return app
