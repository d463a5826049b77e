"""Operator command line: ingest, builds, evaluation, validation, serving.

Diagnostics go to stderr; data and reports go to stdout. Every command
supports --format json for machine-readable output and exits non-zero on
any error.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .classify import LabeledCorpus, evaluate, train_tfidf_baseline, train_topic_model
from .config import load_config
from .ingest import (
    FixtureRepoClient,
    LogisticGate,
    PublicationRecord,
    load_funder_registry,
    load_ic_table,
    load_organizations,
    run_ingest,
)
from .ir import build_index
from .registry import (
    RecordStore,
    from_jsonl,
    load_stopwords,
    load_vocabularies,
    validate_record,
)
from .registry.vocab import data_path
from .thesaurus import Thesaurus, ThesaurusConfig, build_thesaurus, load_ontology


def _fail(message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(1)


def _require_file(path: str) -> Path:
    p = Path(path)
    if not p.exists():
        _fail(f"file not found: {path}")
    return p


def _load_publications(path: Path) -> list[PublicationRecord]:
    pubs = []
    for line in path.read_text(encoding="utf-8").splitlines():
        if line.strip():
            pubs.append(PublicationRecord.from_dict(json.loads(line)))
    return pubs


def _load_labeled(path: Path) -> LabeledCorpus:
    items = []
    for line in path.read_text(encoding="utf-8").splitlines():
        if line.strip():
            row = json.loads(line)
            items.append((row["doc_text"], row["label"]))
    return LabeledCorpus(items)


def _pub_corpus_texts(pubs: list[PublicationRecord]) -> list[str]:
    return [pub.text() for pub in pubs]


def _default_gate() -> LogisticGate:
    """Gate trained on the packaged labeled publication fixture."""
    rows = [
        json.loads(line)
        for line in data_path("gate_training.jsonl").read_text(encoding="utf-8").splitlines()
        if line.strip()
    ]
    pubs = [PublicationRecord.from_dict(r["pub"]) for r in rows]
    labels = [bool(r["is_tool"]) for r in rows]
    thesaurus = build_thesaurus(
        _pub_corpus_texts(pubs),
        config=ThesaurusConfig(min_count=2, stopwords=frozenset(load_stopwords())),
    )
    return LogisticGate(thesaurus).train(pubs, labels)


@click.group()
def main() -> None:
    """FAIR software-metadata registry tools."""


@main.command()
@click.option("--corpus", "corpus_path", required=True, help="publication JSON-lines file")
@click.option("--repos", "repos_path", default=None, help="repository metadata fixture")
@click.option("--dry-run", is_flag=True, default=False)
@click.option("--store", "store_path", default=None, help="registry state file to update")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
def ingest(corpus_path, repos_path, dry_run, store_path, fmt):
    """Gate, extract, deduplicate, and store a publication batch."""
    pubs = _load_publications(_require_file(corpus_path))
    repo_client = FixtureRepoClient(_require_file(repos_path)) if repos_path else None

    vocab = load_vocabularies()
    if store_path and Path(store_path).exists():
        store = RecordStore.load(store_path, vocab)
    else:
        store = RecordStore(vocab)

    click.echo(f"ingesting {len(pubs)} publications", err=True)
    report = run_ingest(
        pubs,
        gate=_default_gate(),
        store=store,
        repo_client=repo_client,
        ic_table=load_ic_table(),
        funder_registry=load_funder_registry(),
        organizations=load_organizations(),
        dry_run=dry_run,
    )
    if not dry_run and store_path:
        store.save(store_path)

    if fmt == "json":
        click.echo(json.dumps(report.to_dict(), indent=1))
    else:
        for key, value in report.to_dict().items():
            if key not in ("stored_rids", "errors"):
                click.echo(f"{key}: {value}")
        for err in report.errors:
            click.echo(f"needs-curation: {err}", err=True)


@main.command("build-thesaurus")
@click.option("--corpus", "corpus_path", required=True)
@click.option("--ontology", "ontology_paths", multiple=True)
@click.option("--out", "out_path", required=True)
@click.option("--min-count", default=5, show_default=True)
@click.option("--tau", default=0.7, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
def build_thesaurus_cmd(corpus_path, ontology_paths, out_path, min_count, tau, fmt):
    """Build the phrase thesaurus from a publication corpus."""
    pubs = _load_publications(_require_file(corpus_path))
    ontologies = [load_ontology(_require_file(p)) for p in ontology_paths]
    thesaurus = build_thesaurus(
        _pub_corpus_texts(pubs),
        ontologies,
        ThesaurusConfig(min_count=min_count, tau=tau, stopwords=frozenset(load_stopwords())),
    )
    Path(out_path).write_text(thesaurus.dumps(), encoding="utf-8")
    summary = {
        "phrases": len(thesaurus),
        "synonym_sets": len(thesaurus.synonym_sets),
        "hyper_edges": len(thesaurus.hyper_edges),
        "version_hash": thesaurus.version_hash,
        "out": out_path,
    }
    click.echo(json.dumps(summary, indent=1) if fmt == "json" else
               "\n".join(f"{k}: {v}" for k, v in summary.items()))


@main.command("build-index")
@click.option("--records", "records_path", required=True, help="canonical record JSON-lines")
@click.option("--thesaurus", "thesaurus_path", required=True)
@click.option("--out", "out_path", required=True)
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
def build_index_cmd(records_path, thesaurus_path, out_path, fmt):
    """Vectorize records into a searchable snapshot."""
    records = from_jsonl(_require_file(records_path).read_text(encoding="utf-8"))
    thesaurus = Thesaurus.loads(_require_file(thesaurus_path).read_text(encoding="utf-8"))
    index = build_index(records, thesaurus, load_vocabularies())
    index.save(out_path)
    summary = {"documents": index.doc_count, "thesaurus_hash": index.thesaurus_hash, "out": out_path}
    click.echo(json.dumps(summary, indent=1) if fmt == "json" else
               "\n".join(f"{k}: {v}" for k, v in summary.items()))


@main.command("classify-eval")
@click.option("--train", "train_path", required=True)
@click.option("--test", "test_path", required=True)
@click.option("--thesaurus", "thesaurus_path", default=None)
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
def classify_eval(train_path, test_path, thesaurus_path, fmt):
    """Train the topic model and the lexical baseline; report both."""
    train = _load_labeled(_require_file(train_path))
    test = _load_labeled(_require_file(test_path))
    if thesaurus_path:
        thesaurus = Thesaurus.loads(_require_file(thesaurus_path).read_text(encoding="utf-8"))
    else:
        thesaurus = build_thesaurus(
            [text for text, _ in train.items],
            config=ThesaurusConfig(min_count=2, stopwords=frozenset(load_stopwords())),
        )
    topic_report = evaluate(train_topic_model(train, thesaurus), test)
    tfidf_report = evaluate(train_tfidf_baseline(train), test)
    if fmt == "json":
        click.echo(json.dumps(
            {"thesaurus_model": topic_report.to_dict(), "tfidf_baseline": tfidf_report.to_dict()},
            indent=1,
        ))
    else:
        click.echo("thesaurus model\n" + topic_report.table())
        click.echo("\ntf-idf baseline\n" + tfidf_report.table())


@main.command()
@click.option("--record", "record_path", required=True, help="record JSON-lines file")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
def validate(record_path, fmt):
    """Validate records against the metadata schema; exit 0 iff all pass."""
    records = from_jsonl(_require_file(record_path).read_text(encoding="utf-8"))
    vocab = load_vocabularies()
    reports = [(r, validate_record(r, vocab)) for r in records]
    failures = [(r, rep) for r, rep in reports if not rep.ok]
    if fmt == "json":
        click.echo(json.dumps(
            [
                {"accession": r.accession, "name": r.name, **rep.to_dict()}
                for r, rep in reports
            ],
            indent=1,
        ))
    else:
        for r, rep in reports:
            status = "ok" if rep.ok else "INVALID"
            click.echo(f"{r.accession or '-'} {r.name or '-'}: {status}")
            for v in rep.violations:
                click.echo(f"  {v}")
    if failures:
        sys.exit(1)


@main.command()
@click.option("--config", "config_path", default=None)
def serve(config_path):
    """Run the REST API server."""
    import uvicorn

    from .service import create_app

    config = load_config(_require_file(config_path) if config_path else None)
    missing = config.validate_paths()
    if missing:
        _fail("missing configured files: " + ", ".join(missing))
    click.echo(f"serving on {config.host}:{config.port}", err=True)
    uvicorn.run(create_app(config), host=config.host, port=config.port, log_level="warning")


if __name__ == "__main__":
    main()
