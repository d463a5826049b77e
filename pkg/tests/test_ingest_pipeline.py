import json
from pathlib import Path

import pytest

from fairreg.errors import NeedsCurationError
from fairreg.ingest import (
    FixtureRepoClient,
    GrantRef,
    LogisticGate,
    PublicationRecord,
    build_record_from_publication,
    fetch_repo_metadata,
    load_funder_registry,
    load_ic_table,
    load_organizations,
    run_ingest,
)
from fairreg.registry import RecordStore, load_stopwords
from fairreg.registry.vocab import data_path
from fairreg.thesaurus import ThesaurusConfig, build_thesaurus

FIXTURES = Path(__file__).parent / "fixtures"


def pub(**overrides):
    base = dict(
        pub_id="P100",
        title="ScanIt: a platform for image scanning",
        abstract=(
            "ScanIt is an open platform for image scanning, available at "
            "https://scanit.example.bio and https://github.com/ex/mapright."
        ),
    )
    base.update(overrides)
    return PublicationRecord(**base)


def test_record_assembles_name_links_and_repos():
    record = build_record_from_publication(pub())
    assert record.name == "ScanIt"
    assert "https://scanit.example.bio" in record.links
    assert record.source_repos == ["https://github.com/ex/mapright"]
    assert record.description.startswith("ScanIt is an open platform")
    assert record.provenance[0].source == "publication"
    assert record.provenance[0].origin_ref == "P100"


def test_repo_metadata_fills_usage_and_language():
    client = FixtureRepoClient(FIXTURES / "repos.jsonl")
    meta = fetch_repo_metadata("https://github.com/ex/mapright", client)
    record = build_record_from_publication(pub(), repo_meta=meta)
    assert record.usage.forks == 7
    assert record.usage.commits == 120
    assert record.languages == ["C++"]


def test_repo_name_is_fallback():
    client = FixtureRepoClient(FIXTURES / "repos.jsonl")
    meta = fetch_repo_metadata("https://github.com/ex/mapright", client)
    record = build_record_from_publication(
        pub(title="A method paper", abstract="No pattern here."), repo_meta=meta
    )
    assert record.name == "mapright"


def test_no_name_anywhere_needs_curation():
    with pytest.raises(NeedsCurationError):
        build_record_from_publication(
            pub(title="A method paper", abstract="Nothing to find here.")
        )


def test_grants_and_funders_populate_funding_fields():
    grants = [GrantRef("U54GM114833", "U54", "GM", "114833")]
    registry = load_funder_registry()
    funder = registry.get("nigms")
    record = build_record_from_publication(pub(), grants=grants, funders=[funder])
    assert record.award_numbers == ["U54GM114833"]
    assert record.funding_sources == ["nigms"]


def test_institutions_match_organization_registry():
    orgs = load_organizations()
    record = build_record_from_publication(
        pub(institutions=["University of California Los Angeles", "Unknown Place"]),
        organizations=orgs,
    )
    assert record.institutions == ["ORG0001"]


@pytest.fixture(scope="module")
def gate():
    rows = [
        json.loads(l)
        for l in data_path("gate_training.jsonl").read_text().splitlines()
        if l.strip()
    ]
    pubs = [PublicationRecord.from_dict(r["pub"]) for r in rows]
    labels = [bool(r["is_tool"]) for r in rows]
    thesaurus = build_thesaurus(
        [p.text() for p in pubs],
        config=ThesaurusConfig(min_count=2, stopwords=frozenset(load_stopwords())),
    )
    return LogisticGate(thesaurus).train(pubs, labels)


def load_corpus():
    return [
        PublicationRecord.from_dict(json.loads(l))
        for l in (FIXTURES / "ingest_pubs.jsonl").read_text().splitlines()
        if l.strip()
    ]


def test_batch_ingest_counts(gate, vocab):
    store = RecordStore(vocab)
    report = run_ingest(
        load_corpus(),
        gate=gate,
        store=store,
        repo_client=FixtureRepoClient(FIXTURES / "repos.jsonl"),
        ic_table=load_ic_table(),
        funder_registry=load_funder_registry(),
        organizations=load_organizations(),
        retrieved_at="2017-06-01T00:00:00+00:00",
    )
    assert report.examined == 10
    assert report.positives == 6
    assert report.built == 6
    assert len(store) == 6
    # Mined records lack required fields (releases, platforms...) so they park.
    assert report.stored_parked == 6

    mapright = next(r for r in store.all_records() if r.name == "MapRight")
    assert mapright.usage.forks == 7
    assert mapright.award_numbers == ["R01GM123456"]
    assert mapright.funding_sources == ["nigms"]
    assert mapright.institutions == ["ORG0001"]


def test_dry_run_writes_nothing(gate, vocab):
    store = RecordStore(vocab)
    report = run_ingest(load_corpus(), gate=gate, store=store, dry_run=True)
    assert report.positives == 6
    assert len(store) == 0
    assert report.stored_rids == []


def test_duplicate_submission_is_flagged(gate, vocab):
    store = RecordStore(vocab)
    corpus = load_corpus()[:1]
    run_ingest(corpus, gate=gate, store=store)
    report = run_ingest(corpus, gate=gate, store=store)
    assert report.duplicate_flags == 1
    rid = report.stored_rids[0]
    assert any(flag.startswith("duplicate_of:") for flag in store.flags(rid))
