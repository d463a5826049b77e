from pathlib import Path

import pytest

from fairreg.errors import NotFoundError, RetryableClientError
from fairreg.ingest import (
    FailingRepoClient,
    FixtureRepoClient,
    fetch_repo_metadata,
    parse_index_dump,
)

FIXTURES = Path(__file__).parent / "fixtures"


class TestRepoClient:
    def test_fixture_values_round_trip(self):
        client = FixtureRepoClient(FIXTURES / "repos.jsonl")
        meta = fetch_repo_metadata("https://github.com/ex/mapright", client)
        assert meta.forks == 7
        assert meta.commits == 120
        assert meta.language == "C++"
        assert meta.license == "MIT"

    def test_missing_license_is_none(self):
        client = FixtureRepoClient(FIXTURES / "repos.jsonl")
        meta = fetch_repo_metadata("https://github.com/ex/countstat", client)
        assert meta.license is None

    def test_unknown_repo_not_found(self):
        client = FixtureRepoClient(FIXTURES / "repos.jsonl")
        with pytest.raises(NotFoundError):
            fetch_repo_metadata("https://github.com/ex/missing", client)

    def test_malformed_url_is_precondition_error(self):
        client = FixtureRepoClient({})
        with pytest.raises(ValueError):
            fetch_repo_metadata("github.com/no-scheme", client)

    def test_io_failure_is_retryable(self):
        with pytest.raises(RetryableClientError):
            fetch_repo_metadata("https://github.com/ex/any", FailingRepoClient())

    def test_url_lookup_is_normalization_insensitive(self):
        client = FixtureRepoClient(FIXTURES / "repos.jsonl")
        meta = fetch_repo_metadata("http://www.github.com/ex/mapright/", client)
        assert meta.forks == 7


class TestIndexDump:
    def test_rows_parse_with_aggregator_provenance(self):
        report = parse_index_dump(FIXTURES / "dump_generic.jsonl", "generic")
        assert len(report.records) == 3
        assert all(r.provenance[0].source == "aggregator" for r in report.records)

    def test_row_without_name_is_isolated_error(self):
        report = parse_index_dump(FIXTURES / "dump_generic.jsonl", "generic")
        assert len(report.errors) == 1
        assert report.errors[0].line == 3
        assert "name" in report.errors[0].message

    def test_homepage_maps_to_links(self):
        report = parse_index_dump(FIXTURES / "dump_generic.jsonl", "generic")
        align = next(r for r in report.records if r.name == "AlignPro")
        assert align.links == ["https://alignpro.example.org"]
        assert align.languages == ["Java"]
        assert align.tool_type == "web_application"

    def test_version_row_becomes_release(self):
        report = parse_index_dump(FIXTURES / "dump_generic.jsonl", "generic")
        statbox = next(r for r in report.records if r.name == "StatBox")
        assert statbox.releases[0].version == "2.1"
        assert statbox.releases[0].date == "2016-10-01"

    def test_unknown_format_rejected(self):
        with pytest.raises(KeyError):
            parse_index_dump(FIXTURES / "dump_generic.jsonl", "nope")

    def test_malformed_json_row_collected(self, tmp_path):
        path = tmp_path / "dump.jsonl"
        path.write_text('{"name": "Ok", "homepage": "https://ok.example.org"}\n{broken\n')
        report = parse_index_dump(path, "generic")
        assert len(report.records) == 1
        assert len(report.errors) == 1
        assert report.errors[0].line == 2
