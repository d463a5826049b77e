import pytest

from fairreg.registry import (
    Person,
    RecordStore,
    Release,
    SourceProvenance,
    ToolRecord,
    load_vocabularies,
)

FIXTURE_DIR = "tests/fixtures"


@pytest.fixture(scope="session")
def vocab():
    return load_vocabularies()


def make_record(**overrides) -> ToolRecord:
    """A record that passes validation against the packaged vocabularies."""
    record = ToolRecord(
        name="AlignCraft",
        accession="AZ1",
        description="Multiple sequence alignment toolkit for genomic data.",
        links=["https://aligncraft.example.org"],
        tool_type="command_line_tool",
        functions=["op_sequence_alignment"],
        authors=[Person(name="Ada Researcher", orcid="0000-0002-1825-0097")],
        domains=["genomics"],
        releases=[Release(version="1.0.0", date="2016-05-01")],
        platforms=["linux"],
        provenance=[
            SourceProvenance(
                source="user_submission",
                origin_ref="u1",
                retrieved_at="2017-01-01T00:00:00+00:00",
            )
        ],
    )
    for key, value in overrides.items():
        setattr(record, key, value)
    return record


@pytest.fixture()
def record():
    return make_record()


@pytest.fixture()
def store(vocab):
    return RecordStore(vocab)
