import pytest

from fairreg.errors import UnknownICError
from fairreg.ingest import (
    GrantRef,
    extract_grants,
    load_funder_registry,
    load_ic_table,
    map_grant_to_ic,
    match_funder_name,
)


@pytest.fixture(scope="module")
def ic_table():
    return load_ic_table()


@pytest.fixture(scope="module")
def funders():
    return load_funder_registry()


class TestGrantExtraction:
    def test_compact_award_numbers(self):
        text = "NIH Awards U54GM114833 to WW and PP, as well as R35HL135772 to PP"
        grants = extract_grants(text)
        assert [(g.activity_code, g.ic_code, g.serial) for g in grants] == [
            ("U54", "GM", "114833"),
            ("R35", "HL", "135772"),
        ]

    def test_space_variant(self):
        grants = extract_grants("funded by R01 HL123456")
        assert [(g.activity_code, g.ic_code, g.serial) for g in grants] == [
            ("R01", "HL", "123456")
        ]

    def test_hyphen_and_application_type(self):
        grants = extract_grants("award 2R01-GM-987654 renewed")
        assert [(g.activity_code, g.ic_code, g.serial) for g in grants] == [
            ("R01", "GM", "987654")
        ]

    def test_plain_numbers_do_not_match(self):
        assert extract_grants("grant 12345") == []
        assert extract_grants("") == []
        assert extract_grants(None) == []

    def test_duplicates_collapse(self):
        grants = extract_grants("R01HL123456 and again R01HL123456")
        assert len(grants) == 1

    def test_components_reserialize_into_normalized_input(self):
        text = "awards 1 U54 GM114833, R35-HL-135772, and 5R01DK111222 were cited"
        normalized = text.replace(" ", "").replace("-", "")
        for grant in extract_grants(text):
            assert grant.canonical in normalized


class TestICTable:
    def test_gm_maps_to_nigms(self, ic_table):
        grant = GrantRef("U54GM114833", "U54", "GM", "114833")
        institute = map_grant_to_ic(grant, ic_table)
        assert institute.acronym == "NIGMS"
        assert institute.name == "National Institute of General Medical Sciences"

    def test_hl_maps_to_nhlbi(self, ic_table):
        grant = GrantRef("R35HL135772", "R35", "HL", "135772")
        assert map_grant_to_ic(grant, ic_table).acronym == "NHLBI"

    def test_unknown_code_raises(self, ic_table):
        with pytest.raises(UnknownICError):
            map_grant_to_ic(GrantRef("X01ZZ000000", "X01", "ZZ", "000000"), ic_table)

    def test_table_covers_the_institute_set(self, ic_table):
        assert len(ic_table) == 28
        assert "GM" in ic_table and "HL" in ic_table and "CA" in ic_table


class TestFunderMatching:
    def test_exact_after_normalization(self, funders):
        entry = match_funder_name("National Institutes of Health", funders)
        assert entry is not None and entry.funder_id == "nih"
        entry = match_funder_name("national institutes, of health!", funders)
        assert entry is not None and entry.funder_id == "nih"

    def test_alias_match(self, funders):
        entry = match_funder_name("Natl. Institutes of Health", funders)
        assert entry is not None and entry.funder_id == "nih"

    def test_below_threshold_returns_none(self, funders):
        assert match_funder_name("Ministry of Silly Walks", funders) is None

    def test_token_jaccard_match(self, funders):
        # 6 of 7 union tokens shared with the NIGMS canonical name.
        entry = match_funder_name(
            "The National Institute of General Medical Sciences", funders
        )
        assert entry is not None and entry.funder_id == "nigms"
