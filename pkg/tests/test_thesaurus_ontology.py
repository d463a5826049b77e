from pathlib import Path

import pytest

from fairreg.thesaurus import OntologyLoadError, load_ontology

FIXTURES = Path(__file__).parent / "fixtures"


def test_fixture_ontology_parses():
    graph = load_ontology(FIXTURES / "ontology_small.tsv")
    assert len(graph) == 4
    assert graph.terms["t_rnaseq"].parents == ("t_seq",)
    assert graph.terms["t_align"].synonyms == ("alignment of sequences",)


def test_synonyms_land_in_surface_lookup():
    graph = load_ontology(FIXTURES / "ontology_small.tsv")
    surfaces = graph.surface_forms()
    assert surfaces["rna-seq"] == "t_rnaseq"
    assert surfaces["rnaseq"] == "t_rnaseq"
    assert surfaces["alignment of sequences"] == "t_align"


def test_ancestor_queries():
    graph = load_ontology(FIXTURES / "ontology_small.tsv")
    assert graph.ancestors("t_rnaseq") == {"t_seq", "t_analysis"}
    assert graph.is_strict_ancestor("t_analysis", "t_rnaseq")
    assert not graph.is_strict_ancestor("t_rnaseq", "t_analysis")
    assert not graph.is_strict_ancestor("t_rnaseq", "t_rnaseq")


def test_undefined_parent_is_an_error(tmp_path):
    path = tmp_path / "bad.tsv"
    path.write_text("a\tA\t\t\nb\tB\t\tX9\n")
    with pytest.raises(OntologyLoadError) as err:
        load_ontology(path)
    assert "X9" in str(err.value)
    assert ":2" in str(err.value)


def test_duplicate_id_is_an_error(tmp_path):
    path = tmp_path / "dup.tsv"
    path.write_text("a\tA\nb\tB\na\tAgain\n")
    with pytest.raises(OntologyLoadError) as err:
        load_ontology(path)
    assert "duplicate" in str(err.value)


def test_rows_without_label_rejected(tmp_path):
    path = tmp_path / "nolabel.tsv"
    path.write_text("a\t\n")
    with pytest.raises(OntologyLoadError):
        load_ontology(path)
