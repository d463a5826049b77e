from pathlib import Path

from fairreg.thesaurus import (
    OntologyGraph,
    OntologyTerm,
    Thesaurus,
    ThesaurusConfig,
    build_thesaurus,
    enrich_from_ontology,
    extract_phrases,
    load_ontology,
    synonym_candidates,
    thesaurus_from_stats,
)

FIXTURES = Path(__file__).parent / "fixtures"

CORPUS = [
    "we analyzed rna-seq data with standard tools today",
    "we analyzed rnaseq data with standard tools today",
] * 6


def ontology(*terms):
    graph = OntologyGraph(name="test")
    for t in terms:
        graph.terms[t.term_id] = t
    return graph


def test_build_is_deterministic():
    a = build_thesaurus(CORPUS)
    b = build_thesaurus(CORPUS)
    assert a.version_hash == b.version_hash
    assert a.phrases == b.phrases


def test_pipeline_equals_stagewise_oracle():
    config = ThesaurusConfig(min_count=5, max_len=2, tau=0.7)
    stats = extract_phrases(CORPUS, min_count=5, max_len=2)
    pairs = synonym_candidates(stats, tau=0.7)
    oracle = thesaurus_from_stats(stats, pairs)
    built = build_thesaurus(CORPUS, config=config)
    assert built.version_hash == oracle.version_hash
    assert built.phrases == oracle.phrases


def test_zero_ontologies_is_corpus_only():
    assert build_thesaurus(CORPUS, ontologies=[]).version_hash == build_thesaurus(CORPUS).version_hash


def test_enrichment_with_empty_ontology_is_identity():
    t = build_thesaurus(CORPUS)
    enriched = enrich_from_ontology(t, OntologyGraph(name="empty"))
    assert enriched.version_hash == t.version_hash


def test_ontology_synonyms_merge_sets():
    corpus = ["sequence alignment of reads improves mapping"] * 6
    t = build_thesaurus(corpus)
    graph = ontology(
        OntologyTerm("t1", "sequence alignment", synonyms=("alignment of sequences",))
    )
    enriched = enrich_from_ontology(t, graph)
    assert enriched.canonical_of("sequence alignment") == enriched.canonical_of(
        "alignment of sequences"
    )


def test_corpus_pair_demoted_to_hyper_edge():
    # The corpus proposes (analysis, sequence analysis) as synonyms; the
    # ontology places one strictly above the other.
    t = Thesaurus(
        surfaces={"analysis": 10, "sequence analysis": 8},
        corpus_pairs=[("analysis", "sequence analysis")],
    ).rebuild()
    assert t.canonical_of("analysis") == t.canonical_of("sequence analysis")

    graph = ontology(
        OntologyTerm("t_root", "analysis"),
        OntologyTerm("t_seq", "sequence analysis", parents=("t_root",)),
    )
    enriched = enrich_from_ontology(t, graph)
    assert enriched.canonical_of("analysis") != enriched.canonical_of("sequence analysis")
    assert ("sequence analysis", "analysis") in enriched.hyper_edges


def test_parent_links_become_edges_for_present_phrases():
    corpus = ["rna-seq analysis of sequencing data"] * 6
    graph = load_ontology(FIXTURES / "ontology_small.tsv")
    t = build_thesaurus(corpus, ontologies=[graph])
    assert ("rna-seq", "sequencing") in t.hyper_edges
    assert ("sequencing", "analysis") in t.hyper_edges


def test_cycle_forming_edges_dropped_with_warning():
    t = Thesaurus(
        surfaces={"a": 5, "b": 5},
        edge_surface_pairs=[("a", "b"), ("b", "a")],
    ).rebuild()
    assert t.hyper_edges == [("a", "b")]
    assert any("cycle" in w for w in t.warnings)


def test_hyper_edges_form_a_dag():
    graph = load_ontology(FIXTURES / "ontology_small.tsv")
    corpus = ["rna-seq sequencing analysis sequence alignment study"] * 6
    t = build_thesaurus(corpus, ontologies=[graph])
    # Kahn-style check: repeatedly remove sinks.
    edges = set(t.hyper_edges)
    nodes = {n for e in edges for n in e}
    while nodes:
        sinks = {n for n in nodes if not any(src == n for src, _ in edges)}
        if not sinks:
            raise AssertionError("cycle detected in hyper_edges")
        nodes -= sinks
        edges = {e for e in edges if e[0] in nodes and e[1] in nodes}


def test_serialization_round_trip_preserves_hash():
    graph = load_ontology(FIXTURES / "ontology_small.tsv")
    t = build_thesaurus(CORPUS, ontologies=[graph])
    again = Thesaurus.loads(t.dumps())
    assert again.version_hash == t.version_hash
    assert again.phrases == t.phrases
    assert again.surface_map == t.surface_map
    assert again.hyper_edges == t.hyper_edges


def test_synonym_sets_are_disjoint_and_covered():
    graph = load_ontology(FIXTURES / "ontology_small.tsv")
    t = build_thesaurus(CORPUS, ontologies=[graph])
    seen = set()
    for members in t.synonym_sets:
        for m in members:
            assert m not in seen
            seen.add(m)
            assert t.surface_map[m] == members[0]
    for canonical in t.phrases:
        assert t.surface_map[canonical] == canonical
