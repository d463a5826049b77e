import math

from fairreg.thesaurus import extract_phrases, sparse_cosine, synonym_candidates
from fairreg.thesaurus.phrases import PhraseStats


def test_identical_context_phrases_pair_at_cosine_one():
    # Two surface variants used in byte-identical contexts.
    corpus = ["we analyzed rna-seq data with standard tools today"] * 6 + [
        "we analyzed rnaseq data with standard tools today"
    ] * 6
    stats = extract_phrases(corpus, min_count=5, max_len=1)
    by_phrase = {s.phrase: s for s in stats}
    direct = sparse_cosine(
        by_phrase["rna-seq"].context_vector, by_phrase["rnaseq"].context_vector
    )
    assert direct == 1.0
    pairs = synonym_candidates(stats, tau=0.7)
    assert ("rna-seq", "rnaseq") in pairs


def test_disjoint_contexts_are_excluded():
    corpus = ["alpha beta gamma delta epsilon"] * 6 + ["omega psi chi phi upsilon"] * 6
    stats = extract_phrases(corpus, min_count=5, max_len=1)
    pairs = synonym_candidates(stats, tau=0.2)
    flattened = {p for pair in pairs for p in pair}
    assert not ({"alpha", "beta"} & flattened and {"omega", "psi"} & flattened) or all(
        (a in {"alpha", "beta", "gamma", "delta", "epsilon"})
        == (b in {"alpha", "beta", "gamma", "delta", "epsilon"})
        for a, b in pairs
    )


def test_no_self_pairs():
    stats = [
        PhraseStats("a", 5, {"x": 1.0}),
        PhraseStats("b", 5, {"x": 1.0}),
    ]
    pairs = synonym_candidates(stats, tau=0.5)
    assert pairs == [("a", "b")]
    assert all(a != b for a, b in pairs)


def test_cosine_matches_manual_computation():
    u = {"x": 1.0, "y": 2.0}
    v = {"y": 1.0, "z": 3.0}
    expected = 2.0 / (math.sqrt(5.0) * math.sqrt(10.0))
    assert abs(sparse_cosine(u, v) - expected) < 1e-12
    assert sparse_cosine(u, {}) == 0.0
    assert sparse_cosine({}, v) == 0.0
