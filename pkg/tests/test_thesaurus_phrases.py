import itertools
from collections import Counter

from fairreg.thesaurus import extract_phrases, tokenize


def brute_force_ngram_counts(corpus, max_len, stopwords):
    """Independent n-gram counter used as the oracle."""
    counts = Counter()
    for text in corpus:
        tokens = tokenize(text)
        for n in range(1, max_len + 1):
            for i in range(len(tokens) - n + 1):
                gram = tokens[i : i + n]
                if gram[0] in stopwords or gram[-1] in stopwords:
                    continue
                counts[" ".join(gram)] += 1
    return counts


def test_tokenizer_keeps_internal_hyphens():
    assert tokenize("RNA-seq and rnaseq, plus scRNA-seq!") == ["rna-seq", "and", "rnaseq", "plus", "scrna-seq"]


def test_empty_corpus_yields_nothing():
    assert extract_phrases([], min_count=5) == []
    assert extract_phrases(["", "   "], min_count=1) == []


def test_repeated_phrase_produces_all_ngrams():
    corpus = ["gene expression analysis"] * 10
    phrases = {s.phrase for s in extract_phrases(corpus, min_count=5)}
    assert phrases == {
        "gene",
        "expression",
        "analysis",
        "gene expression",
        "expression analysis",
        "gene expression analysis",
    }


def test_threshold_boundary():
    corpus = ["gene expression analysis"] * 10
    assert extract_phrases(corpus, min_count=11) == []
    assert extract_phrases(corpus, min_count=10) != []


def test_counts_match_brute_force_oracle():
    corpus = [
        "fast gene expression analysis of tumor samples",
        "gene expression profiling and gene expression analysis",
        "the analysis of expression patterns in samples",
    ] * 3
    stopwords = {"of", "and", "the", "in"}
    oracle = brute_force_ngram_counts(corpus, 3, stopwords)
    stats = extract_phrases(corpus, min_count=2, max_len=3, stopwords=stopwords)
    for s in stats:
        assert s.count == oracle[s.phrase], s.phrase
    expected = {p for p, c in oracle.items() if c >= 2}
    assert {s.phrase for s in stats} == expected


def test_stopword_edges_excluded():
    corpus = ["analysis of variance"] * 6
    phrases = {s.phrase for s in extract_phrases(corpus, min_count=5, stopwords={"of"})}
    assert "analysis of" not in phrases
    assert "of variance" not in phrases
    assert "analysis of variance" in phrases  # interior stopwords are fine


def test_ppmi_vectors_are_nonnegative_and_contextual():
    corpus = ["alpha beta gamma"] * 8 + ["delta epsilon zeta"] * 8
    stats = {s.phrase: s for s in extract_phrases(corpus, min_count=5, max_len=1)}
    assert all(w > 0 for s in stats.values() for w in s.context_vector.values())
    assert "beta" in stats["alpha"].context_vector
    assert "epsilon" not in stats["alpha"].context_vector
