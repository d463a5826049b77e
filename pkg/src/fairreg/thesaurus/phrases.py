"""High-occurrence phrase extraction over a publication corpus.

Phrases are 1..max_len token n-grams that clear a count threshold and do not
start or end with a stopword. Each retained phrase carries a PPMI-weighted
context vector over a fixed token window, used later for synonym discovery.
"""

from __future__ import annotations

import math
import re
from collections import Counter, defaultdict
from dataclasses import dataclass, field

_TOKEN_RE = re.compile(r"[a-z0-9]+(?:[-_'][a-z0-9]+)*")

DEFAULT_MIN_COUNT = 5
DEFAULT_MAX_LEN = 3
CONTEXT_WINDOW = 4


def tokenize(text: str) -> list[str]:
    """Lowercased word tokens; internal hyphens/underscores are kept."""
    return _TOKEN_RE.findall(text.lower())


@dataclass
class PhraseStats:
    phrase: str
    count: int
    context_vector: dict[str, float] = field(default_factory=dict)


def _ngrams(tokens: list[str], max_len: int):
    n = len(tokens)
    for i in range(n):
        for length in range(1, max_len + 1):
            if i + length > n:
                break
            yield i, length


def count_ngrams(docs: list[list[str]], max_len: int, stopwords: set[str]) -> Counter:
    counts: Counter = Counter()
    for tokens in docs:
        for i, length in _ngrams(tokens, max_len):
            if tokens[i] in stopwords or tokens[i + length - 1] in stopwords:
                continue
            counts[" ".join(tokens[i : i + length])] += 1
    return counts


def extract_phrases(
    corpus: list[str],
    min_count: int = DEFAULT_MIN_COUNT,
    max_len: int = DEFAULT_MAX_LEN,
    stopwords: set[str] | None = None,
    window: int = CONTEXT_WINDOW,
) -> list[PhraseStats]:
    """Retain frequent n-grams with PPMI context vectors.

    Context counts pool the ``window`` tokens on each side of every phrase
    occurrence; PPMI weights are computed over the pooled co-occurrence table.
    """
    stopwords = stopwords or set()
    docs = [tokenize(text) for text in corpus]
    counts = count_ngrams(docs, max_len, stopwords)
    retained = {p for p, c in counts.items() if c >= min_count}
    if not retained:
        return []

    cooc: dict[str, Counter] = defaultdict(Counter)
    for tokens in docs:
        n = len(tokens)
        for i, length in _ngrams(tokens, max_len):
            phrase = " ".join(tokens[i : i + length])
            if phrase not in retained:
                continue
            lo = max(0, i - window)
            hi = min(n, i + length + window)
            for j in range(lo, hi):
                if i <= j < i + length:
                    continue
                cooc[phrase][tokens[j]] += 1

    total = sum(sum(ctx.values()) for ctx in cooc.values())
    phrase_marginal = {p: sum(ctx.values()) for p, ctx in cooc.items()}
    token_marginal: Counter = Counter()
    for ctx in cooc.values():
        token_marginal.update(ctx)

    stats = []
    for phrase in sorted(retained):
        vector: dict[str, float] = {}
        ctx = cooc.get(phrase, Counter())
        for token, n_pc in ctx.items():
            if total == 0:
                continue
            pmi = math.log(
                (n_pc * total) / (phrase_marginal[phrase] * token_marginal[token])
            )
            if pmi > 0:
                vector[token] = pmi
        stats.append(PhraseStats(phrase=phrase, count=counts[phrase], context_vector=vector))
    return stats
