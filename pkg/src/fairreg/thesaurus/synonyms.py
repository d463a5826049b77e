"""Distributional synonym discovery: cosine over PPMI context vectors."""

from __future__ import annotations

import math
from collections import defaultdict

from .phrases import PhraseStats

DEFAULT_TAU = 0.7


def sparse_cosine(a: dict[str, float], b: dict[str, float]) -> float:
    if not a or not b:
        return 0.0
    if len(b) < len(a):
        a, b = b, a
    dot = sum(w * b[t] for t, w in a.items() if t in b)
    if dot == 0.0:
        return 0.0
    na = math.sqrt(sum(w * w for w in a.values()))
    nb = math.sqrt(sum(w * w for w in b.values()))
    return dot / (na * nb)


def synonym_candidates(stats: list[PhraseStats], tau: float = DEFAULT_TAU) -> list[tuple[str, str]]:
    """All unordered phrase pairs whose context cosine clears ``tau``.

    Only pairs sharing at least one context token can have non-zero cosine,
    so candidates are enumerated through an inverted context map.
    """
    by_token: dict[str, list[int]] = defaultdict(list)
    for idx, st in enumerate(stats):
        for token in st.context_vector:
            by_token[token].append(idx)

    candidate_pairs: set[tuple[int, int]] = set()
    for indices in by_token.values():
        for i in range(len(indices)):
            for j in range(i + 1, len(indices)):
                candidate_pairs.add((indices[i], indices[j]))

    out = []
    for i, j in sorted(candidate_pairs):
        if sparse_cosine(stats[i].context_vector, stats[j].context_vector) >= tau:
            pair = tuple(sorted((stats[i].phrase, stats[j].phrase)))
            out.append(pair)
    return sorted(set(out))


class UnionFind:
    """Disjoint sets over strings, used to close synonym pairs into sets."""

    def __init__(self):
        self.parent: dict[str, str] = {}

    def add(self, x: str) -> None:
        self.parent.setdefault(x, x)

    def find(self, x: str) -> str:
        self.add(x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: str, b: str) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # Deterministic: the lexicographically smaller root wins.
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra

    def sets(self) -> list[list[str]]:
        groups: dict[str, list[str]] = defaultdict(list)
        for x in self.parent:
            groups[self.find(x)].append(x)
        return sorted(sorted(members) for members in groups.values())
