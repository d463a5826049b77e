import random

from fairreg.ingest import match_duplicates
from fairreg.registry import ToolRecord

from conftest import make_record


def rec(name="", links=(), repos=()):
    return ToolRecord(name=name, links=list(links), source_repos=list(repos))


def brute_force_clusters(records):
    """O(n^2) pairwise relation closed transitively; the independent oracle."""

    def related(a, b):
        if a.name and b.name and a.name.strip().casefold() == b.name.strip().casefold():
            return True
        from fairreg.ingest import normalize_url

        urls_a = {normalize_url(u) for u in a.links + a.source_repos if u.strip()}
        urls_b = {normalize_url(u) for u in b.links + b.source_repos if u.strip()}
        return bool(urls_a & urls_b)

    n = len(records)
    labels = list(range(n))
    changed = True
    while changed:
        changed = False
        for i in range(n):
            for j in range(i + 1, n):
                if related(records[i], records[j]) and labels[i] != labels[j]:
                    target, source = min(labels[i], labels[j]), max(labels[i], labels[j])
                    for k in range(n):
                        if labels[k] == source:
                            labels[k] = target
                    changed = True
    clusters = {}
    for i, label in enumerate(labels):
        clusters.setdefault(label, []).append(i)
    return sorted(sorted(members) for members in clusters.values())


def as_index_clusters(records, clusters):
    index_of = {id(r): i for i, r in enumerate(records)}
    return sorted(sorted(index_of[id(r)] for r in cluster) for cluster in clusters)


def test_case_folded_names_cluster():
    records = [rec(name="FooTool"), rec(name="footool")]
    clusters = match_duplicates(records)
    assert len(clusters) == 1 and len(clusters[0]) == 2


def test_shared_repo_url_clusters_different_names():
    records = [
        rec(name="Alpha", repos=["https://github.com/x/y"]),
        rec(name="Beta", links=["https://github.com/x/y/"]),
    ]
    clusters = match_duplicates(records)
    assert len(clusters) == 1


def test_unrelated_records_stay_apart():
    records = [rec(name="One"), rec(name="Two", links=["https://two.example.org"])]
    assert len(match_duplicates(records)) == 2


def test_empty_names_do_not_cluster_together():
    records = [rec(name=""), rec(name=""), rec(name="Named")]
    assert len(match_duplicates(records)) == 3


def test_output_is_a_partition():
    records = [make_record(accession=None, name=f"T{i}") for i in range(10)]
    records[3].name = records[7].name = "SameName"
    clusters = match_duplicates(records)
    flat = [id(r) for cluster in clusters for r in cluster]
    assert sorted(flat) == sorted(id(r) for r in records)


def test_planted_duplicates_match_brute_force_closure():
    rng = random.Random(42)
    records = []
    for i in range(50):
        records.append(
            rec(name=f"Tool{i}", links=[f"https://site{i}.example.org"])
        )
    # Plant 10 duplicates: 5 name collisions, 5 URL collisions, chained.
    for k in range(5):
        records[40 + k].name = f"tool{2 * k}"  # case-folded name collision
    for k in range(5):
        records[45 + k].links.append(f"https://site{10 + k}.example.org/")
    rng.shuffle(records)

    ours = as_index_clusters(records, match_duplicates(records))
    oracle = brute_force_clusters(records)
    assert ours == oracle


def test_random_fixtures_match_oracle():
    rng = random.Random(7)
    for trial in range(5):
        n = rng.randint(5, 40)
        names = [f"n{rng.randint(0, n // 2)}" for _ in range(n)]
        records = [
            rec(
                name=names[i] if rng.random() < 0.8 else "",
                links=[f"https://u{rng.randint(0, n // 3)}.example.org"]
                if rng.random() < 0.6
                else [],
            )
            for i in range(n)
        ]
        assert as_index_clusters(records, match_duplicates(records)) == brute_force_clusters(
            records
        )
