import threading

import pytest

from fairreg.errors import StorageError
from fairreg.registry import RidCounter, format_rid, is_valid_rid, mint_rid, rid_number


def test_first_mint_is_az1():
    assert mint_rid(RidCounter(start=0)) == "AZ1"


def test_mint_is_successor():
    assert mint_rid(RidCounter(start=41)) == "AZ42"


def test_rid_format_rules():
    assert is_valid_rid("AZ1")
    assert is_valid_rid("AZ42")
    assert not is_valid_rid("AZ0")
    assert not is_valid_rid("AZ01")
    assert not is_valid_rid("az1")
    assert not is_valid_rid("AZ")
    assert not is_valid_rid("")
    assert rid_number("AZ42") == 42
    assert format_rid(7) == "AZ7"
    with pytest.raises(ValueError):
        format_rid(0)
    with pytest.raises(ValueError):
        rid_number("ZZ9")


def test_concurrent_mints_are_distinct_and_gapless():
    counter = RidCounter()
    minted: list[str] = []
    lock = threading.Lock()

    def work():
        local = [counter.mint() for _ in range(25)]
        with lock:
            minted.extend(local)

    threads = [threading.Thread(target=work) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()

    numbers = sorted(rid_number(r) for r in minted)
    assert len(set(minted)) == 200
    assert numbers == list(range(1, 201))


def test_failed_persist_leaves_counter_unchanged():
    calls = {"n": 0}

    def persist(value):
        calls["n"] += 1
        raise IOError("disk full")

    counter = RidCounter(start=5, persist=persist)
    with pytest.raises(StorageError):
        counter.mint()
    assert counter.value == 5
    assert calls["n"] == 1
