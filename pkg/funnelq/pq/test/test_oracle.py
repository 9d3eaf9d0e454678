"""The reference queue the funnel queue is checked against
"""
import pytest

from funnelq.pq.exception import CapacityError, QueueEmptyError, ItemNotFoundError, KeyOrderError
from funnelq.pq.oracle import OracleQueue


def test_examples(oracle):
    ids = dict((key, oracle.insert(key)) for key in (3, 9, 5))
    assert oracle.maxItem() == (ids[9], 9)
    oracle.increaseKey(ids[3], 10)
    assert oracle.maxItem() == (ids[3], 10)
    oracle.decreaseKey(ids[3], 1)
    assert oracle.maxItem() == (ids[9], 9)
    assert oracle.remove(ids[9]).key == 9
    assert [oracle.extractMax().key for i in range(2)] == [5, 1]
    assert oracle.size == 0
    assert oracle.selfCheck()


def test_errors(oracle):
    with pytest.raises(QueueEmptyError):
        oracle.extractMax()
    with pytest.raises(QueueEmptyError):
        oracle.maxItem()
    i = oracle.insert(4)
    with pytest.raises(ItemNotFoundError):
        oracle.remove(i + 1)
    with pytest.raises(KeyOrderError):
        oracle.increaseKey(i, 4)
    with pytest.raises(KeyOrderError):
        oracle.decreaseKey(i, 4)
    with pytest.raises(KeyOrderError):
        oracle.insert(2 ** 63)
    small = OracleQueue(capacity = 1)
    small.insert(1)
    with pytest.raises(CapacityError):
        small.insert(2)


def test_ties_and_stale_entries(oracle):
    a = oracle.insert(5)
    b = oracle.insert(5)
    assert oracle.maxItem() == (a, 5)
    oracle.decreaseKey(a, 2)
    assert oracle.maxItem() == (b, 5)
    # back to an old key: the stale entry must not resurrect anything
    oracle.increaseKey(a, 5)
    assert oracle.maxItem() == (a, 5)
    assert oracle.extractMax().id == a
    assert oracle.extractMax().id == b
    with pytest.raises(QueueEmptyError):
        oracle.extractMax()


def test_heap_stays_compact(oracle):
    i = oracle.insert(0)
    for key in range(1, 5000):
        oracle.increaseKey(i, key)
    assert len(oracle.heap) <= 2 * len(oracle.items) + 16
    assert oracle.maxItem() == (i, 4999)


def test_self_check_under_random_ops(oracle, rng):
    live = []
    for step in range(2000):
        r = rng.random()
        if r < 0.5 or not live:
            live.append(oracle.insert(int(rng.integers(-100, 100))))
        elif r < 0.7:
            live.remove(oracle.extractMax().id)
        elif r < 0.85:
            i = live[int(rng.integers(len(live)))]
            oracle.decreaseKey(i, oracle.items[i].key - 1)
        else:
            i = live[int(rng.integers(len(live)))]
            oracle.increaseKey(i, oracle.items[i].key + 1)
        assert oracle.selfCheck()
