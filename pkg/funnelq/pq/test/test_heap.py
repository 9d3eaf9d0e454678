"""HeapArray primitives
"""
import math

import pytest
from hypothesis import given, strategies as st

from funnelq.pq.exception import CapacityError, QueueEmptyError, HeapIndexError
from funnelq.pq.heap import HeapArray
from funnelq.pq.instrumentation import OpCounters, KEY_COMPARISON


def make_heap(keys, capacity = 1024, **kwargs):
    h = HeapArray(capacity, **kwargs)
    for i, key in enumerate(keys):
        h.push(key, i)
    return h


class CountingKey:
    """Key wrapper counting its comparisons, only > is allowed
    """
    calls = 0

    def __init__(self, value):
        self.value = value

    def __gt__(self, other):
        CountingKey.calls += 1
        return self.value > other.value

    def __lt__(self, other):
        raise AssertionError("heap code must compare with > only")


def test_push_examples():
    h = make_heap([5, 3])
    assert h.push(9, "x") == 0
    assert h.top() == (9, "x")

    h = make_heap([5, 3])
    assert h.push(1, "y") == 2
    assert h.topPriority() == 5

    h = HeapArray(4)
    assert h.push(7, "z") == 0


def test_pop_examples():
    h = make_heap([9, 5, 3])
    assert h.pop()[0] == 9
    assert h.topPriority() == 5
    assert h.violations() == []

    h = make_heap([7])
    assert h.pop()[0] == 7
    assert len(h) == 0


@given(st.lists(st.integers(-1000, 1000), max_size = 200))
def test_pop_sequence_is_sorted(keys):
    h = make_heap(keys)
    out = [h.pop()[0] for i in range(len(keys))]
    assert out == sorted(keys, reverse = True)


def test_make_heap_examples(rng):
    h = HeapArray(16)
    h.fill([1, 2, 3, 4, 5], list("abcde"))
    h.makeHeap()
    assert h.topPriority() == 5
    assert h.violations() == []

    h.makeHeap()
    assert h.violations() == []

    keys = [int(k) for k in rng.integers(-10 ** 6, 10 ** 6, size = 1000)]
    h = HeapArray(1000)
    h.fill(keys, list(range(1000)))
    h.makeHeap()
    assert h.violations() == []
    assert sorted(h.prio) == sorted(keys)


def test_restore_down_examples():
    h = make_heap([9, 5, 3])
    h.prio[0] = 1
    h.restoreDown(0)
    assert h.topPriority() == 5
    assert h.violations() == []

    h = make_heap([9, 5, 3])
    h.prio[2] = 0
    assert h.restoreDown(2) == 2


def test_restore_up_examples():
    h = make_heap([5, 3, 1])
    h.prio[2] = 9
    assert h.restoreUp(2) == 0
    assert h.topPriority() == 9

    h = make_heap([5, 3, 1])
    h.prio[0] = 10
    assert h.restoreUp(0) == 0


@given(st.lists(st.integers(-1000, 1000), min_size = 1, max_size = 100), st.data())
def test_restore_after_random_change(keys, data):
    h = make_heap(keys)
    j = data.draw(st.integers(0, len(keys) - 1))
    delta = data.draw(st.integers(1, 500))
    h.prio[j] -= delta
    h.restoreDown(j)
    assert h.violations() == []
    j = data.draw(st.integers(0, len(keys) - 1))
    h.prio[j] += 2 * delta
    h.restoreUp(j)
    assert h.violations() == []


def test_pop_at_examples():
    h = make_heap([9, 5, 3, 1])
    g = make_heap([9, 5, 3, 1])
    assert h.popAt(0) == g.pop()
    assert h.prio == g.prio

    h = make_heap([9, 5, 3, 1])
    assert h.popAt(3) == (1, 3)
    assert h.prio == [9, 5, 3]


@given(st.lists(st.integers(-1000, 1000), min_size = 1, max_size = 100), st.data())
def test_pop_at_random_index(keys, data):
    h = make_heap(keys)
    j = data.draw(st.integers(0, len(keys) - 1))
    before = sorted(zip(h.prio, h.elem))
    removed = h.popAt(j)
    after = sorted(zip(h.prio, h.elem))
    before.remove(removed)
    assert after == before
    assert h.violations() == []


def test_errors():
    h = HeapArray(2)
    with pytest.raises(QueueEmptyError):
        h.pop()
    with pytest.raises(QueueEmptyError):
        h.top()
    h.push(1, "a")
    h.push(2, "b")
    assert h.isFull()
    with pytest.raises(CapacityError):
        h.push(3, "c")
    # also the builtin the errors derive from
    with pytest.raises(OverflowError):
        h.push(3, "c")
    with pytest.raises(HeapIndexError):
        h.restoreDown(2)
    with pytest.raises(HeapIndexError):
        h.restoreUp(5)
    with pytest.raises(IndexError):
        h.popAt(2)
    with pytest.raises(CapacityError):
        HeapArray(0)


def test_backlinks_follow_every_move(rng):
    where = {}

    def on_move(elem, index):
        where[elem] = index

    h = HeapArray(600, on_move = on_move)
    next_elem = 0
    for step in range(3000):
        r = rng.random()
        if r < 0.5 or len(h) == 0:
            h.push(int(rng.integers(0, 100)), next_elem)
            next_elem += 1
        elif r < 0.7:
            h.pop()
        elif r < 0.85:
            h.popAt(int(rng.integers(len(h))))
        else:
            j = int(rng.integers(len(h)))
            h.prio[j] = int(rng.integers(0, 100))
            h.restoreDown(h.restoreUp(j))
        if len(h) >= 590:
            h.pop()
        for j, elem in enumerate(h.elem):
            assert where[elem] == j
    assert h.violations() == []


def test_comparison_bounds():
    counters = OpCounters()
    h = HeapArray(1 << 12, counters = counters)
    for i in range(1 << 12):
        n = len(h)
        with counters.operation("push"):
            h.push(i, i)
        assert counters.tally <= 2 * math.ceil(math.log2(n + 1)) + 2
        assert counters.tally <= math.ceil(math.log2(n + 1)) + 1
    while len(h) > 0:
        n = len(h)
        with counters.operation("pop"):
            h.pop()
        assert counters.tally <= 2 * math.ceil(math.log2(n + 1)) + 2


def test_make_heap_is_linear():
    counters = OpCounters()
    h = HeapArray(5000, counters = counters)
    h.fill(list(range(5000)), list(range(5000)))
    with counters.operation("make_heap"):
        h.makeHeap()
    assert counters.snapshot().total(KEY_COMPARISON, op = "make_heap") <= 2 * 5000


def test_every_comparison_is_recorded(rng):
    CountingKey.calls = 0
    counters = OpCounters()
    h = HeapArray(2000, counters = counters, level = 3)
    for i in range(1000):
        h.push(CountingKey(int(rng.integers(0, 10 ** 6))), i)
    for i in range(300):
        h.pop()
    for i in range(100):
        h.popAt(int(rng.integers(len(h))))
    j = len(h) // 2
    h.prio[j] = CountingKey(-1)
    h.restoreDown(j)
    h.prio[j] = CountingKey(10 ** 7)
    h.restoreUp(j)
    extra = [CountingKey(int(v)) for v in rng.integers(0, 10 ** 6, size = 500)]
    h.fill(extra, list(range(1000, 1500)))
    h.makeHeap()
    assert CountingKey.calls > 0
    assert counters.snapshot().total(KEY_COMPARISON, level = 3) == CountingKey.calls
