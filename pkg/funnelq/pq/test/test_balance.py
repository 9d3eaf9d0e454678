"""Grow / trim / tunnel behaviour of the levels
"""
import numpy
import pytest

from funnelq.pq import constant
from funnelq.pq.funnel.level import Balance, make_layouts
from funnelq.pq.funnel.scan import scan
from funnelq.pq.instrumentation import (OpCounters, GROW_CALL, TRIM_CALL, TUNNEL_CALL, TUNNEL_SPILL,
                                        REINSERT_CALL, INSERT_CALL)
from funnelq.pq.numerics import optimal_heap_count, expected_heap_size
from funnelq.pq.oracle import OracleQueue


def fill(queue, rng, n, low = -10 ** 9, high = 10 ** 9):
    return [queue.insert(int(key)) for key in rng.integers(low, high, size = n)]


def test_layouts():
    layouts = make_layouts(2, 1 << 14)
    assert layouts[0] is None
    top, bottom = layouts[2], layouts[1]
    assert top.capacity == 1 << 14
    assert top.heap_capacity == optimal_heap_count(2, 1 << 14) + constant.heap_slack
    assert top.storage_capacity >= constant.min_heap_capacity
    assert bottom.capacity == top.storage_capacity
    assert bottom.storage_capacity <= bottom.capacity

    # a tiny queue never gets storages larger than itself
    layouts = make_layouts(1, 4)
    assert layouts[1].storage_capacity == 4


def test_fresh_queue_is_balanced(make_queue):
    q = make_queue()
    assert q.root.checkBalance() is Balance.STAY
    assert q.root.suspended == []


def test_grow_law(make_queue, rng):
    counters = OpCounters()
    n = 10 ** 4
    q = make_queue(alpha = 1, capacity = n, counters = counters)
    fill(q, rng, n)
    report = counters.snapshot()
    k = len(q.root.meta_heap)
    assert report.total(TRIM_CALL) == 0
    # every grow recruits exactly one heap
    assert report.total(GROW_CALL, level = 1) == k - 1
    k_star = optimal_heap_count(1, n)
    assert abs(k - k_star) <= q.grow_tolerance
    beta = report.betaHat(level = 1)
    expected = 1.0 / expected_heap_size(1, k)
    assert expected / 2 <= beta <= 2 * expected
    assert report.total(INSERT_CALL, level = 1) == n
    assert q.scan() == []


def test_trim_symmetry(make_queue, rng):
    n = 10 ** 4
    q = make_queue(alpha = 1, capacity = n)
    root = q.root
    tolerance = q.grow_tolerance

    live = []
    previous = len(root.meta_heap)
    for key in rng.integers(-10 ** 9, 10 ** 9, size = n):
        live.append(q.insert(int(key)))
        k = len(root.meta_heap)
        # inserts only ever grow, one heap at a time
        assert previous <= k <= previous + 1
        assert abs(k - root.policy.optimalHeapCount(root.size)) <= tolerance + 1
        previous = k

    while len(live) > 100:
        j = int(rng.integers(len(live)))
        live[j], live[-1] = live[-1], live[j]
        q.remove(live.pop())
        k = len(root.meta_heap)
        # removes only ever trim, one heap at a time
        assert previous - 1 <= k <= previous
        assert abs(k - root.policy.optimalHeapCount(root.size)) <= tolerance + 1
        previous = k

    assert q.size == 100
    assert abs(len(root.meta_heap) - optimal_heap_count(1, 100)) <= tolerance
    assert q.scan() == []


@pytest.mark.parametrize("tunnel_c", [1, 3])
def test_tunnel_locality(make_queue, tunnel_c):
    counters = OpCounters()
    n = 4000
    q = make_queue(alpha = 1, capacity = n, tunnel_c = tunnel_c, counters = counters)
    for key in range(n):
        q.insert(key)
    report = counters.snapshot()
    # an ascending key beats every local max
    assert report.total(TUNNEL_CALL, level = 1) >= n // 2
    assert 0 <= report.maxTunnelSlot(1) < 2 ** tunnel_c
    assert q.scan() == []
    assert [q.extractMax().key for i in range(10)] == list(range(n - 1, n - 11, -1))


@pytest.mark.parametrize("alpha", [1, 2])
def test_zero_tolerance_conserves_items(make_queue, rng, live_items, alpha):
    q = make_queue(alpha = alpha, capacity = 4096, grow_tolerance = 0)
    o = OracleQueue(capacity = 4096)
    live = []
    for step in range(10 ** 4):
        if step < 400 or not live or rng.random() < 0.5:
            key = int(rng.integers(-10 ** 6, 10 ** 6))
            live.append(q.insert(key, b"p"))
            o.insert(key, b"p")
        elif rng.random() < 0.5:
            a, b = q.extractMax(), o.extractMax()
            assert a.asTuple() == b.asTuple()
            live.remove(a.id)
        else:
            j = int(rng.integers(len(live)))
            live[j], live[-1] = live[-1], live[j]
            i = live.pop()
            q.remove(i)
            o.remove(i)
        assert live_items(q) == sorted(item.asTuple() for item in o.items.values()), step
        if step % 500 == 0:
            assert q.scan() == []
    assert q.scan() == []


def test_trim_of_an_empty_heap(make_queue):
    counters = OpCounters()
    q = make_queue(alpha = 1, capacity = 64, counters = counters)
    q.insert(5)
    root = q.root
    # one item can't be split: the recruited heap stays empty
    root.grow()
    assert len(root.meta_heap) == 2
    assert q.scan() == []

    counters.reset()
    root.trimAndRedistribute()
    report = counters.snapshot()
    assert report.total(TRIM_CALL) == 1
    assert report.total(REINSERT_CALL) == 0
    assert root.suspended == [1]
    assert q.maxItem()[1] == 5
    assert q.scan() == []

    # the suspended heap is recycled before a new one is made
    root.grow()
    assert root.suspended == []
    assert len(root.common_heaps) == 2
    assert root.common_heaps[1].meta_slot == 1
    assert q.scan() == []


def test_trim_reinserts_every_item(make_queue, rng):
    counters = OpCounters()
    q = make_queue(alpha = 1, capacity = 1024, counters = counters)
    fill(q, rng, 500)
    root = q.root
    last = root.common_heaps[root.meta_heap.elem[-1]]
    held = last.storage.size
    counters.reset()
    root.trimAndRedistribute()
    assert counters.snapshot().total(REINSERT_CALL) == held
    assert q.size == 500
    assert last.meta_slot == -1
    assert last.storage.size == 0
    assert q.scan() == []


def test_nested_split_keeps_the_structure(make_queue, rng):
    q = make_queue(alpha = 3, capacity = 1 << 12)
    fill(q, rng, 3000)
    assert q.scan() == []
    for queue in q.root.walk():
        # nested queues never exceed their layout
        assert queue.size <= queue.capacity
        assert len(queue.meta_heap) <= queue.heap_capacity
    rows = q.levelStats()
    assert [row["n"] for row in rows] == [3000, 3000, 3000]


@pytest.mark.parametrize("min_heap_capacity", [1, constant.min_heap_capacity])
def test_layouts_hold_a_full_queue(min_heap_capacity):
    for alpha in (1, 2, 3):
        for capacity in (1, 7, 100, 10 ** 4, 1 << 16):
            layouts = make_layouts(alpha, capacity, min_heap_capacity = min_heap_capacity)
            for layout in layouts[1:]:
                assert layout.heap_capacity * layout.storage_capacity >= layout.capacity, layout


def test_full_tunnel_zone_spills(make_queue, rng):
    counters = OpCounters()
    q = make_queue(alpha = 1, capacity = 1024, tunnel_c = 1, counters = counters)
    fill(q, rng, 300)
    root = q.root
    for slot, heap in enumerate(root.activeHeaps()):
        # the zone is full, and an empty heap would take the item without tunneling
        if slot < 2 or heap.storage.size == 0:
            heap.storage.capacity = heap.storage.size

    counters.reset()
    top = q.insert(2 * 10 ** 9)
    report = counters.snapshot()
    assert report.total(TUNNEL_SPILL) == 1
    # the restore started outside the tunnel zone and is not a tunnel slot
    assert report.maxTunnelSlot(1) == -1
    assert q.maxItem() == (top, 2 * 10 ** 9)
    assert q.size == 301
    assert q.scan() == []


def test_every_heap_full_recruits_one(make_queue, rng):
    q = make_queue(alpha = 1, capacity = 1024)
    fill(q, rng, 300)
    root = q.root
    k = len(root.meta_heap)
    for heap in root.activeHeaps():
        heap.storage.capacity = heap.storage.size

    low = q.insert(-2 * 10 ** 9)
    assert len(root.meta_heap) >= k + 1
    assert low in q
    assert q.size == 301
    assert q.scan() == []


def test_trim_without_room_changes_nothing(make_queue, rng, live_items):
    counters = OpCounters()
    q = make_queue(alpha = 1, capacity = 1024, counters = counters)
    fill(q, rng, 300)
    root = q.root
    before = live_items(q)
    k = len(root.meta_heap)
    root.storage_capacity = 0

    counters.reset()
    assert root.trimAndRedistribute() is False
    assert counters.snapshot().total(TRIM_CALL) == 0
    assert len(root.meta_heap) == k
    assert live_items(q) == before
    assert q.scan() == []


def test_increase_key_with_every_heap_full(make_queue, rng):
    q = make_queue(alpha = 1, capacity = 1024)
    ids = fill(q, rng, 300)
    root = q.root
    for heap in root.activeHeaps():
        heap.storage.capacity = heap.storage.size
    # not the local max: the item leaves its heap and comes back through the tunnel
    target = next(i for i in ids if root.lookup_(i).storage.topId() != i)
    q.increaseKey(target, 2 * 10 ** 9)
    assert q.maxItem() == (target, 2 * 10 ** 9)
    assert q.size == 300
    assert q.scan() == []


def force_heap_count(queue, k):
    while len(queue.meta_heap) > k:
        assert queue.trimAndRedistribute()
    while len(queue.meta_heap) < k:
        queue.grow()


def test_split_moves_the_larger_half(make_queue, rng):
    q = make_queue(alpha = 1, capacity = 1024)
    fill(q, rng, 60)
    donor = q.root
    force_heap_count(donor, 3)
    expected = []
    for slot in (1, 2):
        expected.extend(donor.common_heaps[donor.meta_heap.elem[slot]].storage.itemIds())

    recipient = make_queue(alpha = 1, capacity = 1024).root
    moved = donor.splitInto(recipient)
    assert sorted(moved) == sorted(expected)
    assert recipient.size == len(moved)
    assert donor.size + recipient.size == 60
    assert scan(donor) == []
    assert scan(recipient) == []


def test_split_of_a_single_heap(make_queue, rng):
    q = make_queue(alpha = 1, capacity = 1024)
    fill(q, rng, 20)
    donor = q.root
    force_heap_count(donor, 1)

    recipient = make_queue(alpha = 1, capacity = 1024).root
    moved = donor.splitInto(recipient)
    assert len(moved) == 10
    assert recipient.size == 10
    assert donor.size == 10
    assert scan(donor) == []
    assert scan(recipient) == []


@pytest.mark.parametrize("alpha", [1, 2])
def test_no_grow_trim_flapping(make_queue, rng, alpha):
    counters = OpCounters()
    q = make_queue(alpha = alpha, capacity = 1 << 13, counters = counters)
    policy = q.root.policy
    n = 200
    while policy.optimalHeapCount(n + 1) == policy.optimalHeapCount(n):
        n += 1
    fill(q, rng, n)

    # alternate between both sides of a step of k*
    report = counters.snapshot()
    grows, trims = report.total(GROW_CALL, level = alpha), report.total(TRIM_CALL, level = alpha)
    events = []
    item_id = None
    for step in range(300):
        if step % 2 == 0:
            item_id = q.insert(int(rng.integers(-10 ** 9, 10 ** 9)))
        else:
            q.remove(item_id)
        report = counters.snapshot()
        g, t = report.total(GROW_CALL, level = alpha), report.total(TRIM_CALL, level = alpha)
        events.append((g - grows, t - trims))
        grows, trims = g, t

    for (g0, t0), (g1, t1) in zip(events, events[1:]):
        assert not (g0 and t1)
        assert not (t0 and g1)
    # one grow on the first crossing, nothing after
    assert sum(g for g, t in events) <= 1
    assert sum(t for g, t in events) == 0
    assert q.scan() == []


def mean_extract_comparisons(make_queue, rng, n):
    counters = OpCounters()
    q = make_queue(alpha = 2, capacity = n, counters = counters)
    fill(q, rng, n)
    counters.reset()
    for i in range(n // 2):
        q.extractMax()
    return counters.snapshot().meanComparisons("extract_max")


def test_extract_max_cost_is_logarithmic(make_queue, rng):
    sizes = [1 << 10, 1 << 12, 1 << 14]
    means = numpy.array([mean_extract_comparisons(make_queue, rng, n) for n in sizes])
    logs = numpy.log2(numpy.array(sizes, dtype = float))
    # least squares fit of means = c * log2(n)
    c = numpy.linalg.lstsq(logs[:, None], means, rcond = None)[0][0]
    assert c > 0
    ratios = means / (c * logs)
    assert numpy.all(ratios >= 0.5)
    assert numpy.all(ratios <= 1.5)
