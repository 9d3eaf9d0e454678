"""Shared fixtures of the funnelq test suites
"""
import os
import sys

# funnelq is a namespace package: make the checkout importable without installing it
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import numpy
import pytest
from hypothesis import settings, HealthCheck

from funnelq.pq.funnel.facade import FunnelQueue
from funnelq.pq.oracle import OracleQueue
from funnelq.pq.instrumentation import OpCounters

settings.register_profile("desk", max_examples = 60, deadline = None,
                          suppress_health_check = [HealthCheck.too_slow])
settings.load_profile(os.environ.get("FUNNELQ_HYPOTHESIS_PROFILE", "desk"))


@pytest.fixture
def counters():
    return OpCounters()


@pytest.fixture
def make_queue():
    """FunnelQueue factory with small desk-scale defaults
    """
    def make(**kwargs):
        kwargs.setdefault("alpha", 2)
        kwargs.setdefault("capacity", 1 << 14)
        return FunnelQueue(**kwargs)
    return make


@pytest.fixture
def oracle():
    return OracleQueue(capacity = 1 << 14)


@pytest.fixture
def rng():
    return numpy.random.Generator(numpy.random.PCG64(20260))


@pytest.fixture
def live_items():
    """(id, key, payload) of every item stored in a FunnelQueue, sorted by id
    """
    def collect(queue):
        out = []
        for level_queue in queue.root.walk():
            if level_queue.level == 1:
                for heap in level_queue.activeHeaps():
                    out.extend(item.asTuple() for item in heap.storage.elem)
        return sorted(out)
    return collect
