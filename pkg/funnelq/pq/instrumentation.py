"""
instrumentation.py : Operation counters for measuring amortized costs

Copyright 2026 The funnelq developers

This file is part of funnelq, an addressable multi-level priority queue

funnelq is free software: you can redistribute it and/or modify it under the terms of the GNU Affero General Public License as published by the Free Software Foundation, either version 3 of the License, or (at your option) any later version.

This program is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU Affero General Public License for more details.

You should have received a copy of the GNU Affero General Public License along with this program.  If not, see <https://www.gnu.org/licenses/>

@file    instrumentation.py
@author  The funnelq developers
@date    2026
@version 0.1.0
@brief   Operation counters for measuring amortized costs
"""

import contextlib
import types
from dataclasses import dataclass

from funnelq.pq.tools import getLogger

# primitives
KEY_COMPARISON = "key_comparisons"
ITEM_MOVE = "item_moves"
HASH_PROBE = "hash_probes"
W0_EVALUATION = "w0_evaluations"
PRIMITIVES = (KEY_COMPARISON, ITEM_MOVE, HASH_PROBE, W0_EVALUATION)

# events
GROW_CALL = "grow_calls"
TRIM_CALL = "trim_calls"
TUNNEL_CALL = "tunnel_calls"
# tunneled items that found the tunnel zone full and went to another common-heap
TUNNEL_SPILL = "tunnel_spills"
META_RESTORE = "meta_heap_restores"
INSERT_CALL = "insert_calls"
REINSERT_CALL = "reinsert_calls"
EVENTS = (GROW_CALL, TRIM_CALL, TUNNEL_CALL, TUNNEL_SPILL, META_RESTORE, INSERT_CALL, REINSERT_CALL)

# work done outside of any public operation (construction, tables)
SETUP = "setup"


@dataclass(frozen=True)
class CounterReport:
    """Immutable copy of an OpCounters sink

    counts is keyed by (op, level, kind).  The derived ratios are
    computed on demand.
    """
    invocations: types.MappingProxyType
    counts: types.MappingProxyType
    max_comparisons: types.MappingProxyType
    tunnel_slots: types.MappingProxyType

    def ops(self):
        return sorted(self.invocations.keys())

    def levels(self):
        return sorted(set(level for (op, level, kind) in self.counts))

    def total(self, kind, op = None, level = None):
        n = 0
        for (o, l, k), value in self.counts.items():
            if k != kind:
                continue
            if op is not None and o != op:
                continue
            if level is not None and l != level:
                continue
            n += value
        return n

    def opStats(self, op):
        dic = {"invocations": self.invocations.get(op, 0),
               "max_comparisons": self.max_comparisons.get(op, 0)}
        for kind in PRIMITIVES + EVENTS:
            dic[kind] = self.total(kind, op = op)
        return dic

    def levelStats(self, level):
        return dict((kind, self.total(kind, level = level)) for kind in PRIMITIVES + EVENTS)

    def mean(self, kind, op):
        invocations = self.invocations.get(op, 0)
        if invocations < 1:
            return 0.0
        return self.total(kind, op = op) / invocations

    def meanComparisons(self, op):
        return self.mean(KEY_COMPARISON, op)

    def betaHat(self, level = 1, op = None):
        """Measured relative frequency of grow calls per insert on a level
        """
        inserts = self.total(INSERT_CALL, op = op, level = level)
        if inserts < 1:
            return 0.0
        return self.total(GROW_CALL, op = op, level = level) / inserts

    def maxTunnelSlot(self, level = None):
        slots = [slot for (l, slot) in self.tunnel_slots if level is None or l == level]
        if not slots:
            return -1
        return max(slots)

    def csvRows(self, n):
        """One row per public operation, columns as in constant.csv_header
        """
        rows = []
        for op in self.ops():
            if op == SETUP:
                continue
            rows.append([
                n,
                op,
                self.invocations[op],
                "%.6f" % self.meanComparisons(op),
                self.max_comparisons.get(op, 0),
                "%.6f" % self.mean(ITEM_MOVE, op),
                "%.6f" % self.mean(HASH_PROBE, op),
                self.total(GROW_CALL, op = op),
                self.total(TRIM_CALL, op = op),
                self.total(TUNNEL_CALL, op = op),
                "%.6f" % self.betaHat(level = 1, op = op)
                ])
        return rows


class OpCounters:
    """Per-queue sink of primitive-step and event counts

    Public queue operations are bracketed with ``operation(name)``; every
    record() in between is attributed to that operation.  Nested public
    calls are attributed to the outermost one.
    """

    enabled = True

    def __init__(self):
        self.pre = self.__class__.__name__
        self.logger = getLogger(self.pre)
        self.reset()

    def reset(self):
        self.counts = {}
        self.invocations = {}
        self.max_comparisons = {}
        self.tunnel_slots = {}
        self.current = SETUP
        self.depth = 0
        self.tally = 0

    def record(self, kind, level, amount = 1):
        key = (self.current, level, kind)
        self.counts[key] = self.counts.get(key, 0) + amount
        if kind == KEY_COMPARISON:
            self.tally += amount

    def recordTunnelSlot(self, level, slot):
        key = (level, slot)
        self.tunnel_slots[key] = self.tunnel_slots.get(key, 0) + 1

    @contextlib.contextmanager
    def operation(self, name):
        if self.depth > 0:
            self.depth += 1
            try:
                yield self
            finally:
                self.depth -= 1
            return
        self.depth = 1
        self.current = name
        self.tally = 0
        self.invocations[name] = self.invocations.get(name, 0) + 1
        try:
            yield self
        finally:
            if self.tally > self.max_comparisons.get(name, 0):
                self.max_comparisons[name] = self.tally
            self.depth = 0
            self.current = SETUP

    def snapshot(self):
        return CounterReport(
            invocations = types.MappingProxyType(dict(self.invocations)),
            counts = types.MappingProxyType(dict(self.counts)),
            max_comparisons = types.MappingProxyType(dict(self.max_comparisons)),
            tunnel_slots = types.MappingProxyType(dict(self.tunnel_slots))
            )


class NullCounters(OpCounters):
    """The default sink: records nothing
    """

    enabled = False

    def record(self, kind, level, amount = 1):
        pass

    def recordTunnelSlot(self, level, slot):
        pass

    def operation(self, name):
        return contextlib.nullcontext(self)


# stateless, may be shared by any number of queues
null_counters = NullCounters()
