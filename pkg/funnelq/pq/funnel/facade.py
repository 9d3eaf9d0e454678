"""
facade.py : The public funnel priority queue

Copyright 2026 The funnelq developers

This file is part of funnelq, an addressable multi-level priority queue

funnelq is free software: you can redistribute it and/or modify it under the terms of the GNU Affero General Public License as published by the Free Software Foundation, either version 3 of the License, or (at your option) any later version.

This program is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU Affero General Public License for more details.

You should have received a copy of the GNU Affero General Public License along with this program.  If not, see <https://www.gnu.org/licenses/>

@file    facade.py
@author  The funnelq developers
@date    2026
@version 0.1.0
@brief   The public funnel priority queue
"""

import logging

from funnelq.pq import constant
from funnelq.pq.exception import ConfigurationError, CapacityError, QueueEmptyError, KeyOrderError
from funnelq.pq.instrumentation import SETUP, null_counters
from funnelq.pq.item import Item
from funnelq.pq.numerics import BalancePolicy, checkLogBase
from funnelq.pq.tools import getLogger, setLogger, parameterInitCheck, isInt64, iteratedLog2Depth
from funnelq.pq.funnel.level import LevelQueue, make_layouts
from funnelq.pq.funnel import scan


class FunnelQueue:
    """Addressable max-priority queue of alpha levels

    ::

        q = FunnelQueue(alpha = 2, capacity = 100000)
        i = q.insert(10, b"payload")
        q.increaseKey(i, 20)
        item = q.extractMax()   # Item(id = i, key = 20, payload = b"payload")

    Ids are handed out by a monotone counter and never reused.  On equal
    keys, the item with the smaller id is the larger one.
    """

    parameter_defs = {
        "alpha"             : (int, 2),
        "capacity"          : (int, 1 << 20),
        "tunnel_c"          : (int, constant.tunnel_c),
        "grow_tolerance"    : (int, constant.grow_tolerance),
        "capacity_slack"    : (int, constant.capacity_slack),
        "min_heap_capacity" : (int, constant.min_heap_capacity),
        "eval_strategy"     : (str, "memoized"),
        "w0_tolerance"      : (float, constant.w0_tolerance),
        "log_base"          : (str, "mixed"),
        "counters"          : None
        }

    def __init__(self, **kwargs):
        self.pre = self.__class__.__name__
        self.logger = getLogger(self.pre)
        try:
            parameterInitCheck(FunnelQueue.parameter_defs, kwargs, self)
        except AttributeError as e:
            raise ConfigurationError(str(e)) from e
        if self.counters is None:
            self.counters = null_counters
        self.checkConfig_()

        with self.counters.operation("make_heap"):
            self.layouts = make_layouts(
                self.alpha, self.capacity,
                log_base = self.log_base,
                tolerance = self.w0_tolerance,
                capacity_slack = self.capacity_slack,
                min_heap_capacity = self.min_heap_capacity)
            self.policies = [None]
            for level in range(1, self.alpha + 1):
                layout = self.layouts[level]
                self.policies.append(BalancePolicy(
                    level_index = level,
                    eval_strategy = self.eval_strategy,
                    w0_tolerance = self.w0_tolerance,
                    log_base = self.log_base,
                    max_heaps = layout.heap_capacity,
                    table_size = layout.capacity,
                    counters = self.counters))
            for layout in self.layouts[1:]:
                self.logger.debug("%s", layout)
            self.root = LevelQueue(
                level = self.alpha,
                layouts = self.layouts,
                policies = self.policies,
                tunnel_c = self.tunnel_c,
                grow_tolerance = self.grow_tolerance,
                counters = self.counters)
        self.next_id = 0

    def checkConfig_(self):
        if self.alpha < 1:
            raise ConfigurationError("alpha must be >= 1, got %i" % (self.alpha))
        if self.capacity < 1:
            raise ConfigurationError("capacity must be >= 1, got %i" % (self.capacity))
        if self.tunnel_c < 0:
            raise ConfigurationError("tunnel_c must be >= 0, got %i" % (self.tunnel_c))
        if self.grow_tolerance < 0:
            raise ConfigurationError("grow_tolerance must be >= 0, got %i" % (self.grow_tolerance))
        if self.capacity_slack < 1 or self.min_heap_capacity < 1:
            raise ConfigurationError("capacity_slack and min_heap_capacity must be >= 1")
        if self.w0_tolerance <= 0:
            raise ConfigurationError("w0_tolerance must be > 0")
        if self.eval_strategy not in constant.eval_strategies:
            raise ConfigurationError("eval_strategy must be one of %s, got %r" % (constant.eval_strategies, self.eval_strategy))
        checkLogBase(self.log_base)

    @classmethod
    def fromCapacity(cls, capacity, **kwargs):
        """Pick alpha from the capacity: the iterated binary log depth, clamped to [1, max_alpha]
        """
        alpha = min(constant.max_alpha, max(1, iteratedLog2Depth(capacity)))
        return cls(alpha = alpha, capacity = capacity, **kwargs)

    def setDebug(self):
        setLogger(self.logger, logging.DEBUG)
        for queue in self.root.walk():
            setLogger(queue.logger, logging.DEBUG)

    @property
    def size(self):
        return self.root.size

    def __len__(self):
        return self.root.size

    def __contains__(self, item_id):
        return item_id in self.root.hash_index

    def __repr__(self):
        return "<FunnelQueue alpha=%i: %i/%i items>" % (self.alpha, self.root.size, self.capacity)

    def checkKey_(self, key):
        if not isInt64(key):
            raise KeyOrderError("key must be a signed 64-bit integer, got %r" % (key,))

    # *** public api ***

    def insert(self, key, payload = b""):
        """Insert a new item and return its id
        """
        with self.counters.operation("insert"):
            self.checkKey_(key)
            if self.root.size >= self.capacity:
                raise CapacityError("%s : capacity of %i items reached" % (self.pre, self.capacity))
            item = Item(self.next_id, key, payload)
            self.root.insert(item)
            self.next_id += 1
            return item.id

    def maxItem(self):
        """(id, key) of the maximum item, following the meta-heap heads down all levels
        """
        with self.counters.operation("max_item"):
            if self.root.size == 0:
                raise QueueEmptyError("%s : max of an empty queue" % (self.pre))
            item = self.root.topItem()
            return item.id, item.key

    def extractMax(self):
        with self.counters.operation("extract_max"):
            return self.root.extractMax()

    def search(self, item_id, f):
        """Apply f to the payload of an item: the payload is replaced by the return value of f, unless that is None

        Keys can't be changed here, use increaseKey / decreaseKey.
        """
        with self.counters.operation("search"):
            item = self.root.find(item_id)
            payload = f(item.payload)
            if payload is not None:
                item.payload = payload

    def remove(self, item_id):
        with self.counters.operation("remove"):
            return self.root.remove(item_id)

    def increaseKey(self, item_id, key):
        with self.counters.operation("increase_key"):
            self.checkKey_(key)
            item = self.root.find(item_id)
            if key <= item.key:
                raise KeyOrderError("increaseKey : new key %i is not larger than %i" % (key, item.key))
            self.root.increaseKey(item_id, key)

    def decreaseKey(self, item_id, key):
        with self.counters.operation("decrease_key"):
            self.checkKey_(key)
            item = self.root.find(item_id)
            if key >= item.key:
                raise KeyOrderError("decreaseKey : new key %i is not smaller than %i" % (key, item.key))
            self.root.decreaseKey(item_id, key)

    # *** introspection ***

    def levelStats(self):
        """One dict per level, top level first, aggregated over all queues of that level
        """
        rows = {}
        for queue in self.root.walk():
            row = rows.get(queue.level)
            if row is None:
                row = rows[queue.level] = {
                    "level": queue.level, "instances": 0, "n": 0, "k": 0, "k_star": 0,
                    "deviation": 0, "max_abs_deviation": 0, "suspended": 0, "tunnel_items": 0
                    }
            k = len(queue.meta_heap)
            k_star = queue.policy.optimalHeapCount(queue.size)
            row["instances"] += 1
            row["n"] += queue.size
            row["k"] += k
            row["k_star"] += k_star
            row["deviation"] += k - k_star
            row["max_abs_deviation"] = max(row["max_abs_deviation"], abs(k - k_star))
            row["suspended"] += len(queue.suspended)
            zone = min(queue.tunnel_barrier, k)
            row["tunnel_items"] += sum(queue.common_heaps[queue.meta_heap.elem[slot]].storage.size for slot in range(zone))
        out = []
        for level in sorted(rows.keys(), reverse = True):
            row = rows[level]
            # share of the level's items that sit in the tunnel zone
            row["tunnel_occupancy"] = row["tunnel_items"] / row["n"] if row["n"] > 0 else 0.0
            del row["tunnel_items"]
            out.append(row)
        return out

    def scan(self):
        """List of invariant violations, empty when the structure is sound
        """
        return scan.scan(self.root)
