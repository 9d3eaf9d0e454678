"""
level.py : One level of the funnel queue: meta-heap, common-heaps, hash index and suspended stack

Copyright 2026 The funnelq developers

This file is part of funnelq, an addressable multi-level priority queue

funnelq is free software: you can redistribute it and/or modify it under the terms of the GNU Affero General Public License as published by the Free Software Foundation, either version 3 of the License, or (at your option) any later version.

This program is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU Affero General Public License for more details.

You should have received a copy of the GNU Affero General Public License along with this program.  If not, see <https://www.gnu.org/licenses/>

@file    level.py
@author  The funnelq developers
@date    2026
@version 0.1.0
@brief   One level of the funnel queue: meta-heap, common-heaps, hash index and suspended stack
"""

import enum
import math
import logging

from funnelq.pq import constant
from funnelq.pq.constant import empty_priority as EMPTY
from funnelq.pq.cursor import Ring
from funnelq.pq.exception import CapacityError, QueueEmptyError, ItemNotFoundError
from funnelq.pq.heap import HeapArray
from funnelq.pq.instrumentation import (KEY_COMPARISON, HASH_PROBE, GROW_CALL, TRIM_CALL,
                                        TUNNEL_CALL, TUNNEL_SPILL, META_RESTORE, INSERT_CALL, REINSERT_CALL)
from funnelq.pq.numerics import optimal_heap_count, expected_heap_size, checkLevel
from funnelq.pq.tools import getLogger, setLogger, parameterInitCheck
from funnelq.pq.funnel.base import CommonHeap, ItemHeap


class Balance(enum.Enum):
    STAY = 0
    NEED_GROW = 1
    NEED_TRIM = 2


class LevelLayout:
    """Fixed array sizes of the queues on one level

    ::

        capacity          : max number of items in one queue of this level
        heap_capacity     : size of the common-heap array (and of the meta-heap)
        storage_capacity  : capacity of one common-heap's storage
    """
    __slots__ = ("level", "capacity", "heap_capacity", "storage_capacity")

    def __init__(self, level, capacity, heap_capacity, storage_capacity):
        self.level = level
        self.capacity = capacity
        self.heap_capacity = heap_capacity
        self.storage_capacity = storage_capacity

    def __repr__(self):
        return "<LevelLayout %i: capacity=%i heaps=%i storage=%i>" % (
            self.level, self.capacity, self.heap_capacity, self.storage_capacity)


def make_layouts(alpha, capacity, log_base = "mixed",
                 tolerance = constant.w0_tolerance,
                 capacity_slack = constant.capacity_slack,
                 min_heap_capacity = constant.min_heap_capacity,
                 heap_slack = constant.heap_slack):
    """Array sizes for every level, top-down from the capacity of level alpha

    Returns a list indexed by level, entry 0 unused.
    """
    layouts = [None] * (alpha + 1)
    cap = capacity
    for level in range(alpha, 0, -1):
        k_max = optimal_heap_count(level, cap, log_base, tolerance)
        heap_capacity = k_max + heap_slack
        storage_capacity = min(
            cap,
            max(min_heap_capacity,
                int(math.ceil(capacity_slack * expected_heap_size(level, k_max, log_base))),
                # all common-heaps together must hold a full queue
                int(math.ceil(cap / heap_capacity)))
            )
        layouts[level] = LevelLayout(level, cap, heap_capacity, storage_capacity)
        cap = storage_capacity
    return layouts


class LevelQueue:
    """The priority queue of level i, holding common-heaps whose storages are level i-1 queues (or item arrays on level 1)

    ::

        meta_heap       : HeapArray of heap_ids, prioritized by the local max of each common-heap
        common_heaps    : list of CommonHeap, indexed by heap_id, grown lazily up to heap_capacity
        hash_index      : item id => heap_id of the common-heap that (recursively) holds the item
        suspended       : stack of heap_ids of empty, unlinked common-heaps
        insert_cursor   : round-robin over [0, active_k)
        tunnel_cursor   : round-robin over [0, min(2**tunnel_c, active_k))

    Priorities are pairs (key, -id).  An empty common-heap has the priority EMPTY.
    """

    parameter_defs = {
        "level"          : checkLevel,
        "layouts"        : list,     # LevelLayout per level, see make_layouts
        "policies"       : list,     # BalancePolicy per level, shared by all queues of a level
        "tunnel_c"       : (int, constant.tunnel_c),
        "grow_tolerance" : (int, constant.grow_tolerance),
        "counters"       : None
        }

    def __init__(self, **kwargs):
        parameterInitCheck(LevelQueue.parameter_defs, kwargs, self)
        self.pre = "LevelQueue." + str(self.level)
        self.logger = getLogger(self.pre)
        layout = self.layouts[self.level]
        self.policy = self.policies[self.level]
        self.capacity = layout.capacity
        self.heap_capacity = layout.heap_capacity
        self.storage_capacity = layout.storage_capacity
        self.tunnel_barrier = 2 ** self.tunnel_c

        self.size = 0
        self.meta_heap = HeapArray(self.heap_capacity, on_move = self.relink_, counters = self.counters, level = self.level)
        self.common_heaps = []
        self.hash_index = {}
        self.suspended = []
        self.insert_cursor = Ring()
        self.tunnel_cursor = Ring()

        # an empty queue has exactly one linked common-heap, heap_id 0 at meta slot 0
        heap_id = self.allocateHeapId_()
        self.meta_heap.push(EMPTY, heap_id)

    def setDebug(self):
        setLogger(self.logger, logging.DEBUG)

    def __len__(self):
        return self.size

    def __repr__(self):
        return "<LevelQueue %i: %i items in %i heaps>" % (self.level, self.size, len(self.meta_heap))

    # *** internal bookkeeping ***

    def makeStorage_(self):
        if self.level == 1:
            return ItemHeap(self.storage_capacity, counters = self.counters, level = 0)
        return LevelQueue(
            level = self.level - 1,
            layouts = self.layouts,
            policies = self.policies,
            tunnel_c = self.tunnel_c,
            grow_tolerance = self.grow_tolerance,
            counters = self.counters
            )

    def relink_(self, heap_id, slot):
        self.common_heaps[heap_id].meta_slot = slot

    def allocateHeapId_(self):
        """Pop a suspended heap_id, or take the next unused one
        """
        if self.suspended:
            return self.suspended.pop()
        heap_id = len(self.common_heaps)
        if heap_id >= self.heap_capacity:
            raise CapacityError("%s : common-heap array of %i exhausted" % (self.pre, self.heap_capacity))
        self.common_heaps.append(CommonHeap(heap_id, self.makeStorage_()))
        return heap_id

    def headHeap_(self):
        return self.common_heaps[self.meta_heap.elem[0]]

    def lookup_(self, item_id):
        self.counters.record(HASH_PROBE, self.level)
        heap_id = self.hash_index.get(item_id)
        if heap_id is None:
            raise ItemNotFoundError(item_id)
        return self.common_heaps[heap_id]

    def recruit_(self):
        """Link an empty common-heap when every linked one is full

        The layout guarantees room for capacity items over all heap_ids,
        so this only fails on a full queue.
        """
        heap_id = self.allocateHeapId_()
        self.meta_heap.push(EMPTY, heap_id)
        self.logger.debug("recruit_ : heap %i linked, %i heaps for %i items", heap_id, len(self.meta_heap), self.size)
        return self.common_heaps[heap_id]

    def pickForInsert_(self, active_k):
        for attempt in range(active_k):
            heap = self.common_heaps[self.meta_heap.elem[self.insert_cursor.get(active_k)]]
            if not heap.storage.isFull():
                return heap
        return self.recruit_()

    def pickForTunnel_(self):
        """A non-full common-heap of the tunnel zone, else any non-full one
        """
        active_k = len(self.meta_heap)
        zone = min(self.tunnel_barrier, active_k)
        for attempt in range(zone):
            slot = self.tunnel_cursor.get(zone)
            heap = self.common_heaps[self.meta_heap.elem[slot]]
            if not heap.storage.isFull():
                return heap
        self.counters.record(TUNNEL_SPILL, self.level)
        return self.pickForInsert_(active_k)

    def roomAfterTrim_(self, heap):
        # every storage of a level has the same capacity
        return (len(self.meta_heap) - 1) * self.storage_capacity - (self.size - heap.storage.size)

    def refreshMeta_(self, heap):
        """The local max of heap went down: restore the meta-heap below its slot
        """
        self.meta_heap.prio[heap.meta_slot] = heap.storage.topPriority()
        self.meta_heap.restoreDown(heap.meta_slot)

    # *** storage protocol ***

    def isFull(self):
        return self.size >= self.capacity

    def topPriority(self):
        return self.meta_heap.prio[0]

    def topId(self):
        if self.size == 0:
            return None
        return self.headHeap_().storage.topId()

    def topItem(self):
        if self.size == 0:
            raise QueueEmptyError("%s : empty" % (self.pre))
        return self.headHeap_().storage.topItem()

    def find(self, item_id):
        return self.lookup_(item_id).storage.find(item_id)

    def itemIds(self):
        return list(self.hash_index.keys())

    def drainItems(self):
        """All items of this queue, recursively.  The queue is left in an undefined state and must be discarded
        """
        items = []
        for slot in range(len(self.meta_heap)):
            items.extend(self.common_heaps[self.meta_heap.elem[slot]].storage.drainItems())
        return items

    # *** insertion ***

    def route_(self, item):
        """Place an item either into the cursor-selected common-heap or through the tunnel
        """
        heap = self.pickForInsert_(len(self.meta_heap))
        storage = heap.storage
        p = item.priority()
        was_empty = storage.size == 0
        if not was_empty:
            self.counters.record(KEY_COMPARISON, self.level)
        if was_empty or p < storage.topPriority():
            storage.insert(item)
            self.hash_index[item.id] = heap.heap_id
            self.counters.record(HASH_PROBE, self.level)
            if was_empty:
                self.meta_heap.prio[heap.meta_slot] = p
                self.meta_heap.restoreUp(heap.meta_slot)
        else:
            self.tunnel(item)

    def insert(self, item):
        self.counters.record(INSERT_CALL, self.level)
        self.route_(item)
        self.size += 1
        if self.checkBalance() is Balance.NEED_GROW:
            self.grow()

    def reinsert(self, item):
        """Insert of an item already counted in size: no size increment, no balance check
        """
        self.counters.record(REINSERT_CALL, self.level)
        self.route_(item)

    def tunnel(self, item):
        """Insert into one of the first 2**tunnel_c meta slots, where restoring the meta-heap is O(tunnel_c)
        """
        self.counters.record(TUNNEL_CALL, self.level)
        heap = self.pickForTunnel_()
        heap.storage.insert(item)
        self.hash_index[item.id] = heap.heap_id
        self.counters.record(HASH_PROBE, self.level)
        slot = heap.meta_slot
        p = item.priority()
        self.counters.record(KEY_COMPARISON, self.level)
        if p > self.meta_heap.prio[slot]:
            self.meta_heap.prio[slot] = p
            self.counters.record(META_RESTORE, self.level)
            if slot < self.tunnel_barrier:
                self.counters.recordTunnelSlot(self.level, slot)
            self.meta_heap.restoreUp(slot)

    # *** balancing ***

    def checkBalance(self):
        k_star = self.policy.optimalHeapCount(self.size)
        active_k = len(self.meta_heap)
        if k_star >= active_k + 1:
            return Balance.NEED_GROW
        if k_star <= active_k - 1 - self.grow_tolerance:
            return Balance.NEED_TRIM
        return Balance.STAY

    def balance_(self):
        state = self.checkBalance()
        if state is Balance.NEED_GROW:
            self.grow()
        elif state is Balance.NEED_TRIM:
            self.trimAndRedistribute()

    def settleBalance_(self):
        """Grow or trim until the heap count is within tolerance, used after bulk transfers
        """
        state = self.checkBalance()
        while state is not Balance.STAY:
            self.logger.debug("settleBalance_ : %s at size %i with %i heaps", state.name, self.size, len(self.meta_heap))
            if state is Balance.NEED_GROW:
                self.grow()
            elif not self.trimAndRedistribute():
                break
            state = self.checkBalance()

    def grow(self):
        """Recruit one more common-heap and move half of a donor's contents into it
        """
        self.counters.record(GROW_CALL, self.level)
        heap_id = self.allocateHeapId_()
        recipient = self.common_heaps[heap_id]
        donor = self.common_heaps[self.meta_heap.elem[self.tunnel_cursor.get(min(self.tunnel_barrier, len(self.meta_heap)))]]
        moved = []
        if donor.storage.size >= 2:
            moved = donor.storage.splitInto(recipient.storage)
            for item_id in moved:
                self.hash_index[item_id] = heap_id
            self.counters.record(HASH_PROBE, self.level, len(moved))
        self.meta_heap.push(recipient.storage.topPriority(), heap_id)
        self.refreshMeta_(donor)
        self.logger.debug("grow : heap %i <- %i items of heap %i, %i heaps for %i items",
                          heap_id, len(moved), donor.heap_id, len(self.meta_heap), self.size)

    def trimAndRedistribute(self):
        """Suspend the common-heap at the last meta slot and reinsert its items

        Nothing is touched when the other linked heaps can't take the items.
        Returns True when a heap was suspended.
        """
        if len(self.meta_heap) < 2:
            return False
        last = len(self.meta_heap) - 1
        heap = self.common_heaps[self.meta_heap.elem[last]]
        if self.roomAfterTrim_(heap) < heap.storage.size:
            self.logger.debug("trimAndRedistribute : no room for the %i items of heap %i", heap.storage.size, heap.heap_id)
            return False
        self.counters.record(TRIM_CALL, self.level)
        self.meta_heap.truncate(last)
        heap.meta_slot = -1
        items = heap.storage.drainItems()
        heap.storage = self.makeStorage_()
        for item in items:
            del self.hash_index[item.id]
        self.counters.record(HASH_PROBE, self.level, len(items))
        self.suspended.append(heap.heap_id)
        for item in items:
            self.reinsert(item)
        self.logger.debug("trimAndRedistribute : heap %i suspended, %i items reinserted, %i heaps for %i items",
                          heap.heap_id, len(items), len(self.meta_heap), self.size)
        return True

    def splitInto(self, other):
        """Move the common-heaps at the trailing ceil(k / 2) meta slots, intact, into the empty queue other

        A queue with a single common-heap first grows to two.  The meta-heap
        prefix left behind is still a heap.  Returns the ids of the moved items.
        """
        if self.size < 2:
            return []
        if len(self.meta_heap) < 2:
            self.grow()
        active_k = len(self.meta_heap)
        count = (active_k + 1) // 2
        cut = active_k - count
        storages = []
        for slot in range(cut, active_k):
            heap = self.common_heaps[self.meta_heap.elem[slot]]
            storages.append(heap.storage)
            heap.storage = self.makeStorage_()
            heap.meta_slot = -1
            self.suspended.append(heap.heap_id)
        self.meta_heap.truncate(cut)
        moved = []
        for storage in storages:
            ids = storage.itemIds()
            for item_id in ids:
                del self.hash_index[item_id]
            moved.extend(ids)
        self.counters.record(HASH_PROBE, self.level, len(moved))
        self.size -= len(moved)
        other.adopt_(storages, len(moved))
        self.settleBalance_()
        other.settleBalance_()
        return moved

    def adopt_(self, storages, count):
        """Replace the (empty) contents of this queue with intact storages
        """
        for slot in range(len(self.meta_heap)):
            heap = self.common_heaps[self.meta_heap.elem[slot]]
            heap.meta_slot = -1
            self.suspended.append(heap.heap_id)
        self.meta_heap.clear()
        prios = []
        heap_ids = []
        for storage in storages:
            heap_id = self.allocateHeapId_()
            self.common_heaps[heap_id].storage = storage
            for item_id in storage.itemIds():
                self.hash_index[item_id] = heap_id
            prios.append(storage.topPriority())
            heap_ids.append(heap_id)
        self.counters.record(HASH_PROBE, self.level, count)
        self.meta_heap.fill(prios, heap_ids)
        self.meta_heap.makeHeap()
        self.size += count

    # *** removal ***

    def extractMax(self):
        if self.size == 0:
            raise QueueEmptyError("%s : extract from an empty queue" % (self.pre))
        heap = self.headHeap_()
        item = heap.storage.extractMax()
        del self.hash_index[item.id]
        self.counters.record(HASH_PROBE, self.level)
        self.size -= 1
        self.refreshMeta_(heap)
        self.balance_()
        return item

    def remove(self, item_id):
        heap = self.lookup_(item_id)
        was_max = heap.storage.topId() == item_id
        item = heap.storage.remove(item_id)
        del self.hash_index[item_id]
        self.size -= 1
        if was_max:
            self.refreshMeta_(heap)
        self.balance_()
        return item

    # *** key updates ***

    def increaseKey(self, item_id, key):
        heap = self.lookup_(item_id)
        storage = heap.storage
        p = (key, -item_id)
        if storage.topId() == item_id:
            # the local max only rises: restore the meta-heap upwards
            storage.increaseKey(item_id, key)
            self.meta_heap.prio[heap.meta_slot] = p
            self.counters.record(META_RESTORE, self.level)
            self.meta_heap.restoreUp(heap.meta_slot)
            return
        self.counters.record(KEY_COMPARISON, self.level)
        if p < storage.topPriority():
            storage.increaseKey(item_id, key)
            return
        # beats the local max of its own heap: take it out and tunnel it
        item = storage.remove(item_id)
        del self.hash_index[item_id]
        item.key = key
        self.tunnel(item)

    def decreaseKey(self, item_id, key):
        heap = self.lookup_(item_id)
        was_max = heap.storage.topId() == item_id
        heap.storage.decreaseKey(item_id, key)
        if was_max:
            self.refreshMeta_(heap)

    # *** introspection ***

    def activeHeaps(self):
        """Linked common-heaps in meta-slot order
        """
        return [self.common_heaps[heap_id] for heap_id in self.meta_heap.elem]

    def walk(self):
        """This queue and every nested queue of its linked common-heaps, depth first
        """
        yield self
        if self.level > 1:
            for heap in self.activeHeaps():
                yield from heap.storage.walk()
