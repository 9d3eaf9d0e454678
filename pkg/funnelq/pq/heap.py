"""
heap.py : Implicit binary max-heap primitives over a fixed-capacity array

Copyright 2026 The funnelq developers

This file is part of funnelq, an addressable multi-level priority queue

funnelq is free software: you can redistribute it and/or modify it under the terms of the GNU Affero General Public License as published by the Free Software Foundation, either version 3 of the License, or (at your option) any later version.

This program is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU Affero General Public License for more details.

You should have received a copy of the GNU Affero General Public License along with this program.  If not, see <https://www.gnu.org/licenses/>

@file    heap.py
@author  The funnelq developers
@date    2026
@version 0.1.0
@brief   Implicit binary max-heap primitives over a fixed-capacity array
"""

from funnelq.pq.constant import empty_priority as EMPTY
from funnelq.pq.exception import CapacityError, QueueEmptyError, HeapIndexError
from funnelq.pq.instrumentation import KEY_COMPARISON, ITEM_MOVE, null_counters


class HeapArray:
    """Max-heap of (priority, element) slots kept in two parallel lists

    ::

        parent(j) = (j - 1) // 2
        prio[parent(j)] >= prio[j]  for every j in [1, len)

    Priorities are compared with ``>`` only, and every comparison is
    recorded into the counters sink.  When on_move is given, it is
    called as on_move(element, new_index) once for every element that
    lands on a new index.
    """

    def __init__(self, capacity, on_move = None, counters = None, level = 0):
        if capacity < 1:
            raise CapacityError("HeapArray : capacity must be >= 1")
        self.capacity = capacity
        self.on_move = on_move
        self.counters = null_counters if counters is None else counters
        self.level = level
        self.prio = []
        self.elem = []

    def __len__(self):
        return len(self.prio)

    def isFull(self):
        return len(self.prio) >= self.capacity

    def top(self):
        if not self.prio:
            raise QueueEmptyError("HeapArray : top of an empty heap")
        return self.prio[0], self.elem[0]

    def topPriority(self):
        if not self.prio:
            return EMPTY
        return self.prio[0]

    def checkIndex_(self, j):
        if j < 0 or j >= len(self.prio):
            raise HeapIndexError("HeapArray : index %i out of range [0, %i)" % (j, len(self.prio)))

    def count_(self, comparisons, moves):
        if comparisons:
            self.counters.record(KEY_COMPARISON, self.level, comparisons)
        if moves:
            self.counters.record(ITEM_MOVE, self.level, moves)

    # *** sifts with a hole: (p, e) is written only once, into its final index ***

    def siftUp_(self, j, p, e, origin):
        prio, elem, on_move = self.prio, self.elem, self.on_move
        comparisons = 0
        moves = 0
        while j > 0:
            parent = (j - 1) >> 1
            comparisons += 1
            if p > prio[parent]:
                prio[j] = prio[parent]
                elem[j] = elem[parent]
                if on_move is not None:
                    on_move(elem[j], j)
                moves += 1
                j = parent
            else:
                break
        prio[j] = p
        elem[j] = e
        if j != origin:
            if on_move is not None:
                on_move(e, j)
            moves += 1
        self.count_(comparisons, moves)
        return j

    def siftDown_(self, j, p, e, origin):
        prio, elem, on_move = self.prio, self.elem, self.on_move
        n = len(prio)
        comparisons = 0
        moves = 0
        while True:
            child = 2 * j + 1
            if child >= n:
                break
            right = child + 1
            if right < n:
                comparisons += 1
                if prio[right] > prio[child]:
                    child = right
            comparisons += 1
            if prio[child] > p:
                prio[j] = prio[child]
                elem[j] = elem[child]
                if on_move is not None:
                    on_move(elem[j], j)
                moves += 1
                j = child
            else:
                break
        prio[j] = p
        elem[j] = e
        if j != origin:
            if on_move is not None:
                on_move(e, j)
            moves += 1
        self.count_(comparisons, moves)
        return j

    # *** public primitives ***

    def push(self, p, e):
        """Insert a slot and return its final index
        """
        if len(self.prio) >= self.capacity:
            raise CapacityError("HeapArray : capacity %i exceeded" % (self.capacity))
        self.prio.append(p)
        self.elem.append(e)
        return self.siftUp_(len(self.prio) - 1, p, e, -1)

    def pop(self):
        """Remove and return the max slot as (priority, element)
        """
        if not self.prio:
            raise QueueEmptyError("HeapArray : pop from an empty heap")
        top = (self.prio[0], self.elem[0])
        last_p = self.prio.pop()
        last_e = self.elem.pop()
        if self.prio:
            self.siftDown_(0, last_p, last_e, len(self.prio))
        return top

    def makeHeap(self):
        """Establish heap order over the current contents in O(len) comparisons
        """
        prio, elem = self.prio, self.elem
        for j in range(len(prio) // 2 - 1, -1, -1):
            self.siftDown_(j, prio[j], elem[j], j)

    def restoreDown(self, j):
        """Restore order below j after the priority at j decreased; returns the final index
        """
        self.checkIndex_(j)
        return self.siftDown_(j, self.prio[j], self.elem[j], j)

    def restoreUp(self, j):
        """Restore order above j after the priority at j increased; returns the final index
        """
        self.checkIndex_(j)
        return self.siftUp_(j, self.prio[j], self.elem[j], j)

    def popAt(self, j):
        """Remove and return the slot at an interior index

        The last slot fills the hole and is sifted up or down from there.
        """
        self.checkIndex_(j)
        removed = (self.prio[j], self.elem[j])
        last_p = self.prio.pop()
        last_e = self.elem.pop()
        n = len(self.prio)
        if j == n:
            return removed
        self.prio[j] = last_p
        self.elem[j] = last_e
        if j > 0:
            self.count_(1, 0)
            if last_p > self.prio[(j - 1) >> 1]:
                self.siftUp_(j, last_p, last_e, n)
                return removed
        self.siftDown_(j, last_p, last_e, n)
        return removed

    # *** bulk helpers for transfers between heaps ***

    def fill(self, prios, elems):
        """Append slots without ordering them, call makeHeap afterwards
        """
        if len(self.prio) + len(prios) > self.capacity:
            raise CapacityError("HeapArray : capacity %i exceeded" % (self.capacity))
        start = len(self.prio)
        self.prio.extend(prios)
        self.elem.extend(elems)
        if self.on_move is not None:
            for j in range(start, len(self.elem)):
                self.on_move(self.elem[j], j)
        self.count_(0, len(prios))

    def truncate(self, length):
        """Drop the trailing slots from index length on: the prefix of a heap is a heap
        """
        del self.prio[length:]
        del self.elem[length:]

    def clear(self):
        self.prio = []
        self.elem = []

    def violations(self):
        """Index pairs (parent, child) that break the heap order
        """
        prio = self.prio
        return [((j - 1) >> 1, j) for j in range(1, len(prio)) if prio[j] > prio[(j - 1) >> 1]]
