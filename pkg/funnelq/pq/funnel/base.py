"""
base.py : Common-heap cells and the level-1 item array

Copyright 2026 The funnelq developers

This file is part of funnelq, an addressable multi-level priority queue

funnelq is free software: you can redistribute it and/or modify it under the terms of the GNU Affero General Public License as published by the Free Software Foundation, either version 3 of the License, or (at your option) any later version.

This program is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU Affero General Public License for more details.

You should have received a copy of the GNU Affero General Public License along with this program.  If not, see <https://www.gnu.org/licenses/>

@file    base.py
@author  The funnelq developers
@date    2026
@version 0.1.0
@brief   Common-heap cells and the level-1 item array
"""

import math

from funnelq.pq.exception import ItemNotFoundError, QueueEmptyError
from funnelq.pq.heap import HeapArray


class CommonHeap:
    """One cell of a level: immutable heap_id, the backlink to its meta-heap slot and the storage

    meta_slot is -1 while the heap is suspended.  storage is an ItemHeap
    on level 1 and a LevelQueue of the level below otherwise.  Both
    implement the same storage protocol:

    ::

        size, capacity, isFull()
        topPriority(), topId(), topItem()
        insert(item), remove(id), extractMax()
        increaseKey(id, key), decreaseKey(id, key)
        find(id), itemIds(), drainItems(), splitInto(other)

    """
    __slots__ = ("heap_id", "meta_slot", "storage")

    def __init__(self, heap_id, storage):
        self.heap_id = heap_id
        self.meta_slot = -1
        self.storage = storage

    def isLinked(self):
        return self.meta_slot >= 0

    def __repr__(self):
        return "<CommonHeap %i @ %i: %i items>" % (self.heap_id, self.meta_slot, self.storage.size)


class ItemHeap(HeapArray):
    """Fixed-size array of items in max-heap order, the storage of a level-1 common-heap

    Items are found by a linear scan: the array holds O(n0) items.
    """

    def __init__(self, capacity, counters = None, level = 0):
        super().__init__(capacity, counters = counters, level = level)

    @property
    def size(self):
        return len(self.prio)

    def indexOf_(self, item_id):
        for j, item in enumerate(self.elem):
            if item.id == item_id:
                return j
        raise ItemNotFoundError(item_id)

    def topId(self):
        if not self.elem:
            return None
        return self.elem[0].id

    def topItem(self):
        if not self.elem:
            raise QueueEmptyError("ItemHeap : empty")
        return self.elem[0]

    def insert(self, item):
        self.push(item.priority(), item)

    def find(self, item_id):
        return self.elem[self.indexOf_(item_id)]

    def remove(self, item_id):
        return self.popAt(self.indexOf_(item_id))[1]

    def extractMax(self):
        return self.pop()[1]

    def increaseKey(self, item_id, key):
        j = self.indexOf_(item_id)
        item = self.elem[j]
        item.key = key
        self.prio[j] = item.priority()
        self.restoreUp(j)

    def decreaseKey(self, item_id, key):
        j = self.indexOf_(item_id)
        item = self.elem[j]
        item.key = key
        self.prio[j] = item.priority()
        self.restoreDown(j)

    def itemIds(self):
        return [item.id for item in self.elem]

    def drainItems(self):
        items = self.elem
        self.clear()
        return items

    def splitInto(self, other):
        """Move the second half of the array into the empty heap other

        The remaining prefix is still a heap, so this heap keeps its top.
        Returns the ids of the moved items.
        """
        cut = int(math.ceil(len(self.prio) / 2))
        moved = self.elem[cut:]
        other.fill(self.prio[cut:], moved)
        other.makeHeap()
        self.truncate(cut)
        return [item.id for item in moved]
