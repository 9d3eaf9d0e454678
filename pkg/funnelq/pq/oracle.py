"""
oracle.py : A plain reference priority queue with the funnel queue's api

Copyright 2026 The funnelq developers

This file is part of funnelq, an addressable multi-level priority queue

funnelq is free software: you can redistribute it and/or modify it under the terms of the GNU Affero General Public License as published by the Free Software Foundation, either version 3 of the License, or (at your option) any later version.

This program is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU Affero General Public License for more details.

You should have received a copy of the GNU Affero General Public License along with this program.  If not, see <https://www.gnu.org/licenses/>

@file    oracle.py
@author  The funnelq developers
@date    2026
@version 0.1.0
@brief   A plain reference priority queue with the funnel queue's api
"""

import heapq

from funnelq.pq.exception import CapacityError, QueueEmptyError, ItemNotFoundError, KeyOrderError
from funnelq.pq.item import Item
from funnelq.pq.tools import getLogger, isInt64


class OracleQueue:
    """Reference queue: a dict of live items plus one heapq of (-key, id) entries with lazy deletion

    An entry is stale when its id is gone or its key is not the item's
    current key.  The heap is rebuilt when stale entries outnumber the
    live ones.  Same ids, same tie rule and same exceptions as FunnelQueue.
    """

    def __init__(self, capacity = 1 << 20):
        self.pre = self.__class__.__name__
        self.logger = getLogger(self.pre)
        self.capacity = capacity
        self.items = {}
        self.heap = []
        self.next_id = 0

    @property
    def size(self):
        return len(self.items)

    def __len__(self):
        return len(self.items)

    def __contains__(self, item_id):
        return item_id in self.items

    def checkKey_(self, key):
        if not isInt64(key):
            raise KeyOrderError("key must be a signed 64-bit integer, got %r" % (key,))

    def get_(self, item_id):
        item = self.items.get(item_id)
        if item is None:
            raise ItemNotFoundError(item_id)
        return item

    def push_(self, item):
        heapq.heappush(self.heap, (-item.key, item.id))
        if len(self.heap) > 2 * len(self.items) + 16:
            self.compact_()

    def compact_(self):
        self.heap = [(-item.key, item.id) for item in self.items.values()]
        heapq.heapify(self.heap)

    def top_(self):
        """Drop stale entries from the head; returns the max item
        """
        while self.heap:
            neg_key, item_id = self.heap[0]
            item = self.items.get(item_id)
            if item is not None and item.key == -neg_key:
                return item
            heapq.heappop(self.heap)
        raise QueueEmptyError("%s : empty" % (self.pre))

    def insert(self, key, payload = b""):
        self.checkKey_(key)
        if len(self.items) >= self.capacity:
            raise CapacityError("%s : capacity of %i items reached" % (self.pre, self.capacity))
        item = Item(self.next_id, key, payload)
        self.next_id += 1
        self.items[item.id] = item
        self.push_(item)
        return item.id

    def maxItem(self):
        item = self.top_()
        return item.id, item.key

    def extractMax(self):
        item = self.top_()
        heapq.heappop(self.heap)
        del self.items[item.id]
        return item

    def search(self, item_id, f):
        item = self.get_(item_id)
        payload = f(item.payload)
        if payload is not None:
            item.payload = payload

    def remove(self, item_id):
        item = self.get_(item_id)
        del self.items[item_id]
        return item

    def increaseKey(self, item_id, key):
        self.checkKey_(key)
        item = self.get_(item_id)
        if key <= item.key:
            raise KeyOrderError("increaseKey : new key %i is not larger than %i" % (key, item.key))
        item.key = key
        self.push_(item)

    def decreaseKey(self, item_id, key):
        self.checkKey_(key)
        item = self.get_(item_id)
        if key >= item.key:
            raise KeyOrderError("decreaseKey : new key %i is not smaller than %i" % (key, item.key))
        item.key = key
        self.push_(item)

    def selfCheck(self):
        """Compare the heap-reported max with a linear scan of the items
        """
        if not self.items:
            return True
        best = max(self.items.values(), key = lambda item: item.priority())
        return self.top_() is best
