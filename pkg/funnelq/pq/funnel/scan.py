"""
scan.py : Full invariant scan of a funnel queue

Copyright 2026 The funnelq developers

This file is part of funnelq, an addressable multi-level priority queue

funnelq is free software: you can redistribute it and/or modify it under the terms of the GNU Affero General Public License as published by the Free Software Foundation, either version 3 of the License, or (at your option) any later version.

This program is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU Affero General Public License for more details.

You should have received a copy of the GNU Affero General Public License along with this program.  If not, see <https://www.gnu.org/licenses/>

@file    scan.py
@author  The funnelq developers
@date    2026
@version 0.1.0
@brief   Full invariant scan of a funnel queue
"""


def scan(queue, path = "root"):
    """Walk a LevelQueue recursively and return a list of violation strings

    Checked on every level: meta-heap order, meta length vs. linked heaps,
    bidirectional links, meta priorities vs. local max, hash exactness,
    size telescoping, suspended heaps and the balance envelope.  On the
    item arrays: heap order and item priorities.
    """
    out = []
    pre = "%s[L%i]" % (path, queue.level)
    meta = queue.meta_heap

    for parent, child in meta.violations():
        out.append("%s meta-heap order broken at %i -> %i" % (pre, parent, child))

    linked = [heap for heap in queue.common_heaps if heap.meta_slot >= 0]
    if len(linked) != len(meta):
        out.append("%s %i linked heaps but meta-heap length %i" % (pre, len(linked), len(meta)))

    total = 0
    hash_count = 0
    for slot, heap_id in enumerate(meta.elem):
        heap = queue.common_heaps[heap_id]
        if heap.meta_slot != slot:
            out.append("%s heap %i at meta slot %i links back to %i" % (pre, heap_id, slot, heap.meta_slot))
        storage = heap.storage
        if meta.prio[slot] != storage.topPriority():
            out.append("%s meta slot %i priority %s but local max %s" % (pre, slot, meta.prio[slot], storage.topPriority()))
        for item_id in storage.itemIds():
            hash_count += 1
            if queue.hash_index.get(item_id) != heap_id:
                out.append("%s item %i in heap %i hashed to %s" % (pre, item_id, heap_id, queue.hash_index.get(item_id)))
        total += storage.size
        if queue.level > 1:
            out.extend(scan(storage, "%s.%i" % (pre, heap_id)))
        else:
            out.extend(scanItems(storage, "%s.%i" % (pre, heap_id)))

    if total != queue.size:
        out.append("%s size %i but heaps hold %i" % (pre, queue.size, total))
    if len(queue.hash_index) != hash_count:
        out.append("%s %i hash entries for %i items" % (pre, len(queue.hash_index), hash_count))

    for heap_id in queue.suspended:
        heap = queue.common_heaps[heap_id]
        if heap.meta_slot >= 0:
            out.append("%s suspended heap %i linked to meta slot %i" % (pre, heap_id, heap.meta_slot))
        if heap.storage.size != 0:
            out.append("%s suspended heap %i holds %i items" % (pre, heap_id, heap.storage.size))
    if len(set(queue.suspended)) != len(queue.suspended):
        out.append("%s suspended stack has duplicates" % (pre))

    k_star = queue.policy.optimalHeapCount(queue.size)
    if abs(len(meta) - k_star) > queue.grow_tolerance + 1:
        out.append("%s %i heaps for %i items, optimal %i" % (pre, len(meta), queue.size, k_star))
    return out


def scanItems(heap, pre):
    out = []
    for parent, child in heap.violations():
        out.append("%s item heap order broken at %i -> %i" % (pre, parent, child))
    for j, item in enumerate(heap.elem):
        if heap.prio[j] != item.priority():
            out.append("%s item %i stored with priority %s, key %i" % (pre, item.id, heap.prio[j], item.key))
    return out
