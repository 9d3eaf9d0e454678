"""
item.py : The unit stored in the priority queues

Copyright 2026 The funnelq developers

This file is part of funnelq, an addressable multi-level priority queue

funnelq is free software: you can redistribute it and/or modify it under the terms of the GNU Affero General Public License as published by the Free Software Foundation, either version 3 of the License, or (at your option) any later version.

This program is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU Affero General Public License for more details.

You should have received a copy of the GNU Affero General Public License along with this program.  If not, see <https://www.gnu.org/licenses/>

@file    item.py
@author  The funnelq developers
@date    2026
@version 0.1.0
@brief   The unit stored in the priority queues
"""


class Item:
    """An item: unique id, signed 64-bit key and an opaque payload

    Items are ordered by their priority pair (key, -id): on equal keys the
    smaller id is the larger item.
    """
    __slots__ = ("id", "key", "payload")

    def __init__(self, id, key, payload = b""):
        self.id = id
        self.key = key
        self.payload = payload

    def priority(self):
        return (self.key, -self.id)

    def asTuple(self):
        return (self.id, self.key, self.payload)

    def __eq__(self, other):
        if not isinstance(other, Item):
            return NotImplemented
        return self.asTuple() == other.asTuple()

    def __hash__(self):
        return hash(self.id)

    def __repr__(self):
        return "<Item %i: key=%i payload=%r>" % (self.id, self.key, self.payload)
