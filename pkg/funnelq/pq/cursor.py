"""
cursor.py : Round-robin index variables continuously looping an interval

Copyright 2026 The funnelq developers

This file is part of funnelq, an addressable multi-level priority queue

funnelq is free software: you can redistribute it and/or modify it under the terms of the GNU Affero General Public License as published by the Free Software Foundation, either version 3 of the License, or (at your option) any later version.

This program is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU Affero General Public License for more details.

You should have received a copy of the GNU Affero General Public License along with this program.  If not, see <https://www.gnu.org/licenses/>

@file    cursor.py
@author  The funnelq developers
@date    2026
@version 0.1.0
@brief   Round-robin index variables continuously looping an interval
"""


class Ring:
    """Persistent round-robin counter over [0, length)

    The interval length is given at every call, since the number of
    active common-heaps changes between calls.  The counter keeps running
    and is wrapped by the current length.
    """

    def __init__(self):
        self.index = 0

    def get(self, length):
        """Next index in [0, length)
        """
        if length < 2:
            return 0
        i = self.index % length
        self.index = i + 1
        return i
