"""
exception.py : Exceptions raised by the priority queues

Copyright 2026 The funnelq developers

This file is part of funnelq, an addressable multi-level priority queue

funnelq is free software: you can redistribute it and/or modify it under the terms of the GNU Affero General Public License as published by the Free Software Foundation, either version 3 of the License, or (at your option) any later version.

This program is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU Affero General Public License for more details.

You should have received a copy of the GNU Affero General Public License along with this program.  If not, see <https://www.gnu.org/licenses/>

@file    exception.py
@author  The funnelq developers
@date    2026
@version 0.1.0
@brief   Exceptions raised by the priority queues
"""


class FunnelError(Exception):
    pass


class ConfigurationError(FunnelError, ValueError):
    pass


class CapacityError(FunnelError, OverflowError):
    """Queue full, heap array full or no common-heap left to recruit
    """
    pass


class QueueEmptyError(FunnelError, LookupError):
    pass


class ItemNotFoundError(FunnelError, KeyError):
    pass


class KeyOrderError(FunnelError, ValueError):
    """New key not in the required direction, or outside the signed 64-bit range
    """
    pass


class NumericDomainError(FunnelError, ValueError):
    pass


class HeapIndexError(FunnelError, IndexError):
    pass
