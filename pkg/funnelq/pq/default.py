"""
default.py : Default configuration values

Copyright 2026 The funnelq developers

This file is part of funnelq, an addressable multi-level priority queue

funnelq is free software: you can redistribute it and/or modify it under the terms of the GNU Affero General Public License as published by the Free Software Foundation, either version 3 of the License, or (at your option) any later version.

This program is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU Affero General Public License for more details.

You should have received a copy of the GNU Affero General Public License along with this program.  If not, see <https://www.gnu.org/licenses/>

@file    default.py
@author  The funnelq developers
@date    2026
@version 0.1.0
@brief   Default configuration values
"""

from funnelq.pq import constant


def get_balance_config():
    balance_config = {
        "eval_strategy" : "memoized",
        "w0_tolerance"  : constant.w0_tolerance,
        "log_base"      : "mixed"
        }
    return balance_config


def get_queue_config():
    queue_config = {
        "alpha"             : 2,
        "capacity"          : 1 << 20,
        "tunnel_c"          : constant.tunnel_c,
        "grow_tolerance"    : constant.grow_tolerance,
        "capacity_slack"    : constant.capacity_slack,
        "min_heap_capacity" : constant.min_heap_capacity
        }
    queue_config.update(get_balance_config())
    return queue_config


def get_workload_config():
    workload_config = {
        "workload"   : "mixed",
        "keys"       : "uniform64",
        "ops"        : 10000,
        "seed"       : 1,
        "sizes"      : [1 << 10, 1 << 12, 1 << 14],
        "scan_every" : constant.scan_every,
        "workers"    : 1
        }
    return workload_config


# op mixes per workload kind, in the order
# insert, extract_max, remove, increase_key, decrease_key, search
mixes = {
    "insert-only"   : (1.0, 0.0, 0.0, 0.0, 0.0, 0.0),
    "mixed"         : (0.40, 0.15, 0.10, 0.10, 0.15, 0.10),
    "dijkstra-like" : (0.30, 0.20, 0.0, 0.0, 0.50, 0.0),
    "remove-heavy"  : (0.30, 0.0, 0.70, 0.0, 0.0, 0.0)
    }

# share of a workload's ops spent inserting before the mix starts
ramps = {
    "remove-heavy"  : 0.5
    }
