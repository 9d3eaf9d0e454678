"""
stats.py : Per-level structure report after a workload

Copyright 2026 The funnelq developers

This file is part of funnelq, an addressable multi-level priority queue

funnelq is free software: you can redistribute it and/or modify it under the terms of the GNU Affero General Public License as published by the Free Software Foundation, either version 3 of the License, or (at your option) any later version.

This program is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU Affero General Public License for more details.

You should have received a copy of the GNU Affero General Public License along with this program.  If not, see <https://www.gnu.org/licenses/>

@file    stats.py
@author  The funnelq developers
@date    2026
@version 0.1.0
@brief   Per-level structure report after a workload
"""

import sys

from funnelq.pq import constant
from funnelq.pq.exception import FunnelError
from funnelq.pq.instrumentation import OpCounters
from funnelq.pq.funnel.facade import FunnelQueue
from funnelq.harness.workload import WorkloadSpec, Workload, apply

columns = ("level", "instances", "n", "k", "k_star", "deviation", "max_abs_deviation", "suspended", "tunnel_occupancy")


def run_workload(queue, spec):
    workload = Workload(spec)
    for op in workload:
        try:
            result = apply(queue, op)
        except FunnelError as e:
            result = e
        workload.observe(op, result)


def format_report(queue, counters):
    """Text table of FunnelQueue.levelStats plus the top-level balance targets and tunnel slots
    """
    lines = []
    lines.append(" ".join("%17s" % (column) for column in columns))
    for row in queue.levelStats():
        cells = []
        for column in columns:
            value = row[column]
            if isinstance(value, float):
                cells.append("%17.6f" % (value))
            else:
                cells.append("%17i" % (value))
        lines.append(" ".join(cells))
    root = queue.root
    targets = root.policy.targets(root.size)
    lines.append("")
    lines.append("level %i targets: k* = %i, expected heap size = %.6f, inserts to grow = %.6f" % (
        root.level, targets.k_star, targets.expected_heap_size, targets.delta_to_grow))
    report = counters.snapshot()
    for level in range(queue.alpha, 0, -1):
        lines.append("level %i highest tunnel restore slot: %i (barrier %i)" % (
            level, report.maxTunnelSlot(level), 2 ** queue.tunnel_c))
    return "\n".join(lines)


def cmd_stats(spec_config, queue_config, out = None):
    out = sys.stdout if out is None else out
    counters = OpCounters()
    queue = FunnelQueue(counters = counters, **queue_config)
    run_workload(queue, WorkloadSpec(**spec_config))
    print(format_report(queue, counters), file = out)
    return constant.exit_ok
