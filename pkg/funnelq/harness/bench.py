"""
bench.py : Operation-count benchmarks over a grid of queue sizes

Copyright 2026 The funnelq developers

This file is part of funnelq, an addressable multi-level priority queue

funnelq is free software: you can redistribute it and/or modify it under the terms of the GNU Affero General Public License as published by the Free Software Foundation, either version 3 of the License, or (at your option) any later version.

This program is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU Affero General Public License for more details.

You should have received a copy of the GNU Affero General Public License along with this program.  If not, see <https://www.gnu.org/licenses/>

@file    bench.py
@author  The funnelq developers
@date    2026
@version 0.1.0
@brief   Operation-count benchmarks over a grid of queue sizes
"""

import csv
import time

from funnelq.pq import constant
from funnelq.pq.exception import FunnelError, ConfigurationError
from funnelq.pq.instrumentation import OpCounters
from funnelq.pq.funnel.facade import FunnelQueue
from funnelq.pq.tools import getLogger
from funnelq.harness.workload import WorkloadSpec, Workload, apply
from funnelq.harness.multiprocess import run_cells

logger = getLogger(__name__)


def build(queue, workload, n):
    """Fill the queue with n inserts drawn from the workload's key distribution
    """
    for i in range(n):
        op = workload.nextOp(force = "insert")
        workload.observe(op, apply(queue, op))


def bench_cell(queue_config, spec_config, n):
    """Build a queue of n items, then count the primitive steps of the workload

    The queue capacity is n plus the number of ops.  Returns the CSV rows of the cell.
    """
    config = dict(queue_config)
    config["capacity"] = n + spec_config["op_count"]
    counters = OpCounters()
    queue = FunnelQueue(counters = counters, **config)
    workload = Workload(WorkloadSpec(**spec_config))
    t = time.time()
    build(queue, workload, n)
    counters.reset()
    for op in workload:
        try:
            result = apply(queue, op)
        except FunnelError as e:
            result = e
        workload.observe(op, result)
    logger.debug("bench_cell : n = %i done in %.2f s", n, time.time() - t)
    return counters.snapshot().csvRows(n)


def write_csv(path, rows):
    """UTF-8, LF line endings, header first
    """
    with open(path, "w", newline = "", encoding = "utf-8") as f:
        writer = csv.writer(f, lineterminator = "\n")
        writer.writerow(constant.csv_header)
        writer.writerows(rows)


def cmd_bench(spec_config, queue_config, sizes, csv_path, workers = 1):
    """Run one cell per size and write all rows, in size order, into csv_path

    Returns a harness exit code.
    """
    if not sizes or list(sizes) != sorted(sizes) or min(sizes) < 0:
        raise ConfigurationError("sizes must be an ascending list of nonnegative integers, got %s" % (sizes,))
    cells = [{"queue_config": queue_config, "spec_config": spec_config, "n": n} for n in sizes]
    results = run_cells(bench_cell, cells, workers)
    rows = []
    for cell_rows in results:
        rows.extend(cell_rows)
    try:
        write_csv(csv_path, rows)
    except OSError as e:
        logger.error("cmd_bench : could not write %s : %s", csv_path, e)
        return constant.exit_io
    print("wrote %i rows to %s" % (len(rows), csv_path))
    return constant.exit_ok
