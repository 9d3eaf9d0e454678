"""
constant.py : Constant values, strings, etc.

Copyright 2026 The funnelq developers

This file is part of funnelq, an addressable multi-level priority queue

funnelq is free software: you can redistribute it and/or modify it under the terms of the GNU Affero General Public License as published by the Free Software Foundation, either version 3 of the License, or (at your option) any later version.

This program is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU Affero General Public License for more details.

You should have received a copy of the GNU Affero General Public License along with this program.  If not, see <https://www.gnu.org/licenses/>

@file    constant.py
@author  The funnelq developers
@date    2026
@version 0.1.0
@brief   Constant values, strings, etc.
"""

program_name = "funnelq"

program_info="""
funnelq version %s

(numpy version %s)

An addressable alpha-level funnel priority queue with
a differential verification and benchmarking harness
"""

numpy_too_old="""
numpy is not up to date

required numpy version %i.%i
your numpy version is %s

The seeded workloads use numpy.random.Generator with the PCG64 bit generator
"""

# keys are signed 64-bit integers
int64_min = -(2 ** 63)
int64_max = 2 ** 63 - 1

# priority of an empty common-heap in a meta-heap: below every (key, -id) pair
empty_priority = (float("-inf"), 0)

# tunneling barrier t_B = 2**c
tunnel_c = 3
# allowed deviation from the optimal number of common-heaps
grow_tolerance = 1

# fixed arrays: common-heap array = k*(capacity) + heap_slack,
# one common-heap holds capacity_slack * expected size, at least min_heap_capacity
heap_slack = 2
capacity_slack = 4
min_heap_capacity = 32

# deepest structure built by the capacity-derived constructor
max_alpha = 3

# Lambert W iteration
w0_tolerance = 1e-12
w0_max_iter = 64

# evaluation strategies and log bases of the balance policy
eval_strategies = ("always-compute", "memoized", "precomputed-table")
log_bases = ("mixed", "binary", "natural")

# verify: full invariant scan every this many ops
scan_every = 1024

csv_header = ["n", "op", "invocations", "mean_comparisons", "max_comparisons",
              "mean_moves", "mean_hash_probes", "grow_calls", "trim_calls",
              "tunnel_calls", "beta_hat"]

# environment overrides of command-line flags: FUNNELQ_ALPHA, FUNNELQ_SEED, ..
env_prefix = "FUNNELQ_"

# exit codes of the harness
exit_ok = 0
exit_divergence = 1
exit_violation = 2
exit_io = 3
