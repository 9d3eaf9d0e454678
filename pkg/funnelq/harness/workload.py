"""
workload.py : Seeded operation streams for verification and benchmarks

Copyright 2026 The funnelq developers

This file is part of funnelq, an addressable multi-level priority queue

funnelq is free software: you can redistribute it and/or modify it under the terms of the GNU Affero General Public License as published by the Free Software Foundation, either version 3 of the License, or (at your option) any later version.

This program is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU Affero General Public License for more details.

You should have received a copy of the GNU Affero General Public License along with this program.  If not, see <https://www.gnu.org/licenses/>

@file    workload.py
@author  The funnelq developers
@date    2026
@version 0.1.0
@brief   Seeded operation streams for verification and benchmarks
"""

import numpy

from funnelq.pq import constant, default
from funnelq.pq.exception import ConfigurationError
from funnelq.pq.tools import getLogger, parameterInitCheck

logger = getLogger(__name__)

# same order as the ratios in default.mixes
OPS = ("insert", "extract_max", "remove", "increase_key", "decrease_key", "search")

KEY_DISTRIBUTIONS = ("uniform64", "ascending", "descending", "clustered")

# increase / decrease steps are drawn from [1, key_step]
key_step = 1 << 16
# clustered keys: this many centers, keys within +- cluster_width of a center
cluster_count = 16
cluster_width = 64


class WorkloadSpec:
    """What to run: workload kind, number of ops, seed, key distribution and op mix

    ::

        kind     : one of default.mixes
        op_count : number of ops, >= 1
        seed     : seed of the PCG64 bit generator
        keys     : one of KEY_DISTRIBUTIONS
        mix      : ratios in the order of OPS, summing to one (default: by kind)
        ramp     : number of leading inserts (default: by kind, see default.ramps)
    """

    parameter_defs = {
        "kind"      : (str, "mixed"),
        "op_count"  : (int, 10000),
        "seed"      : (int, 1),
        "keys"      : (str, "uniform64"),
        "mix"       : None,
        "ramp"      : None
        }

    def __init__(self, **kwargs):
        try:
            parameterInitCheck(WorkloadSpec.parameter_defs, kwargs, self)
        except AttributeError as e:
            raise ConfigurationError(str(e)) from e
        if self.kind not in default.mixes:
            raise ConfigurationError("workload must be one of %s, got %r" % (tuple(default.mixes.keys()), self.kind))
        if self.keys not in KEY_DISTRIBUTIONS:
            raise ConfigurationError("keys must be one of %s, got %r" % (KEY_DISTRIBUTIONS, self.keys))
        if self.op_count < 1:
            raise ConfigurationError("op_count must be >= 1, got %i" % (self.op_count))
        if self.mix is None:
            self.mix = default.mixes[self.kind]
        self.mix = tuple(float(ratio) for ratio in self.mix)
        if len(self.mix) != len(OPS) or min(self.mix) < 0 or abs(sum(self.mix) - 1.0) > 1e-9:
            raise ConfigurationError("mix must be %i nonnegative ratios summing to one, got %s" % (len(OPS), self.mix))
        if self.ramp is None:
            self.ramp = int(self.op_count * default.ramps.get(self.kind, 0.0))

    def reproduction(self):
        return "--workload %s --keys %s --ops %i --seed %i" % (self.kind, self.keys, self.op_count, self.seed)

    def __repr__(self):
        return "<WorkloadSpec %s>" % (self.reproduction())


class Workload:
    """Op stream of a WorkloadSpec, resolved against the items alive in the queue

    Ops are tuples (name, *args).  The caller reports the outcome of every
    op with observe(), so that removals, extractions and key updates pick
    live ids and valid keys.  Ops that need a live item fall back to insert
    on an empty queue.
    """

    def __init__(self, spec):
        self.spec = spec
        self.rng = numpy.random.Generator(numpy.random.PCG64(spec.seed))
        self.cdf = numpy.cumsum(spec.mix)
        self.centers = self.rng.integers(-(1 << 40), 1 << 40, size = cluster_count)
        self.live = []    # live ids, swap-removed
        self.where = {}   # id => index in live
        self.keys = {}    # id => current key
        self.counter = 0
        self.issued = 0

    def __iter__(self):
        for i in range(self.spec.op_count):
            yield self.nextOp()

    def __len__(self):
        return len(self.live)

    def newKey_(self):
        dist = self.spec.keys
        if dist == "uniform64":
            return int(self.rng.integers(constant.int64_min, constant.int64_max, endpoint = True))
        if dist == "ascending":
            self.counter += 1
            return self.counter
        if dist == "descending":
            self.counter -= 1
            return self.counter
        center = int(self.centers[self.rng.integers(cluster_count)])
        return center + int(self.rng.integers(-cluster_width, cluster_width, endpoint = True))

    def pickId_(self):
        return self.live[int(self.rng.integers(len(self.live)))]

    def pickOp_(self):
        if self.issued < self.spec.ramp:
            return "insert"
        index = int(numpy.searchsorted(self.cdf, self.rng.random(), side = "right"))
        return OPS[min(index, len(OPS) - 1)]

    def nextOp(self, force = None):
        name = self.pickOp_() if force is None else force
        self.issued += 1
        if name != "insert" and not self.live:
            name = "insert"
        if name == "insert":
            return ("insert", self.newKey_(), b"%i" % (self.issued))
        if name == "extract_max":
            return ("extract_max",)
        item_id = self.pickId_()
        if name in ("remove", "search"):
            return (name, item_id)
        key = self.keys[item_id]
        step = int(self.rng.integers(1, key_step, endpoint = True))
        if name == "increase_key":
            if key == constant.int64_max:
                return ("search", item_id)
            return (name, item_id, min(constant.int64_max, key + step))
        if key == constant.int64_min:
            return ("search", item_id)
        return (name, item_id, max(constant.int64_min, key - step))

    def drop_(self, item_id):
        j = self.where.pop(item_id)
        last = self.live.pop()
        if last != item_id:
            self.live[j] = last
            self.where[last] = j
        del self.keys[item_id]

    def observe(self, op, result):
        """Track the live items after op returned result (an exception instance on failure)
        """
        if isinstance(result, Exception):
            return
        name = op[0]
        if name == "insert":
            self.where[result] = len(self.live)
            self.live.append(result)
            self.keys[result] = op[1]
        elif name == "extract_max":
            self.drop_(result.id)
        elif name == "remove":
            self.drop_(op[1])
        elif name in ("increase_key", "decrease_key"):
            self.keys[op[1]] = op[2]


def mark_payload(payload):
    """The payload mutation applied by search ops
    """
    return payload + b"*"


def apply(queue, op):
    """Run op on a FunnelQueue or an OracleQueue and return the raw result
    """
    name = op[0]
    if name == "insert":
        return queue.insert(op[1], op[2])
    if name == "extract_max":
        return queue.extractMax()
    if name == "remove":
        return queue.remove(op[1])
    if name == "increase_key":
        return queue.increaseKey(op[1], op[2])
    if name == "decrease_key":
        return queue.decreaseKey(op[1], op[2])
    if name == "search":
        return queue.search(op[1], mark_payload)
    if name == "max_item":
        return queue.maxItem()
    raise ConfigurationError("unknown op %r" % (name,))
