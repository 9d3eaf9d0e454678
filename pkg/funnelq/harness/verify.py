"""
verify.py : Lockstep replay of a workload on the funnel queue and the oracle

Copyright 2026 The funnelq developers

This file is part of funnelq, an addressable multi-level priority queue

funnelq is free software: you can redistribute it and/or modify it under the terms of the GNU Affero General Public License as published by the Free Software Foundation, either version 3 of the License, or (at your option) any later version.

This program is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU Affero General Public License for more details.

You should have received a copy of the GNU Affero General Public License along with this program.  If not, see <https://www.gnu.org/licenses/>

@file    verify.py
@author  The funnelq developers
@date    2026
@version 0.1.0
@brief   Lockstep replay of a workload on the funnel queue and the oracle
"""

import sys
import logging

from funnelq.pq import constant
from funnelq.pq.exception import FunnelError
from funnelq.pq.item import Item
from funnelq.pq.oracle import OracleQueue
from funnelq.pq.funnel.facade import FunnelQueue
from funnelq.pq.tools import getLogger, setLogger
from funnelq.harness.workload import Workload, apply


def visible(result):
    """What the caller of an op gets to see, in a comparable form
    """
    if isinstance(result, FunnelError):
        return ("error", result.__class__.__name__)
    if isinstance(result, Item):
        return ("ok", result.asTuple())
    return ("ok", result)


def outcome(queue, op):
    """Run op, then peek the max: returns (raw result, visible output)
    """
    try:
        result = apply(queue, op)
    except FunnelError as e:
        result = e
    try:
        top = queue.maxItem()
    except FunnelError as e:
        top = e
    return result, (visible(result), visible(top))


class Verifier:
    """Replays a WorkloadSpec on a FunnelQueue and an OracleQueue, stopping at the first difference

    ::

        exit_ok         : all outputs agree, all scans clean
        exit_divergence : an op produced different outputs
        exit_violation  : the invariant scanner found a violation
    """

    def __init__(self, spec, queue_config, scan_every = constant.scan_every, out = None, queue = None):
        self.pre = self.__class__.__name__
        self.logger = getLogger(self.pre)
        self.spec = spec
        self.queue_config = queue_config
        self.scan_every = scan_every
        self.out = sys.stdout if out is None else out
        self.queue = FunnelQueue(**queue_config) if queue is None else queue
        self.oracle = OracleQueue(capacity = self.queue.capacity)

    def setDebug(self):
        setLogger(self.logger, logging.DEBUG)

    def reproduction(self):
        c = self.queue_config
        line = "run-funnelq verify %s --alpha %i --capacity %i" % (self.spec.reproduction(), c["alpha"], c["capacity"])
        for key, flag in (("grow_tolerance", "--tolerance"), ("tunnel_c", "--tunnel-c"),
                          ("log_base", "--log-base"), ("eval_strategy", "--w0-strategy")):
            if key in c:
                line += " %s %s" % (flag, c[key])
        return line

    def report_(self, lines):
        for line in lines:
            print(line, file = self.out)
        print("reproduce with: %s" % (self.reproduction()), file = self.out)

    def checkScan_(self, index):
        violations = self.queue.scan()
        if not violations:
            return constant.exit_ok
        self.logger.warning("invariant violation after op %i", index)
        self.report_(["invariant violation after op %i:" % (index)] + ["  " + v for v in violations])
        return constant.exit_violation

    def run(self):
        workload = Workload(self.spec)
        index = -1
        for index, op in enumerate(workload):
            result, funnel_out = outcome(self.queue, op)
            oracle_result, oracle_out = outcome(self.oracle, op)
            if funnel_out != oracle_out:
                self.logger.warning("divergence at op %i", index)
                self.report_([
                    "divergence at op %i: %s" % (index, op),
                    "  funnel : %s" % (funnel_out,),
                    "  oracle : %s" % (oracle_out,)
                    ])
                return constant.exit_divergence
            workload.observe(op, result)
            if self.scan_every > 0 and (index + 1) % self.scan_every == 0:
                status = self.checkScan_(index)
                if status != constant.exit_ok:
                    return status
        status = self.checkScan_(index)
        if status != constant.exit_ok:
            return status
        print("ok: %i ops, %i items left, %s" % (self.spec.op_count, len(self.queue), self.spec.reproduction()), file = self.out)
        return constant.exit_ok


def cmd_verify(spec, queue_config, scan_every = constant.scan_every, out = None):
    return Verifier(spec, queue_config, scan_every = scan_every, out = out).run()
