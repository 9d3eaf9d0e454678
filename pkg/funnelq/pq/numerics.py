"""
numerics.py : Lambert W function and the load-balancing functions of the funnel levels

Copyright 2026 The funnelq developers

This file is part of funnelq, an addressable multi-level priority queue

funnelq is free software: you can redistribute it and/or modify it under the terms of the GNU Affero General Public License as published by the Free Software Foundation, either version 3 of the License, or (at your option) any later version.

This program is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU Affero General Public License for more details.

You should have received a copy of the GNU Affero General Public License along with this program.  If not, see <https://www.gnu.org/licenses/>

@file    numerics.py
@author  The funnelq developers
@date    2026
@version 0.1.0
@brief   Lambert W function and the load-balancing functions of the funnel levels

A level i queue holding n_i items in k_i common-heaps is in equilibrium when

::

    n_i = k_i * log(k_i)           i > 1
    n_1 = k_1 * sqrt(log(k_1))     i = 1

Inverting these with the principal branch W0 of the Lambert W function gives
the optimal number of common-heaps for a given number of items:

::

    k_i = exp(W0(n_i))                  i > 1, natural log
    k_i = exp(W0(n_i * ln 2))           i > 1, binary log
    k_1 = exp(W0(n_1**2 * ln 4) / 2)    i = 1, binary log
    k_1 = exp(W0(2 * n_1**2) / 2)       i = 1, natural log

log_base "mixed" uses binary log on level 1 and natural log above it.
"""

import math

import numpy

from funnelq.pq import constant
from funnelq.pq.exception import NumericDomainError, ConfigurationError
from funnelq.pq.instrumentation import W0_EVALUATION, null_counters
from funnelq.pq.tools import getLogger, parameterInitCheck

logger = getLogger(__name__)

LN2 = math.log(2.0)
LN4 = math.log(4.0)


def lambert_w0(x, tolerance = constant.w0_tolerance, max_iter = constant.w0_max_iter):
    """Principal branch of the Lambert W function for x >= 0

    Halley iteration seeded from ln(1 + x).  Stops when
    |w*exp(w) - x| <= tolerance * max(1, x).
    """
    if x != x or x < 0:
        raise NumericDomainError("lambert_w0 : argument must be nonnegative, got %r" % (x,))
    x = float(x)
    if x == 0.0:
        return 0.0
    if math.isinf(x):
        return x
    bound = tolerance * max(1.0, x)
    w = math.log1p(x)
    for i in range(max_iter):
        ew = math.exp(w)
        f = w * ew - x
        if abs(f) <= bound:
            break
        wp1 = w + 1.0
        step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1))
        w_new = w - step
        if w_new < 0.0:
            # the root is nonnegative: damp instead of crossing zero
            w_new = 0.5 * w
        if w_new == w:
            break
        w = w_new
    return w


def lambert_w0_grid(xs, tolerance = constant.w0_tolerance):
    """Element-wise lambert_w0 over a numpy array
    """
    xs = numpy.asarray(xs, dtype = numpy.float64)
    out = numpy.empty_like(xs)
    flat_in = xs.ravel()
    flat_out = out.ravel()
    for i in range(flat_in.size):
        flat_out[i] = lambert_w0(float(flat_in[i]), tolerance)
    return out


def checkLogBase(log_base):
    if log_base not in constant.log_bases:
        raise ConfigurationError("log_base must be one of %s, got %r" % (constant.log_bases, log_base))


def log_function(level, log_base):
    """The logarithm used by the equilibrium relation of a level
    """
    checkLogBase(log_base)
    if log_base == "binary" or (log_base == "mixed" and level == 1):
        return math.log2
    return math.log


def round_count(value):
    """Round to nearest with a floor of one heap
    """
    return max(1, int(math.floor(value + 0.5)))


def heap_count_real(level, n, log_base = "mixed", tolerance = constant.w0_tolerance):
    """Unrounded optimal number of common-heaps for n items on a level
    """
    if level < 1:
        raise ConfigurationError("level must be >= 1, got %r" % (level,))
    if n < 0:
        raise NumericDomainError("number of items must be nonnegative, got %r" % (n,))
    checkLogBase(log_base)
    if level == 1:
        if log_base == "natural":
            return math.exp(0.5 * lambert_w0(2.0 * n * n, tolerance))
        return math.exp(0.5 * lambert_w0(n * n * LN4, tolerance))
    if log_base == "binary":
        return math.exp(lambert_w0(n * LN2, tolerance))
    return math.exp(lambert_w0(float(n), tolerance))


def optimal_heap_count(level, n, log_base = "mixed", tolerance = constant.w0_tolerance, max_heaps = None):
    """Optimal integer number of common-heaps for n items on a level, at least one
    """
    if n == 0:
        return 1
    k = round_count(heap_count_real(level, n, log_base, tolerance))
    if max_heaps is not None:
        k = min(k, max_heaps)
    return k


def expected_heap_size(level, k, log_base = "mixed"):
    """Equilibrium size of one common-heap when the level has k of them, at least one
    """
    if k < 1:
        raise NumericDomainError("heap count must be >= 1, got %r" % (k,))
    log = log_function(level, log_base)
    if level == 1:
        size = math.sqrt(log(k))
    else:
        size = log(k)
    return max(1.0, size)


def delta_to_grow(level, k_star, log_base = "mixed"):
    """Approximate number of inserts before k_star + 1 heaps become optimal
    """
    if k_star < 1:
        raise NumericDomainError("heap count must be >= 1, got %r" % (k_star,))
    log = log_function(level, log_base)
    if level == 1:
        return math.sqrt(log(k_star + 1))
    return log(k_star + 1)


class BalanceTargets:
    """Optimal heap count, equilibrium heap size and inserts-to-next-heap for one level size
    """
    __slots__ = ("k_star", "expected_heap_size", "delta_to_grow")

    def __init__(self, k_star, expected_heap_size, delta_to_grow):
        assert(k_star >= 1)
        assert(expected_heap_size > 0)
        self.k_star = k_star
        self.expected_heap_size = expected_heap_size
        self.delta_to_grow = delta_to_grow

    def __repr__(self):
        return "<BalanceTargets k*=%i n=%.3f dn=%.3f>" % (self.k_star, self.expected_heap_size, self.delta_to_grow)


def checkLevel(level):
    return level >= 1


def checkTolerance(tolerance):
    return tolerance > 0


class BalancePolicy:
    """Load-balancing functions of one level with a chosen evaluation strategy

    ::

        always-compute      : evaluate W0 on every call
        memoized            : evaluate once per n, fill a table lazily
        precomputed-table   : evaluate for n in [0, table_size] at construction

    All strategies return identical results; outside of a table the value is computed.
    """

    parameter_defs = {
        "level_index"   : checkLevel,
        "eval_strategy" : (str, "memoized"),
        "w0_tolerance"  : checkTolerance,
        "log_base"      : (str, "mixed"),
        "max_heaps"     : None,             # cap of the level's common-heap array
        "table_size"    : (int, 0),
        "counters"      : None
        }

    def __init__(self, **kwargs):
        kwargs.setdefault("level_index", 1)
        kwargs.setdefault("w0_tolerance", constant.w0_tolerance)
        parameterInitCheck(BalancePolicy.parameter_defs, kwargs, self)
        self.pre = self.__class__.__name__ + "." + str(self.level_index)
        self.logger = getLogger(self.pre)
        if self.eval_strategy not in constant.eval_strategies:
            raise ConfigurationError("eval_strategy must be one of %s, got %r" % (constant.eval_strategies, self.eval_strategy))
        checkLogBase(self.log_base)
        if self.counters is None:
            self.counters = null_counters
        self.table = {}
        if self.eval_strategy == "precomputed-table":
            self.makeTable_()

    def makeTable_(self):
        self.logger.debug("makeTable_ : %i entries", self.table_size + 1)
        for n in range(self.table_size + 1):
            self.table[n] = self.compute_(n)

    def compute_(self, n):
        if n > 0:
            self.counters.record(W0_EVALUATION, self.level_index)
        return optimal_heap_count(self.level_index, n, self.log_base, self.w0_tolerance)

    def optimalHeapCount(self, n):
        if self.eval_strategy == "always-compute":
            k = self.compute_(n)
        else:
            k = self.table.get(n)
            if k is None:
                k = self.compute_(n)
                if self.eval_strategy == "memoized":
                    self.table[n] = k
        if self.max_heaps is not None and k > self.max_heaps:
            return self.max_heaps
        return k

    def expectedHeapSize(self, k):
        return expected_heap_size(self.level_index, k, self.log_base)

    def deltaToGrow(self, k_star):
        return delta_to_grow(self.level_index, k_star, self.log_base)

    def targets(self, n):
        k_star = self.optimalHeapCount(n)
        return BalanceTargets(k_star, self.expectedHeapSize(k_star), self.deltaToGrow(k_star))
