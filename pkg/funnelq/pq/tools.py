"""
tools.py : Helper routines

Copyright 2026 The funnelq developers

This file is part of funnelq, an addressable multi-level priority queue

funnelq is free software: you can redistribute it and/or modify it under the terms of the GNU Affero General Public License as published by the Free Software Foundation, either version 3 of the License, or (at your option) any later version.

This program is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU Affero General Public License for more details.

You should have received a copy of the GNU Affero General Public License along with this program.  If not, see <https://www.gnu.org/licenses/>

@file    tools.py
@author  The funnelq developers
@date    2026
@version 0.1.0
@brief   Helper routines
"""

import sys
import math
import types
import logging

from funnelq.pq import constant

loggers = {}

assert(sys.version_info.major >= 3)


def getLogger(name):
    global loggers
    logger = loggers.get(name)
    if logger: return logger
    logger = logging.getLogger(name)
    loggers[name] = logger
    return logger


def setLogger(name, level):
    """Give either logger name or the logger itself
    """
    if (isinstance(name, str)):
        logger = getLogger(name)
    else:
        logger = name

    logger.setLevel(level)

    if not logger.hasHandlers():
        formatter = logging.Formatter('%(name)s - %(levelname)s - %(message)s')
        ch = logging.StreamHandler()
        ch.setFormatter(formatter)
        logger.addHandler(ch)


def checkType_(key, value, required_type):
    # exact class: bool must not pass for int, nor int for float
    if value.__class__ != required_type:
        raise AttributeError("parameter %s is %s : should be %s" % (key, value.__class__.__name__, required_type.__name__))


def parameterInitCheck(definitions, parameters, obj, undefined_ok = False):
    """Check keyword parameters against a definition dict and attach them to obj

    Definition values:

    ::

        "tunnel_c" : (int, 3)        optional int, defaults to 3
        "capacity" : int             mandatory int
        "level"    : checkLevel      mandatory, checked by a function returning bool
        "counters" : None            optional, anything goes, defaults to None

    Raises AttributeError on unknown, missing or mistyped parameters.
    """
    for key, value in parameters.items():
        if key not in definitions:
            if undefined_ok:
                continue
            raise AttributeError("unknown parameter %s" % (key))
        definition = definitions[key]
        if isinstance(definition, tuple):
            checkType_(key, value, definition[0])
        elif isinstance(definition, types.FunctionType):
            if not definition(value):
                raise AttributeError("checking of parameter %s = %r failed" % (key, value))
        elif isinstance(definition, type):
            checkType_(key, value, definition)
        elif definition is not None:
            raise AttributeError("bad definition for parameter %s : %r" % (key, definition))
        setattr(obj, key, value)

    for key, definition in definitions.items():
        if key in parameters:
            continue
        if isinstance(definition, tuple):
            setattr(obj, key, definition[1])
        elif definition is None:
            setattr(obj, key, None)
        else:
            raise AttributeError("missing mandatory parameter %s" % (key))


def isInt64(value):
    return (isinstance(value, int) and not isinstance(value, bool)
            and constant.int64_min <= value <= constant.int64_max)


def iteratedLog2Depth(n, limit = 2.0):
    """How many times log2 must be applied to n before the value drops to limit or below
    """
    count = 0
    value = float(n)
    while value > limit:
        value = math.log2(value)
        count += 1
    return count
