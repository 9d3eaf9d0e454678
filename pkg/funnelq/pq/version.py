"""
version.py : Handle program version numbers

Copyright 2026 The funnelq developers

This file is part of funnelq, an addressable multi-level priority queue

funnelq is free software: you can redistribute it and/or modify it under the terms of the GNU Affero General Public License as published by the Free Software Foundation, either version 3 of the License, or (at your option) any later version.

This program is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU Affero General Public License for more details.

You should have received a copy of the GNU Affero General Public License along with this program.  If not, see <https://www.gnu.org/licenses/>

@file    version.py
@author  The funnelq developers
@date    2026
@version 0.1.0
@brief   Handle program version numbers
"""
import numpy

# keep in sync with setup.py
VERSION_MAJOR=0
VERSION_MINOR=1
VERSION_PATCH=0

version_tag = "%i.%i.%i" % (VERSION_MAJOR, VERSION_MINOR, VERSION_PATCH)

# oldest numpy with the Generator / PCG64 api
MIN_NUMPY_VERSION_MAJOR = 1
MIN_NUMPY_VERSION_MINOR = 17


def check():
    """Raise SystemExit if the installed numpy is too old for the seeded workloads
    """
    major, minor = (int(part) for part in numpy.__version__.split(".")[:2])
    if (major, minor) < (MIN_NUMPY_VERSION_MAJOR, MIN_NUMPY_VERSION_MINOR):
        from funnelq.pq import constant
        print(constant.numpy_too_old % (MIN_NUMPY_VERSION_MAJOR,
                                        MIN_NUMPY_VERSION_MINOR,
                                        numpy.__version__))
        raise SystemExit(1)


def get():
    return version_tag


def getNumpy():
    return numpy.__version__
