"""
multiprocess.py : Worker processes running benchmark cells

Copyright 2026 The funnelq developers

This file is part of funnelq, an addressable multi-level priority queue

funnelq is free software: you can redistribute it and/or modify it under the terms of the GNU Affero General Public License as published by the Free Software Foundation, either version 3 of the License, or (at your option) any later version.

This program is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU Affero General Public License for more details.

You should have received a copy of the GNU Affero General Public License along with this program.  If not, see <https://www.gnu.org/licenses/>

@file    multiprocess.py
@author  The funnelq developers
@date    2026
@version 0.1.0
@brief   Worker processes running benchmark cells
"""

from multiprocessing import Process, Pipe
import select
import errno
import logging

from funnelq.pq.tools import getLogger, setLogger

logger = getLogger(__name__)


class MessageObject:

    def __init__(self, command, **kwargs):
        self.command = command
        self.kwargs = kwargs

    def __str__(self):
        return "<MessageObject: %s: %s>" % (self.command, self.kwargs)

    def __getitem__(self, key):
        return self.kwargs[key]


def safe_select(l1, l2, l3, timeout = None):
    try:
        if timeout is None:
            res = select.select(l1, l2, l3) # blocks
        else:
            res = select.select(l1, l2, l3, timeout) # timeout 0 is just a poll
    except (OSError, select.error) as e:
        if e.errno != errno.EINTR:
            raise
        else: # EINTR doesn't matter
            return [[], [], []]
    else:
        return res


class CellProcess(Process):
    """A worker process running benchmark cells on request

    ::

        self.front_pipe : the frontend writes commands / reads results
        self.back_pipe  : the worker reads commands / writes results

        - The worker expects MessageObject instances from self.back_pipe
        - MessageObject("runCell", ..) is mapped into self.c__runCell(..)
        - None stops the worker

    cell_function is called in the worker as cell_function(**kwargs) and
    must be picklable, i.e. a module-level function.
    """

    timeout = 1.0

    def __init__(self, cell_function, name = "CellProcess"):
        self.name_ = name
        self.pre = self.__class__.__name__ + "." + self.name_
        self.logger = getLogger(self.pre)
        super().__init__()
        self.cell_function = cell_function
        self.front_pipe, self.back_pipe = Pipe()
        self.loop = True

    def __str__(self):
        return "<" + self.pre + ">"

    def setDebug(self):
        setLogger(self.logger, logging.DEBUG)

    # **** backend methods that correspond to incoming commands ****

    def c__runCell(self, index, kwargs):
        self.logger.debug("c__runCell : cell %i", index)
        try:
            rows = self.cell_function(**kwargs)
        except Exception as e:
            self.logger.warning("c__runCell : cell %i failed: %s", index, e)
            self.send_out__(MessageObject("cellFailed", index = index, error = repr(e)))
        else:
            self.send_out__(MessageObject("cellDone", index = index, rows = rows))

    # **** backend ****

    def run(self):
        while self.loop:
            self.readPipes__(timeout = self.timeout)
        self.logger.debug("bye!")

    def readPipes__(self, timeout):
        r, w, e = safe_select([self.back_pipe], [], [], timeout = timeout)
        if self.back_pipe in r:
            obj = self.back_pipe.recv()
            self.routeMainPipe__(obj)

    def routeMainPipe__(self, obj):
        """Object from main pipe: obj.command, obj.kwargs => c__command(**kwargs)
        """
        if obj is None:
            self.loop = False
            return
        method_name = "c__%s" % (obj.command)
        if hasattr(self, method_name):
            method = getattr(self, method_name)
            try:
                method(**obj.kwargs)
            except TypeError:
                self.logger.warning("routeMainPipe : could not call method %s with parameters %s" % (method_name, obj.kwargs))
                raise
        else:
            self.logger.warning("routeMainPipe : no such method %s" % (method_name))

    def send_out__(self, obj):
        self.back_pipe.send(obj)

    # **** frontend ****

    def sendMessageToBack(self, message):
        self.front_pipe.send(message)

    def readResult(self):
        return self.front_pipe.recv()

    def go(self):
        self.start()

    def requestStop(self):
        self.sendMessageToBack(None)

    def waitStop(self):
        self.join()

    def stop(self):
        self.requestStop()
        self.waitStop()


def run_cells(cell_function, cells, workers):
    """Run cell_function(**kwargs) for every kwargs in cells over worker processes

    Results are returned in cell order, whatever the completion order.
    """
    if workers < 2 or len(cells) < 2:
        return [cell_function(**kwargs) for kwargs in cells]
    processes = [CellProcess(cell_function, name = str(i)) for i in range(min(workers, len(cells)))]
    for process in processes:
        process.go()
    results = [None] * len(cells)
    pending = list(enumerate(cells))
    busy = {}
    try:
        for process in processes:
            if pending:
                index, kwargs = pending.pop(0)
                process.sendMessageToBack(MessageObject("runCell", index = index, kwargs = kwargs))
                busy[process.front_pipe] = process
        while busy:
            r, w, e = safe_select(list(busy.keys()), [], [])
            for pipe in r:
                process = busy.pop(pipe)
                obj = process.readResult()
                if obj.command == "cellFailed":
                    raise RuntimeError("cell %i failed in %s: %s" % (obj["index"], process, obj["error"]))
                results[obj["index"]] = obj["rows"]
                logger.debug("run_cells : cell %i done by %s", obj["index"], process)
                if pending:
                    index, kwargs = pending.pop(0)
                    process.sendMessageToBack(MessageObject("runCell", index = index, kwargs = kwargs))
                    busy[process.front_pipe] = process
    finally:
        for process in processes:
            process.stop()
    return results
