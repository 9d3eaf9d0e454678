"""
main.py : Command-line entry point: verify, bench and stats

Copyright 2026 The funnelq developers

This file is part of funnelq, an addressable multi-level priority queue

funnelq is free software: you can redistribute it and/or modify it under the terms of the GNU Affero General Public License as published by the Free Software Foundation, either version 3 of the License, or (at your option) any later version.

This program is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU Affero General Public License for more details.

You should have received a copy of the GNU Affero General Public License along with this program.  If not, see <https://www.gnu.org/licenses/>

@file    main.py
@author  The funnelq developers
@date    2026
@version 0.1.0
@brief   Command-line entry point: verify, bench and stats
"""

import os
import sys
import logging
import argparse

from funnelq.pq import constant, default, version
from funnelq.pq.exception import ConfigurationError
from funnelq.pq.tools import getLogger, setLogger
from funnelq.harness.local import FunnelLocalDir
from funnelq.harness.workload import WorkloadSpec

logger = getLogger(__name__)

commands = ("verify", "bench", "stats")


def str2bool(v):
    return v.lower() in ("yes", "true", "t", "1")


def parse_sizes(v):
    try:
        return [int(part) for part in v.split(",") if part.strip()]
    except ValueError:
        raise ConfigurationError("sizes must be a comma-separated list of integers, got %r" % (v,))


def process_cl_args(argv = None):
    parser = argparse.ArgumentParser("run-funnelq")
    parser.register('type', 'bool', str2bool)

    parser.add_argument("command", action="store", type=str, choices=commands,
        help="verify: replay against the oracle, bench: write op counts to csv, stats: per-level report")

    # every flag defaults to None: the value is resolved later from the environment or the defaults
    parser.add_argument("--alpha", action="store", type=int, default=None,
        help="number of levels")
    parser.add_argument("--capacity", action="store", type=int, default=None,
        help="maximum number of items (bench sizes each cell by itself)")
    parser.add_argument("--ops", action="store", type=int, default=None,
        help="number of ops in the workload")
    parser.add_argument("--seed", action="store", type=int, default=None,
        help="seed of the PCG64 generator")
    parser.add_argument("--workload", action="store", type=str, default=None,
        help="one of %s" % (", ".join(default.mixes.keys())))
    parser.add_argument("--keys", action="store", type=str, default=None,
        help="uniform64, ascending, descending or clustered")
    parser.add_argument("--sizes", action="store", type=str, default=None,
        help="bench: comma-separated ascending queue sizes")
    parser.add_argument("--csv", action="store", type=str, default=None,
        help="bench: output file (default: under ~/.funnelq/bench)")
    parser.add_argument("--tolerance", action="store", type=int, default=None,
        help="allowed deviation from the optimal number of common-heaps")
    parser.add_argument("--tunnel-c", action="store", type=int, default=None,
        help="tunneling barrier is 2**c")
    parser.add_argument("--log-base", action="store", type=str, default=None,
        help="mixed, binary or natural")
    parser.add_argument("--w0-strategy", action="store", type=str, default=None,
        help="always-compute, memoized or precomputed-table")
    parser.add_argument("--scan-every", action="store", type=int, default=None,
        help="verify: full invariant scan every this many ops (0 = only at the end)")
    parser.add_argument("--workers", action="store", type=int, default=None,
        help="bench: number of worker processes")
    parser.add_argument("--verbose", action="store", type="bool", default=None,
        help="debug logging")
    parser.add_argument("--version", action="version",
        version=constant.program_info % (version.get(), version.getNumpy()))

    return parser, parser.parse_args(argv)


class Resolver:
    """Value of a flag: command line > FUNNELQ_<FLAG> environment variable > default
    """

    def __init__(self, parsed_args, environ = None):
        self.parsed_args = parsed_args
        self.environ = os.environ if environ is None else environ

    def __call__(self, flag, cast, fallback):
        value = getattr(self.parsed_args, flag.replace("-", "_"))
        if value is not None:
            return value
        env_name = constant.env_prefix + flag.replace("-", "_").upper()
        if env_name in self.environ:
            try:
                return cast(self.environ[env_name])
            except ValueError:
                raise ConfigurationError("could not parse %s=%r" % (env_name, self.environ[env_name]))
        return fallback


def make_configs(parsed_args, environ = None):
    """Resolve all flags into (queue_config, spec_config, harness_config)
    """
    resolve = Resolver(parsed_args, environ)
    queue_config = default.get_queue_config()
    workload_config = default.get_workload_config()

    queue_config["alpha"] = resolve("alpha", int, queue_config["alpha"])
    queue_config["capacity"] = resolve("capacity", int, queue_config["capacity"])
    queue_config["grow_tolerance"] = resolve("tolerance", int, queue_config["grow_tolerance"])
    queue_config["tunnel_c"] = resolve("tunnel-c", int, queue_config["tunnel_c"])
    queue_config["log_base"] = resolve("log-base", str, queue_config["log_base"])
    queue_config["eval_strategy"] = resolve("w0-strategy", str, queue_config["eval_strategy"])

    spec_config = {
        "kind"     : resolve("workload", str, workload_config["workload"]),
        "keys"     : resolve("keys", str, workload_config["keys"]),
        "op_count" : resolve("ops", int, workload_config["ops"]),
        "seed"     : resolve("seed", int, workload_config["seed"])
        }

    sizes = resolve("sizes", parse_sizes, None)
    if isinstance(sizes, str):
        sizes = parse_sizes(sizes)
    harness_config = {
        "sizes"      : workload_config["sizes"] if sizes is None else sizes,
        "csv"        : resolve("csv", str, None),
        "scan_every" : resolve("scan-every", int, workload_config["scan_every"]),
        "workers"    : resolve("workers", int, workload_config["workers"]),
        "verbose"    : resolve("verbose", str2bool, False)
        }
    return queue_config, spec_config, harness_config


def default_csv_path(spec_config):
    bench_dir = FunnelLocalDir("bench")
    return bench_dir.getFile("bench-%s-%s-seed%i.csv" % (spec_config["kind"], spec_config["keys"], spec_config["seed"]))


def main(argv = None):
    version.check()
    parser, parsed_args = process_cl_args(argv)
    try:
        queue_config, spec_config, harness_config = make_configs(parsed_args)
        if harness_config["verbose"]:
            setLogger(logging.getLogger(), logging.DEBUG)
        # validate early, so that a bad flag is a usage error and not a failed run
        spec = WorkloadSpec(**spec_config)
    except ConfigurationError as e:
        parser.error(str(e))

    try:
        if parsed_args.command == "verify":
            from funnelq.harness.verify import cmd_verify
            return cmd_verify(spec, queue_config, scan_every = harness_config["scan_every"])
        if parsed_args.command == "bench":
            from funnelq.harness.bench import cmd_bench
            csv_path = harness_config["csv"]
            if csv_path is None:
                csv_path = default_csv_path(spec_config)
            return cmd_bench(spec_config, queue_config, harness_config["sizes"], csv_path,
                             workers = harness_config["workers"])
        from funnelq.harness.stats import cmd_stats
        return cmd_stats(spec_config, queue_config)
    except ConfigurationError as e:
        parser.error(str(e))


if (__name__ == "__main__"):
    sys.exit(main())
