"""Benchmark cells and their csv output
"""
import csv

import pytest

from funnelq.pq import constant, default
from funnelq.pq.exception import ConfigurationError
from funnelq.harness.bench import bench_cell, write_csv, cmd_bench
from funnelq.harness.multiprocess import run_cells, MessageObject


def spec_config(**kwargs):
    config = {"kind": "mixed", "keys": "uniform64", "op_count": 1000, "seed": 1}
    config.update(kwargs)
    return config


def mean_comparisons(rows, op = None):
    invocations = 0
    comparisons = 0.0
    for row in rows:
        if op is None or row[1] == op:
            invocations += row[2]
            comparisons += float(row[3]) * row[2]
    return comparisons / invocations


def test_bench_cell_rows():
    rows = bench_cell(default.get_queue_config(), spec_config(), 256)
    ops = [row[1] for row in rows]
    assert ops == sorted(ops)
    assert set(ops) <= {"insert", "extract_max", "remove", "increase_key", "decrease_key", "search"}
    # the build phase is not counted
    assert sum(row[2] for row in rows) == 1000
    for row in rows:
        assert row[0] == 256
        assert len(row) == len(constant.csv_header)


def test_bench_cell_is_deterministic():
    config = default.get_queue_config()
    assert bench_cell(config, spec_config(seed = 3), 128) == bench_cell(config, spec_config(seed = 3), 128)


def test_write_csv(tmp_path):
    path = tmp_path / "bench.csv"
    rows = bench_cell(default.get_queue_config(), spec_config(op_count = 200), 64)
    write_csv(str(path), rows)
    data = path.read_bytes()
    assert b"\r\n" not in data
    lines = data.decode("utf-8").split("\n")
    assert lines[0] == ",".join(constant.csv_header)
    assert lines[-1] == ""
    with open(str(path), newline = "", encoding = "utf-8") as f:
        parsed = list(csv.reader(f))
    assert len(parsed) == len(rows) + 1


def test_cmd_bench(tmp_path, capsys):
    path = tmp_path / "out.csv"
    status = cmd_bench(spec_config(op_count = 300), default.get_queue_config(), [32, 64], str(path))
    assert status == constant.exit_ok
    with open(str(path), newline = "", encoding = "utf-8") as f:
        parsed = list(csv.reader(f))
    sizes = [int(row[0]) for row in parsed[1:]]
    # rows come in size order
    assert sizes == sorted(sizes)
    assert set(sizes) == {32, 64}
    assert "wrote" in capsys.readouterr().out


def test_cmd_bench_errors(tmp_path):
    config = default.get_queue_config()
    with pytest.raises(ConfigurationError):
        cmd_bench(spec_config(), config, [64, 32], str(tmp_path / "x.csv"))
    with pytest.raises(ConfigurationError):
        cmd_bench(spec_config(), config, [], str(tmp_path / "x.csv"))
    status = cmd_bench(spec_config(op_count = 50), config, [16], str(tmp_path / "missing" / "x.csv"))
    assert status == constant.exit_io


def test_run_cells_keeps_cell_order():
    cells = [{"queue_config": default.get_queue_config(), "spec_config": spec_config(op_count = 200), "n": n}
             for n in (256, 16, 64)]
    serial = run_cells(bench_cell, cells, 1)
    parallel = run_cells(bench_cell, cells, 2)
    assert parallel == serial
    assert [rows[0][0] for rows in parallel] == [256, 16, 64]


def test_message_object():
    message = MessageObject("runCell", index = 2, kwargs = {})
    assert message.command == "runCell"
    assert message["index"] == 2
    assert "runCell" in str(message)


def test_comparisons_stay_flat():
    config = default.get_queue_config()
    small = bench_cell(config, spec_config(op_count = 3000), 1 << 10)
    large = bench_cell(config, spec_config(op_count = 3000), 1 << 14)
    assert mean_comparisons(large) <= 3 * mean_comparisons(small)
    for op in ("insert", "search", "remove", "increase_key", "decrease_key", "extract_max"):
        assert mean_comparisons(large, op) <= 3 * mean_comparisons(small, op), op
