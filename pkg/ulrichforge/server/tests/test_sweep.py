"""
Tests for grid sweeps: ordering, skipped configurations and deterministic CSV output.
"""
import json
import os

import polars as pl

from schemas.field import FieldSpec
from services.sweep import COLUMNS, GridSpec, build_tasks, grid_configs, run_sweep


def small_grid(**kw):
    base = dict(e_values=[0], b_offsets=(2, 2), r_values=[2], seeds_per_config=1, with_ext=False)
    base.update(kw)
    return GridSpec(**base)


def test_default_grid_order():
    configs = grid_configs(GridSpec())
    assert configs[0] == (0, 2, 3, 2)
    assert all(b >= 3 * e + 2 for e, b, _, _ in configs)


def test_task_seeds_depend_on_index():
    tasks = build_tasks(small_grid(seeds_per_config=3), 42, FieldSpec())
    assert [t[0] for t in tasks] == [0, 1, 2]
    assert len({t[2] for t in tasks}) == 3


def test_invalid_configs_are_skipped(tmp_path):
    csv = tmp_path / "sweep.csv"
    summary = run_sweep(small_grid(k_values=[2, 3]), master_seed=42, csv_path=str(csv), workers=0)
    assert summary.total == 2
    assert summary.skipped == 1
    assert summary.failed == 0
    assert summary.passed == 1
    frame = pl.read_csv(csv)
    assert frame.columns == list(COLUMNS)
    assert frame["status"].to_list() == ["skipped", "pass"]


def test_repeated_sweep_is_byte_identical(tmp_path):
    paths = []
    for name in ("one.csv", "two.csv"):
        path = tmp_path / name
        run_sweep(small_grid(seeds_per_config=2), master_seed=7, csv_path=str(path), workers=0)
        paths.append(path)
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_reports_directory(tmp_path):
    out = tmp_path / "reports"
    run_sweep(small_grid(), master_seed=1, reports_dir=str(out), workers=0)
    files = sorted(os.listdir(out))
    assert files == ["task_00000.json"]
    body = json.loads((out / files[0]).read_text())
    assert body["ulrich"] is True
    assert body["fingerprint"]
