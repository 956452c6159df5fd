"""
UlrichForge - Sweep Service
Runs verification and dimension comparison over a grid of configurations with
per-task seeds, and writes a polars CSV plus a JSON summary.

CSV columns (fixed order): see COLUMNS. status is one of
pass / fail / unknown / skipped; skipped rows are configurations outside the
admissible k-range and carry no verdict.
"""
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional, Sequence, Tuple

import polars as pl
from pydantic import BaseModel, Field

from config import settings
from schemas.field import FieldSpec
from schemas.presentation import ScrollConfig
from schemas.reports import SweepSummary
from services.moduli import compare
from services.presentation import k_range, validate_config
from services.scroll import slope_report
from services.verifier import verify_config
from utils.canonical import canonical_json
from utils.errors import ConfigError, UnsupportedError
from utils.seeding import task_seed

logger = logging.getLogger(__name__)

COLUMNS = {
    "index": pl.Int64,
    "e": pl.Int64,
    "b": pl.Int64,
    "k": pl.Int64,
    "r": pl.Int64,
    "seed": pl.Int64,
    "status": pl.Utf8,
    "locally_free": pl.Utf8,
    "ulrich": pl.Boolean,
    "hom": pl.Int64,
    "ext1": pl.Int64,
    "ext2": pl.Int64,
    "oracle_dim": pl.Int64,
    "paper_dim": pl.Int64,
    "dim_agree": pl.Boolean,
    "slope_match": pl.Boolean,
    "attempts": pl.Int64,
    "fingerprint": pl.Utf8,
}


class GridSpec(BaseModel):
    e_values: List[int] = Field(default_factory=lambda: [0, 1, 2])
    b_offsets: Tuple[int, int] = (2, 8)  # b runs over 3e + lo .. 3e + hi
    k_values: Optional[List[int]] = None  # None = every admissible k
    r_values: List[int] = Field(default_factory=lambda: [2, 3, 4, 5, 6])
    seeds_per_config: int = Field(default=3, ge=1)
    with_ext: bool = True


def grid_configs(grid: GridSpec) -> List[Tuple[int, int, int, int]]:
    """(e, b, k, r) in deterministic grid order, admissible or not."""
    out = []
    lo_off, hi_off = grid.b_offsets
    for e in grid.e_values:
        for b in range(3 * e + lo_off, 3 * e + hi_off + 1):
            if grid.k_values is None:
                lo, hi = k_range(e, b)
                ks = list(range(lo, hi + 1))
            else:
                ks = grid.k_values
            for k in ks:
                for r in grid.r_values:
                    out.append((e, b, k, r))
    return out


def _empty_row(index: int, cfg: tuple, seed: int, status: str) -> dict:
    row = {name: None for name in COLUMNS}
    row.update(index=index, e=cfg[0], b=cfg[1], k=cfg[2], r=cfg[3], seed=seed, status=status)
    return row


def run_task(task: tuple) -> Tuple[dict, Optional[str]]:
    """One (config, seed) task; returns the CSV row and the canonical report JSON."""
    index, cfg, seed, field_text, with_ext = task
    try:
        validate_config(*cfg)
    except ConfigError:
        return _empty_row(index, cfg, seed, "skipped"), None
    config = ScrollConfig(e=cfg[0], b=cfg[1], k=cfg[2], r=cfg[3])
    field = FieldSpec.parse(field_text)
    try:
        report = verify_config(config, seed=seed, field=field, with_ext=with_ext)
        dim = compare(config)
        slopes = slope_report(config)
    except UnsupportedError as exc:
        logger.warning("[SWEEP] task %s unsupported: %s", index, exc)
        return _empty_row(index, cfg, seed, "unknown"), None

    ext = report.ext
    dim_ok = dim.agree and (ext is None or ext.ext1 == dim.oracle_dim)
    ok = report.passed and dim_ok and slopes.slope_match
    row = _empty_row(index, cfg, seed, "pass" if ok else "fail")
    row.update(
        locally_free=report.locally_free.status,
        ulrich=report.ulrich,
        hom=ext.hom if ext else None,
        ext1=ext.ext1 if ext else None,
        ext2=ext.ext2 if ext else None,
        oracle_dim=dim.oracle_dim,
        paper_dim=dim.paper_dim,
        dim_agree=dim_ok,
        slope_match=slopes.slope_match,
        attempts=len(report.attempts),
        fingerprint=report.fingerprint,
    )
    logger.info("[SWEEP] task %s %s -> %s", index, cfg, row["status"])
    return row, canonical_json(report)


def build_tasks(grid: GridSpec, master_seed: int, field: FieldSpec) -> list:
    tasks = []
    index = 0
    for cfg in grid_configs(grid):
        for _ in range(grid.seeds_per_config):
            tasks.append((index, cfg, task_seed(master_seed, index), field.tag(), grid.with_ext))
            index += 1
    return tasks


def rows_frame(rows: Sequence[dict]) -> pl.DataFrame:
    return pl.DataFrame({name: [row[name] for row in rows] for name in COLUMNS}, schema=COLUMNS)


def run_sweep(grid: GridSpec = None, master_seed: int = None, field: FieldSpec = None,
              workers: int = None, csv_path: str = None, reports_dir: str = None) -> SweepSummary:
    grid = grid or GridSpec()
    master_seed = settings.ULRICH_DEFAULT_SEED if master_seed is None else master_seed
    field = field or FieldSpec.parse(settings.ULRICH_DEFAULT_FIELD)
    workers = settings.ULRICH_SWEEP_WORKERS if workers is None else workers
    tasks = build_tasks(grid, master_seed, field)

    if workers and workers > 1:
        # map preserves submission order
        with ProcessPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(run_task, tasks, chunksize=4))
    else:
        results = [run_task(t) for t in tasks]

    rows = [row for row, _ in results]
    if csv_path:
        rows_frame(rows).write_csv(csv_path)
    if reports_dir:
        os.makedirs(reports_dir, exist_ok=True)
        for row, payload in results:
            if payload is not None:
                with open(os.path.join(reports_dir, f"task_{row['index']:05d}.json"), "w") as fh:
                    fh.write(payload)

    statuses = [row["status"] for row in rows]
    summary = SweepSummary(
        master_seed=master_seed,
        field=field.tag(),
        total=len(rows),
        passed=statuses.count("pass"),
        failed=statuses.count("fail"),
        unknown=statuses.count("unknown"),
        skipped=statuses.count("skipped"),
        resampled=sum(1 for row in rows if (row["attempts"] or 0) > 1),
        csv_path=csv_path,
    )
    logger.info("[SWEEP] %s", summary.model_dump())
    return summary
