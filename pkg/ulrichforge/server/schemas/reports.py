"""
UlrichForge - Pydantic Schemas for verification, dimension and scroll reports
"""
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field

from schemas.lattice import CohTable
from schemas.presentation import ScrollConfig


# --- Surface verification ---
class LocalFreeVerdict(BaseModel):
    status: str  # "certified" or "failed"
    trials: int
    point: Optional[Tuple[int, int, int, int]] = None  # first failing point
    rank: Optional[int] = None  # rank at the failing point
    expected_rank: int


class MatrixSummary(BaseModel):
    name: str
    rows: int
    cols: int
    rank: int


class ExtDims(BaseModel):
    hom: int
    ext1: int
    ext2: int
    hom_ab: int
    end_a: int
    end_b: int
    rank_end_a: int
    rank_rho: int


class Attempt(BaseModel):
    seed: int
    locally_free: str
    ulrich: bool
    hom: Optional[int] = None
    reason: Optional[str] = None


class VerificationReport(BaseModel):
    config: ScrollConfig
    seed: Optional[int]
    field: str
    alpha: int
    beta: int
    gamma: int
    delta: int
    tau: int
    locally_free: LocalFreeVerdict
    ulrich: bool
    tables: Dict[str, CohTable]
    h2_map_square: bool
    euler_ok: bool
    c1: Tuple[int, int]
    c1_match: bool
    c1_degree_match: bool
    c2_value: int
    c2_consistent: bool
    h0: int
    h0_expected: int
    h0_match: bool
    ext: Optional[ExtDims] = None
    simple: Optional[bool] = None
    matrices: List[MatrixSummary] = Field(default_factory=list)
    attempts: List[Attempt] = Field(default_factory=list)
    timings_ms: Optional[Dict[str, int]] = None
    fingerprint: Optional[str] = None

    @property
    def passed(self) -> bool:
        ok = (self.locally_free.status == "certified" and self.ulrich and self.c1_match
              and self.h0_match and self.c2_consistent)
        if self.ext is not None:
            ok = ok and self.ext.hom == 1 and self.ext.ext2 == 0
        return ok


class LineSearchResult(BaseModel):
    e: int
    b: int
    box: int
    classes: List[Tuple[int, int]]
    expected: List[Tuple[int, int]]
    match: bool


# --- Moduli ---
class DimensionReport(BaseModel):
    config: ScrollConfig
    hom_ab: int
    end_a: int
    end_b: int
    oracle_dim: int
    paper_dim: int
    paper_dim_printed: int
    printed_agrees: bool
    ext1_sampled: Optional[int] = None
    hom_sampled: Optional[int] = None
    agree: bool
    fingerprint: Optional[str] = None


# --- Scroll ---
class ScrollTable(BaseModel):
    """h^0..h^3 on X_e; exact when lo == hi in every degree."""
    lo: Tuple[int, int, int, int]
    hi: Tuple[int, int, int, int]
    chi: int
    exact: bool

    @property
    def is_zero(self) -> bool:
        return self.exact and not any(self.hi)

    @property
    def provably_nonzero(self) -> bool:
        return self.chi != 0 or any(self.lo)


class CandidateVerdict(BaseModel):
    name: str
    m: int
    l_class: Tuple[int, int]
    b: int
    k: int
    t: Optional[int] = None
    ulrich: Optional[bool]  # None = UNKNOWN
    exact: bool
    tables: Dict[str, ScrollTable]
    split_dependent: bool = False


class MainTheoremAReport(BaseModel):
    e: int
    t_max: int
    candidates: List[CandidateVerdict]
    expected_ulrich: bool
    passed: bool
    unknown: int
    contradicted: int = 0


class SlopeReport(BaseModel):
    config: ScrollConfig
    c1_xi: int
    c1_pullback: Tuple[int, int]
    slope: str
    slope_closed_form: int
    slope_match: bool
    xi_cubed: int
    c1_matches_printed: bool
    special: Optional[bool] = None


# --- Sweep ---
class SweepSummary(BaseModel):
    master_seed: int
    field: str
    total: int
    passed: int
    failed: int
    unknown: int
    skipped: int
    resampled: int
    csv_path: Optional[str] = None
