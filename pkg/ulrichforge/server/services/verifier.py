"""
UlrichForge - Verifier Service
Certifies that coker(phi) is a locally free, Ulrich, simple bundle on F_e.

Cohomology of H = coker(phi) comes from the long exact sequence of
0 -> A -> B -> H -> 0 twisted by -jH_pol. For j = 1 every twisted summand has
zero cohomology; for j = 2 only H^2 survives on both sides, and the map
H^2(A') -> H^2(B') is the transpose of multiplication by the entries of phi
between the Serre-dual spaces H^0(K - B') -> H^0(K - A').
"""
import logging
import time
from typing import Dict, List, Optional, Tuple

import numpy as np

from config import settings
from schemas.field import FieldSpec
from schemas.lattice import CohTable, DivisorClass
from schemas.presentation import Presentation, ScrollConfig
from schemas.reports import (
    Attempt, ExtDims, LineSearchResult, LocalFreeVerdict, MatrixSummary, VerificationReport,
)
from services import lattice
from services.cohomology import is_ulrich_line_bundle, line_bundle_cohomology
from services.cox import Form, monomial_basis, multiplication_matrix, sample_torus_point
from services.presentation import FormMatrix, build_presentation, sample_phi
from services.xla import ExactMatrix, rank
from utils.canonical import fingerprint
from utils.errors import InternalConsistencyError, UnsupportedError
from utils.seeding import make_rng, stream_rng

logger = logging.getLogger(__name__)

# torus points drawn without a caller rng use this stream, apart from the draws of phi
TORUS_STREAM = 1


# ===== LOCAL FREENESS =====

def certify_locally_free(phi: FormMatrix, trials: int = None, rng: np.random.Generator = None) -> LocalFreeVerdict:
    """phi(x) must have rank gamma at every sampled torus point x."""
    trials = settings.ULRICH_LOCAL_FREE_TRIALS if trials is None else trials
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if rng is None:
        rng = stream_rng(0 if phi.seed is None else phi.seed, TORUS_STREAM)
    gamma = phi.presentation.gamma
    for _ in range(trials):
        point = sample_torus_point(phi.field, rng)
        rk = rank(phi.at_point(point))
        if rk < gamma:
            logger.info("[LOCALLY_FREE] rank %s < %s at %s", rk, gamma, point)
            return LocalFreeVerdict(status="failed", trials=trials, point=point, rank=rk,
                                    expected_rank=gamma)
    return LocalFreeVerdict(status="certified", trials=trials, expected_rank=gamma)


# ===== TWISTED COHOMOLOGY =====

def _twisted_blocks(p: Presentation, j: int) -> Tuple[DivisorClass, List[DivisorClass]]:
    twist = lattice.polarization(p.config.e, p.config.b) * j
    return p.block_a - twist, [deg - twist for deg, _ in p.block_b]


def _guard_zero(degrees: List[DivisorClass], degrees_of: Tuple[int, ...], what: str) -> None:
    for d in degrees:
        table = line_bundle_cohomology(d)
        for i in degrees_of:
            if table.as_tuple()[i] != 0:
                raise InternalConsistencyError(
                    f"structural vanishing failed for {what}: h^{i}{d.pair()} = {table.as_tuple()[i]}"
                )


def h2_map(phi: FormMatrix, j: int = 2) -> ExactMatrix:
    """
    The map H^2(A(-jH)) -> H^2(B(-jH)), realized as the transpose of the
    Serre-dual multiplication H^0(K - B(-jH)) -> H^0(K - A(-jH)).
    """
    p = phi.presentation
    k = lattice.canonical_class(p.config.e)
    a_tw, _ = _twisted_blocks(p, j)
    dual_a = k - a_tw
    dual_b = [k - (deg - lattice.polarization(p.config.e, p.config.b) * j) for deg in p.b_degrees]
    for d in [dual_a] + dual_b:
        if d.a < 0:
            raise UnsupportedError(f"Serre dual degree {d.pair()} has negative C-coefficient")
    grid = []
    for col in range(p.gamma):
        grid.append([multiplication_matrix(phi.entries[i][col], dual_b[i]) for i in range(len(dual_b))])
    dual = ExactMatrix.blocks(grid, phi.field)
    return dual.T


def h0_map(phi: FormMatrix) -> ExactMatrix:
    """H^0(A) -> H^0(B); block (i, j) multiplies by phi_ij."""
    p = phi.presentation
    grid = []
    for i in range(len(phi.entries)):
        grid.append([multiplication_matrix(phi.entries[i][col], p.block_a) for col in range(p.gamma)])
    return ExactMatrix.blocks(grid, phi.field)


def _chi_difference(p: Presentation, j: int) -> int:
    a_tw, b_tw = _twisted_blocks(p, j)
    chi_b = sum(mult * lattice.euler_char(d) for d, (_, mult) in zip(b_tw, p.block_b))
    return chi_b - p.gamma * lattice.euler_char(a_tw)


def twisted_cohomology_of_coker(phi: FormMatrix, j: int, _ranks: Optional[dict] = None) -> CohTable:
    p = phi.presentation
    if j not in (1, 2):
        raise UnsupportedError(f"twist j={j} is not supported (j must be 1 or 2)")
    a_tw, b_tw = _twisted_blocks(p, j)
    if j == 1:
        _guard_zero([a_tw] + b_tw, (0, 1, 2), "j=1 twist")
        chi = _chi_difference(p, 1)
        if chi != 0:
            raise InternalConsistencyError(f"j=1 Euler characteristic {chi} != 0")
        return CohTable(h0=0, h1=0, h2=0, chi=0)
    _guard_zero([a_tw] + b_tw, (0, 1), "j=2 twist")
    mat = h2_map(phi, 2)
    rk = rank(mat)
    if _ranks is not None:
        _ranks["h2_map"] = MatrixSummary(name="h2_map_j2", rows=mat.rows, cols=mat.cols, rank=rk)
    h1 = mat.cols - rk
    h2 = mat.rows - rk
    return CohTable(h0=0, h1=h1, h2=h2, chi=h2 - h1)


def h2_map_is_square(p: Presentation) -> bool:
    e, b = p.config.e, p.config.b
    return p.gamma * (3 * b - 3 * e) == p.delta * (3 * b - 3 * e - 3) + p.tau * (2 * b - 3 * e)


# ===== EXT GROUPS =====

def _structural_ext_guards(p: Presentation) -> None:
    a = p.block_a
    b1, b2 = p.block_b[0][0], p.block_b[1][0]
    _guard_zero([a - b1, a - b2], (0, 1, 2), "B^v (x) A")
    _guard_zero([b1 - b1, b2 - b1, b1 - b2], (1, 2), "B^v (x) B")
    _guard_zero([b1 - a, b2 - a], (1, 2), "A^v (x) B")
    _guard_zero([a - a], (1, 2), "A^v (x) A")


def coefficient_matrix(phi: FormMatrix) -> ExactMatrix:
    """One column per column of phi: its entries' coefficient vectors, stacked by row."""
    cols = []
    for col in range(phi.presentation.gamma):
        vec = []
        for row in phi.entries:
            vec.extend(row[col].coefficients())
        cols.append(vec)
    return ExactMatrix.from_rows(list(zip(*cols)), phi.field)


def _end_a_columns(phi: FormMatrix, offsets: Dict[Tuple[int, int], int], sizes: List[int],
                   hom_ab: int) -> List[list]:
    """phi o End(A): the unit E_{kj} moves column k of phi into column j."""
    gamma = phi.presentation.gamma
    out = []
    for kk in range(gamma):
        for jj in range(gamma):
            vec = [0] * hom_ab
            for i, row in enumerate(phi.entries):
                start = offsets[(i, jj)]
                vec[start:start + sizes[i]] = row[kk].coefficients()
            out.append(vec)
    return out


def ext_dims(phi: FormMatrix, _ranks: Optional[dict] = None) -> ExtDims:
    """
    hom(H,H) = ker(rho), ext^1(H,H) = coker(rho), ext^2(H,H) = 0 where
    rho: End(B) -> Hom(A,B)/phi.End(A) is precomposition with phi.

    phi.End(A) is gamma copies of the span of phi's columns on disjoint
    coordinates, so its rank is gamma * rank(coefficient_matrix(phi)).
    """
    p = phi.presentation
    _structural_ext_guards(p)
    field = phi.field
    gamma = p.gamma
    rows = len(phi.entries)
    degs = [phi.entry_degree(i) for i in range(rows)]
    sizes = [len(monomial_basis(d)) for d in degs]
    # coordinates of Hom(A,B): entry (i, col) occupies sizes[i] slots
    offsets: Dict[Tuple[int, int], int] = {}
    pos = 0
    for i in range(rows):
        for col in range(gamma):
            offsets[(i, col)] = pos
            pos += sizes[i]
    hom_ab = pos
    coeffs = [[phi.entries[i][col].coefficients() for col in range(gamma)] for i in range(rows)]

    def column_from_rows(row_forms: Dict[int, List[list]]) -> list:
        vec = [0] * hom_ab
        for i, per_col in row_forms.items():
            for col in range(gamma):
                start = offsets[(i, col)]
                vec[start:start + sizes[i]] = per_col[col]
        return vec

    end_a_cols = _end_a_columns(phi, offsets, sizes, hom_ab)

    # End(B) o phi
    b1_rows = list(range(p.delta))
    b2_rows = list(range(p.delta, rows))
    end_b_cols = []
    for block in (b1_rows, b2_rows):
        for i in block:
            for src in block:
                end_b_cols.append(column_from_rows({i: coeffs[src]}))
    cross = p.block_b[1][0] - p.block_b[0][0]
    for i in b2_rows:
        for src in b1_rows:
            for mono in monomial_basis(cross):
                m = Form.monomial(mono, p.config.e, field)
                end_b_cols.append(column_from_rows({i: [(m * phi.entries[src][col]).coefficients()
                                                        for col in range(gamma)]}))

    end_a = len(end_a_cols)
    end_b = len(end_b_cols)
    rank_w = gamma * rank(coefficient_matrix(phi))
    rw = ExactMatrix.from_rows(list(zip(*(end_b_cols + end_a_cols))), field)
    rank_rw = rank(rw)
    rank_rho = rank_rw - rank_w
    if _ranks is not None:
        _ranks["end_a"] = MatrixSummary(name="phi_end_a", rows=hom_ab, cols=end_a, rank=rank_w)
        _ranks["rho"] = MatrixSummary(name="end_b_end_a", rows=rw.rows, cols=rw.cols, rank=rank_rw)
    hom_ah = hom_ab - rank_w
    return ExtDims(
        hom=end_b - rank_rho,
        ext1=hom_ah - rank_rho,
        ext2=0,
        hom_ab=hom_ab,
        end_a=end_a,
        end_b=end_b,
        rank_end_a=rank_w,
        rank_rho=rank_rho,
    )


# ===== FULL VERIFICATION =====

def verify_ulrich(phi: FormMatrix, rng: np.random.Generator = None, trials: int = None,
                  with_ext: bool = True, with_timings: bool = False) -> VerificationReport:
    p = phi.presentation
    cfg = p.config
    timings: Dict[str, int] = {}
    ranks: Dict[str, MatrixSummary] = {}

    def clock(name, fn, *args, **kwargs):
        start = time.perf_counter()
        out = fn(*args, **kwargs)
        timings[name] = int((time.perf_counter() - start) * 1000)
        return out

    lf = clock("locally_free", certify_locally_free, phi, trials, rng)
    t1 = clock("j1", twisted_cohomology_of_coker, phi, 1)
    t2 = clock("j2", twisted_cohomology_of_coker, phi, 2, ranks)
    square = h2_map_is_square(p)
    euler_ok = all(t.chi == _chi_difference(p, j) for j, t in ((1, t1), (2, t2)))
    ulrich = t1.is_zero() and t2.is_zero() and square

    # Chern data
    c1 = p.block_b[0][0] * p.delta + p.block_b[1][0] * p.tau - p.block_a * p.gamma
    pol = lattice.polarization(cfg.e, cfg.b)
    k = lattice.canonical_class(cfg.e)
    deg = lattice.degree(cfg.e, cfg.b)
    c2_rr = (lattice.intersect(c1, c1) - lattice.intersect(c1, k)) // 2 + cfg.r - cfg.r * deg
    c1_degree = 2 * lattice.intersect(c1, pol) == cfg.r * (3 * deg + lattice.intersect(pol, k))

    # H^0 via the untwisted sequence; H^1(A) = 0 structurally
    _guard_zero([p.block_a] + [d for d, _ in p.block_b], (1, 2), "untwisted A, B")
    m0 = clock("h0", h0_map, phi)
    rk0 = rank(m0)
    ranks["h0_map"] = MatrixSummary(name="h0_map", rows=m0.rows, cols=m0.cols, rank=rk0)
    h0_coker = m0.rows - rk0

    ext = None
    if with_ext:
        ext = clock("ext", ext_dims, phi, ranks)

    report = VerificationReport(
        config=cfg,
        seed=phi.seed,
        field=phi.field.tag(),
        alpha=p.alpha,
        beta=p.beta,
        gamma=p.gamma,
        delta=p.delta,
        tau=p.tau,
        locally_free=lf,
        ulrich=ulrich,
        tables={"j1": t1, "j2": t2},
        h2_map_square=square,
        euler_ok=euler_ok,
        c1=c1.pair(),
        c1_match=c1 == p.c1,
        c1_degree_match=c1_degree,
        c2_value=p.c2,
        c2_consistent=p.c2 == c2_rr,
        h0=h0_coker,
        h0_expected=cfg.r * deg,
        h0_match=h0_coker == cfg.r * deg,
        ext=ext,
        simple=(ext.hom == 1) if ext is not None else None,
        matrices=[ranks[key] for key in sorted(ranks)],
        timings_ms=timings if with_timings else None,
    )
    logger.info("[VERIFY] %s seed=%s field=%s ulrich=%s locally_free=%s",
                cfg.model_dump(), phi.seed, phi.field.tag(), ulrich, lf.status)
    return report


def _failure_reason(report: VerificationReport) -> Optional[str]:
    if report.locally_free.status != "certified":
        return "rank drop at a torus point"
    if not report.ulrich:
        return "H^2-map rank drop"
    if report.ext is not None and report.ext.hom != 1:
        return f"hom={report.ext.hom}"
    return None


def verify_config(config: ScrollConfig, seed: int = None, field: FieldSpec = None,
                  max_resamples: int = None, trials: int = None, with_ext: bool = True,
                  with_timings: bool = False) -> VerificationReport:
    """Sample phi and verify; a failed genericity check resamples with seed+1."""
    seed = settings.ULRICH_DEFAULT_SEED if seed is None else seed
    field = field or FieldSpec.parse(settings.ULRICH_DEFAULT_FIELD)
    max_resamples = settings.ULRICH_MAX_RESAMPLES if max_resamples is None else max_resamples
    if max_resamples < 1:
        raise ValueError("max_resamples must be >= 1")
    p = build_presentation(config)
    attempts: List[Attempt] = []
    report = None
    for n in range(max_resamples):
        s = seed + n
        rng = make_rng(s)
        phi = sample_phi(p, field, rng, seed=s)
        report = verify_ulrich(phi, rng, trials=trials, with_ext=with_ext, with_timings=with_timings)
        reason = _failure_reason(report)
        attempts.append(Attempt(seed=s, locally_free=report.locally_free.status, ulrich=report.ulrich,
                                hom=report.ext.hom if report.ext else None, reason=reason))
        if reason is None:
            break
        logger.warning("[VERIFY] resample seed=%s reason=%s", s + 1, reason)
    report = report.model_copy(update={"attempts": attempts})
    return sign(report)


def sign(report):
    body = report.model_copy(update={"fingerprint": None, "timings_ms": None})
    return report.model_copy(update={"fingerprint": fingerprint(body)})


# ===== LINE BUNDLES =====

def search_line_bundles(e: int, b: int, box: int = None) -> List[DivisorClass]:
    box = settings.ULRICH_SEARCH_BOX if box is None else box
    if box < 1:
        raise ValueError("box must be >= 1")
    pol = lattice.polarization(e, b)
    found = []
    for alpha in range(-box, box + 1):
        for beta in range(-box, box + 1):
            d = DivisorClass(a=alpha, b=beta, e=e)
            if is_ulrich_line_bundle(d, pol):
                found.append(d)
    return found


def expected_ulrich_lines(e: int, b: int) -> List[Tuple[int, int]]:
    return sorted([(5, b - 1), (2, 2 * b - 1)]) if e == 0 else []


def line_search_report(e: int, b: int, box: int = None) -> LineSearchResult:
    box = settings.ULRICH_SEARCH_BOX if box is None else box
    found = sorted(d.pair() for d in search_line_bundles(e, b, box))
    expected = [c for c in expected_ulrich_lines(e, b) if max(abs(c[0]), abs(c[1])) <= box]
    return LineSearchResult(e=e, b=b, box=box, classes=found, expected=expected, match=found == expected)
