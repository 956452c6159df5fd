"""
UlrichForge - Scroll Service
Chow-ring arithmetic and line-bundle cohomology on X_e = P(E_e) over F_e,
where 0 -> A_e -> E_e -> B_e -> 0, c_1(E_e) = (3, b), c_2(E_e) = k.

Products of degree-one classes reduce by xi^3 = c_1^2 - c_2,
xi^2.phi^*D = c_1.D, xi.phi^*D.phi^*D' = D.D' and phi^*D.phi^*D'.phi^*D'' = 0.
"""
import logging
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

from config import settings
from schemas.lattice import DivisorClass
from schemas.presentation import ScrollConfig
from schemas.reports import CandidateVerdict, MainTheoremAReport, ScrollTable, SlopeReport, VerificationReport
from schemas.scroll import ScrollBundleData, ScrollClass, SpecialnessVerdict
from services import lattice
from services.cohomology import line_bundle_cohomology
from services.presentation import c1_target, k_range, validate_config

logger = logging.getLogger(__name__)


def xi(e: int) -> ScrollClass:
    return ScrollClass(m=1, L=DivisorClass(a=0, b=0, e=e))


def pullback(d: DivisorClass) -> ScrollClass:
    return ScrollClass(m=0, L=d)


# ===== CHOW RING =====

def triple_product(x: ScrollClass, y: ScrollClass, z: ScrollClass, config: ScrollConfig) -> int:
    c1 = config.c1_e
    xi3 = lattice.intersect(c1, c1) - config.k
    total = x.m * y.m * z.m * xi3
    total += lattice.intersect(c1, x.L * (y.m * z.m) + y.L * (x.m * z.m) + z.L * (x.m * y.m))
    total += x.m * lattice.intersect(y.L, z.L) + y.m * lattice.intersect(x.L, z.L) \
        + z.m * lattice.intersect(x.L, y.L)
    return total


def xi_cubed(config: ScrollConfig) -> int:
    x = xi(config.e)
    return triple_product(x, x, x, config)


def canonical_class(config: ScrollConfig) -> ScrollClass:
    """K_X = -2 xi + phi^*(K_F + c_1(E)), the relative canonical formula for a P^1-bundle."""
    return ScrollClass(m=-2, L=lattice.canonical_class(config.e) + config.c1_e)


def slope(u: ScrollBundleData, config: ScrollConfig) -> Fraction:
    """c_1(U).xi^2 / rank."""
    x = xi(config.e)
    return Fraction(triple_product(u.c1, x, x, config), u.rank)


def slope_closed_form(config: ScrollConfig) -> int:
    return 8 * config.b - config.k - 12 * config.e - 3


# ===== U_r =====

def printed_c1_pullback(config: ScrollConfig) -> DivisorClass:
    """The phi^*-part of c_1(U_r) as listed for the moduli components."""
    r, e, b = config.r, config.e, config.b
    if r % 2 == 0:
        return DivisorClass(a=r // 2, b=(r // 2) * (b - e - 2), e=e)
    h = (r - 3) // 2
    return DivisorClass(a=3, b=b - 3, e=e) + DivisorClass(a=h, b=h * (b - e - 2), e=e)


def bundle_from_surface(config: ScrollConfig, surface_c1: Optional[DivisorClass] = None) -> ScrollBundleData:
    """U_r = xi (x) phi^*(H_r(-c_1(E))): c_1 = r xi + phi^*(c_1(H_r) - r c_1(E))."""
    surface_c1 = surface_c1 or c1_target(config)
    r = config.r
    return ScrollBundleData(
        rank=r,
        c1=ScrollClass(m=r, L=surface_c1 - config.c1_e * r),
        surface_c1=surface_c1,
    )


def check_c1_and_specialness(config: ScrollConfig) -> SpecialnessVerdict:
    u = bundle_from_surface(config)
    printed = printed_c1_pullback(config)
    verdict = SpecialnessVerdict(
        r=config.r,
        c1_pullback=u.c1.L.pair(),
        c1_printed=printed.pair(),
        c1_match=u.c1.L == printed,
    )
    if config.r == 2:
        k = canonical_class(config)
        target = k + xi(config.e) * 4
        verdict = verdict.model_copy(update={
            "canonical": (k.m, k.L.pair()),
            "special": target == u.c1,
        })
    return verdict


def slope_report(config: ScrollConfig) -> SlopeReport:
    validate_config(config.e, config.b, config.k, config.r)
    u = bundle_from_surface(config)
    mu = slope(u, config)
    closed = slope_closed_form(config)
    check = check_c1_and_specialness(config)
    return SlopeReport(
        config=config,
        c1_xi=u.c1.m,
        c1_pullback=u.c1.L.pair(),
        slope=str(mu),
        slope_closed_form=closed,
        slope_match=mu == closed,
        xi_cubed=xi_cubed(config),
        c1_matches_printed=check.c1_match,
        special=check.special,
    )


# ===== PULLBACK CRITERION =====

def pullback_ulrich_criterion(f: Union[DivisorClass, VerificationReport], config: ScrollConfig) -> bool:
    """
    xi (x) phi^*F is Ulrich on X_e iff H^*(F) = 0 and H^*(F(-c_1(E))) = 0.
    F may be a line bundle, or a surface verification of H_r, in which case
    F = H_r(-c_1(E)) and the two tables are its j = 1 and j = 2 twists.
    """
    if isinstance(f, VerificationReport):
        return f.tables["j1"].is_zero() and f.tables["j2"].is_zero()
    return line_bundle_cohomology(f).is_zero() and line_bundle_cohomology(f - config.c1_e).is_zero()


def verify_scroll_bundle(report: VerificationReport) -> dict:
    """Scroll-side data for U_r from a surface verification of H_r."""
    config = report.config
    surface_c1 = DivisorClass(a=report.c1[0], b=report.c1[1], e=config.e)
    u = bundle_from_surface(config, surface_c1)
    mu = slope(u, config)
    return {
        "rank": u.rank,
        "c1": {"xi": u.c1.m, "pullback": u.c1.L.pair()},
        "slope": str(mu),
        "slope_match": mu == slope_closed_form(config),
        "ulrich": pullback_ulrich_criterion(report, config),
        "agrees_with_surface": pullback_ulrich_criterion(report, config) == report.ulrich,
        "h0_expected": u.rank * xi_cubed(config),
    }


# ===== LINE-BUNDLE COHOMOLOGY ON X_e =====

def _filtration_pieces(m: int, config: ScrollConfig, twist: DivisorClass) -> Tuple[List[DivisorClass], int]:
    """
    Line-bundle pieces (sub first) whose iterated extension is the relevant
    direct image of O(m xi) (x) phi^*twist, and the degree shift to X_e.
    """
    a_cls, b_cls = config.a_class, config.b_class
    if m >= 0:
        return [a_cls * (m - q) + b_cls * q + twist for q in range(m + 1)], 0
    if m == -1:
        return [], 0
    # R^1 phi_* O(m xi) = (Sym^n E)^v (x) det(E)^v with n = -m - 2
    n = -m - 2
    dual_twist = twist - config.c1_e
    return [dual_twist - (a_cls * (n - q) + b_cls * q) for q in range(n, -1, -1)], 1


def _extend(lo: List[int], hi: List[int], piece: Tuple[int, int, int]) -> Tuple[List[int], List[int]]:
    """Bounds for G' in 0 -> G -> G' -> P -> 0 on a surface."""
    new_lo, new_hi = [], []
    for i in range(3):
        into = min(piece[i - 1], hi[i]) if i >= 1 else 0
        out = min(piece[i], hi[i + 1]) if i <= 1 else 0
        new_lo.append(max(0, lo[i] + piece[i] - into - out))
        new_hi.append(hi[i] + piece[i])
    return new_lo, new_hi


def scroll_line_cohomology(d: ScrollClass, config: ScrollConfig) -> ScrollTable:
    pieces, shift = _filtration_pieces(d.m, config, d.L)
    lo, hi = [0, 0, 0], [0, 0, 0]
    chi = 0
    for piece in pieces:
        table = line_bundle_cohomology(piece)
        lo, hi = _extend(lo, hi, table.as_tuple())
        chi += table.chi
    if shift:
        lo4, hi4, chi = (0, *lo), (0, *hi), -chi
    else:
        lo4, hi4 = (*lo, 0), (*hi, 0)
    return ScrollTable(lo=lo4, hi=hi4, chi=chi, exact=lo4 == hi4)


def ulrich_on_scroll(d: ScrollClass, config: ScrollConfig) -> Tuple[Optional[bool], Dict[str, ScrollTable]]:
    """True/False when decided, None (UNKNOWN) otherwise; j = 1, 2, 3."""
    tables = {}
    for j in (1, 2, 3):
        tables[f"j{j}"] = scroll_line_cohomology(d - xi(config.e) * j, config)
    if all(t.is_zero for t in tables.values()):
        return True, tables
    if any(t.provably_nonzero for t in tables.values()):
        return False, tables
    return None, tables


def serre_check(d: ScrollClass, config: ScrollConfig) -> Optional[bool]:
    """h^i(D) = h^{3-i}(K_X - D) when both sides are exact; None otherwise."""
    left = scroll_line_cohomology(d, config)
    right = scroll_line_cohomology(canonical_class(config) - d, config)
    if not (left.exact and right.exact):
        return None
    return left.hi == tuple(reversed(right.hi))


# ===== MAIN THEOREM (a) CANDIDATES =====

def candidate_classes(e: int, b: int, t: Optional[int] = None) -> Dict[str, ScrollClass]:
    """L_1, L_2 (and M_1, M_2 when t is given) in the shapes listed for X_0."""
    out = {
        "L1": ScrollClass(m=1, L=DivisorClass(a=2, b=-1, e=e)),
        "L2": ScrollClass(m=1, L=DivisorClass(a=-1, b=b - 1, e=e)),
    }
    if t is not None:
        out["M1"] = ScrollClass(m=2, L=DivisorClass(a=-1, b=-t - 1, e=e))
        out["M2"] = ScrollClass(m=0, L=DivisorClass(a=2, b=3 * t - 1, e=e))
    return out


def split_dependent(name: str, e: int, b: int, k: int, t: Optional[int]) -> bool:
    """
    M-shape candidates on X_e (e > 0) whose only nonzero pieces meet in a single
    connecting map of the filtration sequence. That map is cup product with the
    extension class of E_e: zero when E_e splits (not Ulrich), possibly an
    isomorphism otherwise. The filtration bounds cannot decide these.
    """
    if e < 1 or t is None or b < e + 2 * t:
        return False
    if name == "M1":
        return k == 3 * (b - e - t)
    if name == "M2":
        return k == 6 * (b - e) - 9 * t
    return False


def _verdict(name: str, d: ScrollClass, config: ScrollConfig, t: Optional[int] = None) -> CandidateVerdict:
    ulrich, tables = ulrich_on_scroll(d, config)
    return CandidateVerdict(
        name=name,
        m=d.m,
        l_class=d.L.pair(),
        b=config.b,
        k=config.k,
        t=t,
        ulrich=ulrich,
        exact=all(tb.exact for tb in tables.values()),
        tables=tables,
        split_dependent=split_dependent(name, config.e, config.b, config.k, t),
    )


def grid_b_values(e: int) -> range:
    return range(3 * e + 2, 3 * e + 9)


def verify_main_theorem_a(e: int, t_max: int = None, b_values=None) -> MainTheoremAReport:
    """
    e = 0: L_1, L_2 on every grid (b, k) and M_1, M_2 on (b, k) = (2t, 3t)
    must be Ulrich with exact cohomology. e > 0: every one of the same shapes
    must be decided non-Ulrich. Passes only when no verdict is UNKNOWN.
    """
    t_max = settings.ULRICH_TMAX if t_max is None else t_max
    if t_max < 1:
        raise ValueError("t_max must be at least 1")
    b_values = list(b_values) if b_values is not None else list(grid_b_values(e))
    verdicts: List[CandidateVerdict] = []
    for b in b_values:
        lo, hi = k_range(e, b)
        for k in range(lo, hi + 1):
            config = ScrollConfig(e=e, b=b, k=k, r=1)
            for name, d in candidate_classes(e, b).items():
                verdicts.append(_verdict(name, d, config))
            if e > 0:
                for t in range(1, t_max + 1):
                    for name, d in candidate_classes(e, b, t).items():
                        if name.startswith("M"):
                            verdicts.append(_verdict(name, d, config, t))
    if e == 0:
        for t in range(1, t_max + 1):
            config = ScrollConfig(e=0, b=2 * t, k=3 * t, r=1)
            for name, d in candidate_classes(0, 2 * t, t).items():
                if name.startswith("M"):
                    verdicts.append(_verdict(name, d, config, t))
    expected = e == 0
    unknown = sum(1 for v in verdicts if v.ulrich is None)
    contradicted = sum(
        1 for v in verdicts
        if v.ulrich is not None and (v.ulrich is not expected or (expected and not v.exact))
    )
    passed = unknown == 0 and contradicted == 0
    if contradicted:
        logger.warning("[SCROLL] main theorem (a) contradicted by %d candidates at e=%s", contradicted, e)
    elif unknown:
        logger.info("[SCROLL] %d candidates at e=%s hinge on the extension class of E_e", unknown, e)
    return MainTheoremAReport(
        e=e,
        t_max=t_max,
        candidates=verdicts,
        expected_ulrich=expected,
        passed=passed,
        unknown=unknown,
        contradicted=contradicted,
    )
