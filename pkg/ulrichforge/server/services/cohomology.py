"""
UlrichForge - Cohomology Service
Exact h^0, h^1, h^2 of line bundles on F_e.

The pushforward of O(a, b) along the ruling is O(b) + O(b-e) + ... + O(b-ae)
for a >= 0, vanishes for a = -1, and for a <= -2 only R^1 survives, which is
handled through Serre duality. h^1 is always derived from Riemann-Roch.
"""
from functools import lru_cache

from config import settings
from schemas.lattice import CohTable, DivisorClass
from services.lattice import canonical_class, euler_char


def _h0_pair(e: int, a: int, b: int) -> int:
    if a < 0:
        return 0
    return sum(max(0, b - i * e + 1) for i in range(a + 1))


@lru_cache(maxsize=settings.ULRICH_COHOMOLOGY_CACHE)
def _table(e: int, a: int, b: int) -> tuple:
    h0 = _h0_pair(e, a, b)
    # K - D = (-2 - a, -e - 2 - b)
    h2 = _h0_pair(e, -2 - a, -e - 2 - b)
    chi = euler_char(DivisorClass(a=a, b=b, e=e))
    return h0, h0 + h2 - chi, h2, chi


def line_bundle_cohomology(d: DivisorClass) -> CohTable:
    h0, h1, h2, chi = _table(d.e, d.a, d.b)
    return CohTable(h0=h0, h1=h1, h2=h2, chi=chi)


def h0(d: DivisorClass) -> int:
    return _table(d.e, d.a, d.b)[0]


def h1_on_base(d: DivisorClass) -> int:
    """
    h^1 computed directly on the projective line, summand by summand.
    Kept as an independent oracle for the derived h^1.
    """
    a, b, e = d.a, d.b, d.e
    if a >= 0:
        # H^1(F_e, O(a,b)) = sum of H^1(P^1, O(b - ie))
        return sum(max(0, -(b - i * e) - 1) for i in range(a + 1))
    if a == -1:
        return 0
    # R^1 pi_* O(a,b) is dual to pi_* O(-a-2, .) twisted: H^1(F_e, D) = H^1(F_e, K - D)
    k = canonical_class(e)
    return h1_on_base(DivisorClass(a=k.a - a, b=k.b - b, e=e))


def is_ulrich_line_bundle(d: DivisorClass, h: DivisorClass) -> bool:
    """H^i(D - jH) = 0 for all i and j = 1, 2."""
    return all(line_bundle_cohomology(d - j * h).is_zero() for j in (1, 2))


def cache_clear() -> None:
    _table.cache_clear()
