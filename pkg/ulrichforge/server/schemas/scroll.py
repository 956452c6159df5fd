"""
UlrichForge - Pydantic Schemas for the 3-fold scroll X_e = P(E_e)
"""
from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from schemas.lattice import DivisorClass


class ScrollClass(BaseModel):
    """m*xi + phi^*L in the degree-one Chow group of X_e."""
    model_config = ConfigDict(frozen=True)

    m: int
    L: DivisorClass

    def __add__(self, other: "ScrollClass") -> "ScrollClass":
        return ScrollClass(m=self.m + other.m, L=self.L + other.L)

    def __sub__(self, other: "ScrollClass") -> "ScrollClass":
        return ScrollClass(m=self.m - other.m, L=self.L - other.L)

    def __neg__(self) -> "ScrollClass":
        return ScrollClass(m=-self.m, L=-self.L)

    def __mul__(self, n: int) -> "ScrollClass":
        return ScrollClass(m=n * self.m, L=self.L * n)

    __rmul__ = __mul__


class ScrollBundleData(BaseModel):
    rank: int = Field(ge=1)
    c1: ScrollClass
    surface_c1: Optional[DivisorClass] = None  # c_1(H_r) when built by pullback


class SpecialnessVerdict(BaseModel):
    r: int
    c1_pullback: Tuple[int, int]
    c1_printed: Tuple[int, int]
    c1_match: bool
    canonical: Optional[Tuple[int, Tuple[int, int]]] = None  # (xi-coefficient, phi^* part) of K_X
    special: Optional[bool] = None
