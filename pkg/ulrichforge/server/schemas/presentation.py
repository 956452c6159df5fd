"""
UlrichForge - Pydantic Schemas for scroll configurations and presentations
"""
from typing import List, Tuple

from pydantic import BaseModel, ConfigDict, Field

from schemas.lattice import DivisorClass


class ScrollConfig(BaseModel):
    """(e, b_e, k_e, r): E_e has c_1 = 3C_e + b f, c_2 = k, and H_r has rank r."""
    model_config = ConfigDict(frozen=True)

    e: int = Field(ge=0)
    b: int
    k: int
    r: int = Field(ge=1)

    @property
    def a_class(self) -> DivisorClass:
        """A_e = 2C_e + (2b - k - 2e) f."""
        return DivisorClass(a=2, b=2 * self.b - self.k - 2 * self.e, e=self.e)

    @property
    def b_class(self) -> DivisorClass:
        """B_e = C_e + (k - b + 2e) f."""
        return DivisorClass(a=1, b=self.k - self.b + 2 * self.e, e=self.e)

    @property
    def c1_e(self) -> DivisorClass:
        return DivisorClass(a=3, b=self.b, e=self.e)


class ConfigValidation(BaseModel):
    config: ScrollConfig
    a_class: DivisorClass
    b_class: DivisorClass
    k_range: Tuple[int, int]


class Presentation(BaseModel):
    """0 -> O(2, b-e-1)^gamma -> O(2, b-e)^delta + O(3, b-1)^tau -> H_r -> 0."""
    model_config = ConfigDict(frozen=True)

    config: ScrollConfig
    alpha: int
    beta: int
    gamma: int = Field(gt=0)
    delta: int = Field(gt=0)
    tau: int = Field(gt=0)
    block_a: DivisorClass
    block_b: List[Tuple[DivisorClass, int]]
    c2: int

    @property
    def c1(self) -> DivisorClass:
        return DivisorClass(a=self.alpha, b=self.beta, e=self.config.e)

    @property
    def b_degrees(self) -> List[DivisorClass]:
        """Degree of every summand of B, in row order."""
        return [cls for cls, mult in self.block_b for _ in range(mult)]

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.delta + self.tau, self.gamma)
