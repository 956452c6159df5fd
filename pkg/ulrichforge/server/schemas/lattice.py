"""
UlrichForge - Pydantic Schemas for divisor classes and cohomology tables
"""
from pydantic import BaseModel, ConfigDict, Field, model_validator

from utils.errors import SurfaceMismatchError


class SurfaceParams(BaseModel):
    """The Hirzebruch surface F_e."""
    model_config = ConfigDict(frozen=True)

    e: int = Field(ge=0)


class DivisorClass(BaseModel):
    """The class a*C_e + b*f in Num(F_e)."""
    model_config = ConfigDict(frozen=True)

    a: int
    b: int
    e: int = Field(ge=0)

    def _check(self, other: "DivisorClass") -> None:
        if self.e != other.e:
            raise SurfaceMismatchError(self.e, other.e)

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        self._check(other)
        return DivisorClass(a=self.a + other.a, b=self.b + other.b, e=self.e)

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        self._check(other)
        return DivisorClass(a=self.a - other.a, b=self.b - other.b, e=self.e)

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(a=-self.a, b=-self.b, e=self.e)

    def __mul__(self, n: int) -> "DivisorClass":
        return DivisorClass(a=n * self.a, b=n * self.b, e=self.e)

    __rmul__ = __mul__

    def pair(self) -> tuple:
        return (self.a, self.b)

    def __str__(self) -> str:
        return f"O_F{self.e}({self.a},{self.b})"


class CohTable(BaseModel):
    """Dimensions of H^0, H^1, H^2 and the Euler characteristic."""
    model_config = ConfigDict(frozen=True)

    h0: int = Field(ge=0)
    h1: int = Field(ge=0)
    h2: int = Field(ge=0)
    chi: int

    @model_validator(mode="after")
    def _euler(self):
        if self.h0 - self.h1 + self.h2 != self.chi:
            raise ValueError(f"h0-h1+h2={self.h0 - self.h1 + self.h2} != chi={self.chi}")
        return self

    def is_zero(self) -> bool:
        return self.h0 == 0 and self.h1 == 0 and self.h2 == 0

    def reversed(self) -> tuple:
        return (self.h2, self.h1, self.h0)

    def as_tuple(self) -> tuple:
        return (self.h0, self.h1, self.h2)
