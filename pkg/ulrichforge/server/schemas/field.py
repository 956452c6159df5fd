"""
UlrichForge - Field specifications
"""
from typing import Optional

from pydantic import BaseModel, ConfigDict, field_validator
from sympy import isprime

DEFAULT_PRIME = 32003


class FieldSpec(BaseModel):
    """Either the rationals (prime is None) or F_p."""
    model_config = ConfigDict(frozen=True)

    prime: Optional[int] = DEFAULT_PRIME

    @field_validator("prime")
    @classmethod
    def _prime(cls, p):
        if p is not None and not isprime(p):
            raise ValueError(f"{p} is not prime")
        if p is not None and p >= 2 ** 31:
            raise ValueError("prime must be below 2^31")
        return p

    @property
    def is_rational(self) -> bool:
        return self.prime is None

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Accepts 'q' for the rationals or 'fp:P'."""
        text = text.strip().lower()
        if text in ("q", "qq", "rationals"):
            return cls(prime=None)
        if text.startswith("fp:"):
            return cls(prime=int(text[3:]))
        raise ValueError(f"unknown field '{text}' (expected q or fp:P)")

    def tag(self) -> str:
        return "q" if self.prime is None else f"fp:{self.prime}"
