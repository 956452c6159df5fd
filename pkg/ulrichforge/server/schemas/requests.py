"""
UlrichForge - Request bodies for the HTTP surface
"""
from typing import List, Optional

from pydantic import BaseModel, Field


class CohomologyRequest(BaseModel):
    e: int = Field(ge=0)
    a: int
    b: int


class ConfigRequest(BaseModel):
    e: int
    b: int
    k: int
    r: int = 2


class PresentationRequest(ConfigRequest):
    seed: Optional[int] = None  # when given, a sampled phi is attached
    field: Optional[str] = None


class VerifyRequest(ConfigRequest):
    seed: Optional[int] = None
    field: Optional[str] = None
    trials: Optional[int] = Field(default=None, ge=1)
    with_ext: bool = True
    scroll: bool = False


class LineSearchRequest(BaseModel):
    e: int = Field(ge=0)
    b: int
    box: Optional[int] = Field(default=None, ge=1)


class ModuliRequest(BaseModel):
    r: int
    e: int
    b: int
    k: Optional[int] = None
    with_ext: bool = False
    seed: Optional[int] = None
    field: Optional[str] = None


class ScrollClassIn(BaseModel):
    m: int
    a: int
    b: int


class ChowRequest(BaseModel):
    e: int
    b: int
    k: int
    x: ScrollClassIn
    y: ScrollClassIn
    z: ScrollClassIn


class CheckARequest(BaseModel):
    e: int = Field(ge=0)
    t_max: Optional[int] = Field(default=None, ge=1)
    b_values: Optional[List[int]] = None
