"""
UlrichForge - Engine errors
"""
from typing import Optional


class UlrichError(Exception):
    """Base class for every error raised by the engine."""


class SurfaceMismatchError(UlrichError):
    def __init__(self, e1: int, e2: int):
        super().__init__(f"surface mismatch: F_{e1} vs F_{e2}")
        self.e1 = e1
        self.e2 = e2


class ConfigError(UlrichError):
    """A configuration violates the scroll assumptions."""

    def __init__(self, inequality: str, values: dict, message: Optional[str] = None):
        self.inequality = inequality
        self.values = values
        detail = ", ".join(f"{k}={v}" for k, v in values.items())
        super().__init__(message or f"violates {inequality} ({detail})")


class UnsupportedError(UlrichError):
    """The request is well-formed but outside what the engine computes."""


class NonTorusPointError(UlrichError):
    def __init__(self, point):
        super().__init__(f"non-torus point: {tuple(point)}")
        self.point = tuple(point)


class InternalConsistencyError(UlrichError):
    """Two independent computations disagreed; always a bug."""
