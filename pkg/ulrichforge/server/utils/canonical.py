"""
UlrichForge - Canonical JSON and report fingerprints
Reports are rendered deterministically and signed with HMAC-SHA256 so a stored
report can be checked against a recomputation byte for byte.
"""
import hmac
import hashlib
import json
from fractions import Fraction
from typing import Any

from pydantic import BaseModel

from config import settings


def to_plain(value: Any) -> Any:
    if isinstance(value, BaseModel):
        return to_plain(value.model_dump(mode="python"))
    if isinstance(value, dict):
        return {str(k): to_plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_plain(v) for v in value]
    if isinstance(value, Fraction):
        return str(value) if value.denominator != 1 else value.numerator
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not allowed in canonical reports")
    if hasattr(value, "item"):
        # numpy scalar
        return to_plain(value.item())
    return str(value)


def canonical_json(payload: Any) -> str:
    """Sorted keys, no whitespace, integers only."""
    return json.dumps(to_plain(payload), sort_keys=True, separators=(",", ":"))


def fingerprint(payload: Any, key: str = None) -> str:
    """HMAC-SHA256 of the canonical rendering."""
    body = canonical_json(payload)
    return hmac.new(
        (key or settings.REPORT_SIGNING_KEY).encode(),
        body.encode(),
        hashlib.sha256,
    ).hexdigest()


def verify_fingerprint(payload: Any, signature: str, key: str = None) -> bool:
    expected = fingerprint(payload, key)
    return hmac.compare_digest(expected, signature)
