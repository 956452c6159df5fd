"""
UlrichForge - Logging setup
Messages carry their own bracket tag, e.g. "[VERIFY] resample seed=43".
"""
import logging
import sys

from config import settings

_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def configure_logging(level: str = None) -> None:
    root = logging.getLogger()
    root.setLevel((level or settings.LOG_LEVEL).upper())
    if any(getattr(h, "_ulrichforge", False) for h in root.handlers):
        return
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(_FORMAT))
    handler._ulrichforge = True
    root.addHandler(handler)
