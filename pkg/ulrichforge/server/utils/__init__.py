from utils.canonical import canonical_json, fingerprint, to_plain, verify_fingerprint  # noqa
from utils.errors import (  # noqa
    UlrichError, SurfaceMismatchError, ConfigError, UnsupportedError,
    NonTorusPointError, InternalConsistencyError,
)
