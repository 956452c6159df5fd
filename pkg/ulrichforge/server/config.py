"""
UlrichForge - Configuration
Loads engine defaults from environment variables.
"""
from pydantic_settings import BaseSettings
import os
from dotenv import load_dotenv

# Load from parent .env
load_dotenv(os.path.join(os.path.dirname(os.path.dirname(__file__)), ".env"))


class Settings(BaseSettings):
    # Field and randomness
    ULRICH_DEFAULT_FIELD: str = "fp:32003"
    ULRICH_DEFAULT_SEED: int = 42

    # Verifier
    ULRICH_LOCAL_FREE_TRIALS: int = 8
    ULRICH_MAX_RESAMPLES: int = 5

    # Line searches
    ULRICH_SEARCH_BOX: int = 20
    ULRICH_TMAX: int = 3

    # Sweeps (0 = run tasks serially in-process)
    ULRICH_SWEEP_WORKERS: int = 0

    # Cohomology memo size
    ULRICH_COHOMOLOGY_CACHE: int = 65536

    # Report fingerprints
    REPORT_SIGNING_KEY: str = "ulrichforge-local"

    # Logging
    LOG_LEVEL: str = "INFO"

    # Server
    SERVER_HOST: str = "127.0.0.1"
    SERVER_PORT: int = 8001

    class Config:
        env_file = "../.env"
        case_sensitive = True
        extra = "ignore"


settings = Settings()
