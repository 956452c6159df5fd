"""
UlrichForge - Deterministic random streams
All randomness comes from numpy's PCG64 bit generator.
"""
import numpy as np


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def stream_rng(seed: int, stream: int) -> np.random.Generator:
    """An independent PCG64 stream keyed by (seed, stream)."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, stream])))


def task_seed(master_seed: int, task_index: int) -> int:
    """A reproducible integer seed for one sweep task."""
    ss = np.random.SeedSequence([master_seed, task_index])
    return int(ss.generate_state(1, dtype=np.uint32)[0])
