"""
Seed handling.

One root seed per run; each named stage gets its own seed derived from the stage
name, so adding a stage never shifts the random stream of another.
"""

from __future__ import annotations

import hashlib

import numpy as np

SEED_MASK = (1 << 64) - 1


def derive_seed(root: int, stage: str) -> int:
    """First 8 bytes (big-endian) of SHA-256("<root>:<stage>")."""
    digest = hashlib.sha256(f"{int(root) & SEED_MASK}:{stage}".encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big")


def attempt_seed(root: int, stage: str, attempt: int) -> int:
    return derive_seed(root, f"{stage}/{attempt}")


def make_rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(int(seed) & SEED_MASK)
