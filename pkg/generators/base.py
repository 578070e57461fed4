"""
Base Generator Helpers

Shared plumbing for the generator modules: argument checks, consecutive part
layouts and seeded random sources.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence, Tuple, Union

import numpy as np

from hgraph import ArgumentError, PartiteLayout, make_rng


class BaseGenerator:
    """Common helpers for all constructions."""

    def _positive(self, name: str, value: int, minimum: int = 1) -> int:
        if not isinstance(value, (int, np.integer)) or value < minimum:
            raise ArgumentError(f"{name} must be an integer >= {minimum}, got {value!r}")
        return int(value)

    def _probability(self, p: Union[float, Fraction, str]) -> float:
        frac = Fraction(p) if not isinstance(p, float) else p
        if not 0 <= frac <= 1:
            raise ArgumentError(f"probability must lie in [0, 1], got {p}")
        return float(frac)

    def _consecutive_parts(self, sizes: Sequence[int]) -> List[Tuple[int, ...]]:
        """Parts of the given sizes over consecutive ids starting at 0."""
        parts, start = [], 0
        for size in sizes:
            parts.append(tuple(range(start, start + size)))
            start += size
        return parts

    def _layout(self, parts: Sequence[Sequence[int]]) -> PartiteLayout:
        return PartiteLayout(parts=parts)

    def _rng(self, seed: int) -> np.random.Generator:
        return make_rng(seed)
