"""
Defect moments of a pruned host.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from itertools import product
from typing import Optional, Sequence

from hgraph import (
    ArgumentError,
    BudgetExceeded,
    Defect,
    DefectMeter,
    Hypergraph,
    LayoutError,
    Rational,
    as_fraction,
)

logger = logging.getLogger(__name__)

TUPLE_CAP = 100_000


def defect_moment_sum(
    G: Hypergraph,
    i: int,
    d: int,
    theta: Rational,
    t: int,
    parts: Optional[Sequence[Sequence[int]]] = None,
    cap: Optional[int] = TUPLE_CAP,
) -> Defect:
    """Sum of omega_theta(Q, V_i; G)^t over every ordered d-tuple Q of vertices outside V_i."""
    if parts is None:
        if G.layout is None:
            raise LayoutError("defect moments need the host parts")
        parts = G.layout.parts
    if not 0 <= i < len(parts):
        raise ArgumentError(f"part index {i} outside [0, {len(parts)})")
    if d < 0 or t < 0:
        raise ArgumentError("d and t must be non-negative")
    inside = set(parts[i])
    outside = sorted(v for idx, part in enumerate(parts) if idx != i for v in part)
    total_tuples = len(outside) ** d
    if cap is not None and total_tuples > cap:
        raise BudgetExceeded(f"{total_tuples} tuples exceeds the cap {cap}")
    if inside & set(outside):
        raise LayoutError("parts overlap")

    meter = DefectMeter(G, parts)
    total = Defect.zero()
    for Q in product(outside, repeat=d):
        total = total + meter.defect(Q, i, theta) ** t
        if total.is_infinite:
            logger.debug(f"📊 part {i}: infinite defect at Q = {Q}")
            return total
    return total


def moment_bound(vertices: int, d: int, theta: Rational, t: int, part_size: int) -> Fraction:
    """The expectation ceiling 2^(2^d) (theta / |V_i|)^t v(G)^d for the moment sum after pruning."""
    if part_size <= 0:
        raise ArgumentError("part size must be positive")
    return Fraction(2 ** (2 ** d)) * (as_fraction(theta) / part_size) ** t * vertices ** d
