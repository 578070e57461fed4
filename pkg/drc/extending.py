"""
(a, d)-vertex-extension checks.

For every set S of at most d vertices outside part t, the (k-1)-traces of edges
that lie inside S must have at least `a` mutual extensions in part t. An S that
induces no trace is extended by all of part t.
"""

from __future__ import annotations

import logging
from itertools import combinations
from math import comb
from typing import FrozenSet, List, Optional, Set, Tuple

from hgraph import ArgumentError, BudgetExceeded, Edge, Hypergraph, LayoutError

from .schema import ExtensionWitness

logger = logging.getLogger(__name__)

EXTENSION_CAP = 100_000


def require_partite(G: Hypergraph) -> None:
    if G.layout is None or G.layout.num_parts != G.k or not G.partite_proper:
        raise LayoutError("needs a k-partite-proper host with exactly k parts")


def outside_traces(G: Hypergraph, t: int) -> Set[Edge]:
    """E(G^(k-2)[V_-t]): each edge with its part-t vertex removed."""
    part = set(G.layout.part(t))
    return {tuple(v for v in e if v not in part) for e in G.edges}


def mutual_extensions(G: Hypergraph, t: int, family: List[Edge]) -> FrozenSet[int]:
    """Vertices v of part t with e + {v} an edge of G for every e in the family."""
    result: FrozenSet[int] = frozenset(G.layout.part(t))
    for e in family:
        result = result & G.extensions(e)
        if not result:
            break
    return result


def extension_set_count(G: Hypergraph, t: int, d: int) -> int:
    outside = G.n - len(G.layout.part(t))
    return sum(comb(outside, j) for j in range(d + 1))


def is_vertex_extending(
    G: Hypergraph,
    t: int,
    a: int,
    d: int,
    cap: Optional[int] = EXTENSION_CAP,
    stop_at_first: bool = False,
) -> ExtensionWitness:
    require_partite(G)
    if not 0 <= t < G.k:
        raise ArgumentError(f"part index {t} outside [0, {G.k})")
    if d < 0:
        raise ArgumentError(f"d must be non-negative, got {d}")
    total = extension_set_count(G, t, d)
    if cap is not None and total > cap:
        raise BudgetExceeded(f"{total} sets to check exceeds the cap {cap}")

    traces = outside_traces(G, t)
    outside = G.layout.others(t)
    r = G.k - 1
    violations: List[Tuple[Tuple[int, ...], int]] = []
    checked = 0
    for size in range(d + 1):
        for S in combinations(outside, size):
            checked += 1
            family = [s for s in combinations(S, r) if s in traces]
            count = len(mutual_extensions(G, t, family))
            if count < a:
                violations.append((S, count))
                if stop_at_first:
                    return ExtensionWitness(t=t, a=a, d=d, violations=violations, sets_checked=checked)
    logger.debug(f"📊 part {t}: {checked} sets checked, {len(violations)} below {a}")
    return ExtensionWitness(t=t, a=a, d=d, violations=violations, sets_checked=checked)
