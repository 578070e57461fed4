"""
Degeneracy computations.

`degeneracy` peels a minimum-degree vertex (lowest id on ties) with incremental
degree counters and returns a certificate holding both sides of the min-max:
the closing order and a witness set whose induced minimum degree is the value.
"""

from __future__ import annotations

import heapq
import logging
from collections import Counter
from math import comb
from typing import Dict, List, Sequence, Tuple

from .core import edge_traces, skeleton
from .schema import DegeneracyCertificate, Hypergraph

logger = logging.getLogger(__name__)


def degeneracy(H: Hypergraph) -> DegeneracyCertificate:
    deg = [H.degree(v) for v in range(H.n)]
    alive = [True] * H.n
    dead_edges = set()
    heap = [(deg[v], v) for v in range(H.n)]
    heapq.heapify(heap)

    peel: List[int] = []
    value = 0
    witness_start = 0
    while heap:
        dv, v = heapq.heappop(heap)
        if not alive[v] or dv != deg[v]:
            continue
        if dv > value:
            value = dv
            witness_start = len(peel)
        alive[v] = False
        peel.append(v)
        for e in H.incidence.get(v, ()):
            if e in dead_edges:
                continue
            dead_edges.add(e)
            for u in e:
                if u != v:
                    deg[u] -= 1
                    heapq.heappush(heap, (deg[u], u))

    return DegeneracyCertificate(
        value=value,
        order=tuple(reversed(peel)),
        witness=tuple(sorted(peel[witness_start:])),
    )


def skeletal_degeneracy(H: Hypergraph, i: int) -> DegeneracyCertificate:
    """d_i(H) with its certificate."""
    return degeneracy(skeleton(H, i))


def skeletal_profile(H: Hypergraph) -> Tuple[int, ...]:
    """(d_1, ..., d_{k-1})."""
    return tuple(skeletal_degeneracy(H, i).value for i in range(1, H.k))


def max_skeletal_degeneracy(H: Hypergraph) -> int:
    """d_max(H); for 1-uniform input this is the plain degeneracy."""
    profile = skeletal_profile(H)
    return max(profile) if profile else degeneracy(H).value


def skeletal_binomial_check(H: Hypergraph) -> bool:
    """d_i(H) <= C(d_1(H), i) for every 1 <= i < k."""
    profile = skeletal_profile(H)
    if not profile:
        return True
    d1 = profile[0]
    return all(d_i <= comb(d1, i) for i, d_i in enumerate(profile, start=1))


def closing_counts(H: Hypergraph, order: Sequence[int]) -> List[int]:
    """For each vertex of `order`, the number of edges in which it comes last."""
    pos = {v: idx for idx, v in enumerate(order)}
    counts = [0] * len(order)
    for e in H.edges:
        counts[max(pos[v] for v in e)] += 1
    return counts


def verify_certificate(H: Hypergraph, cert: DegeneracyCertificate) -> bool:
    if sorted(cert.order) != list(range(H.n)):
        return False
    if max(closing_counts(H, cert.order), default=0) != cert.value:
        return False
    if not cert.witness:
        return cert.value == 0
    inside = set(cert.witness)
    induced_deg: Counter = Counter()
    for e in H.edges:
        if inside.issuperset(e):
            induced_deg.update(e)
    return min(induced_deg[v] for v in inside) >= cert.value


def simultaneous_ordering(H: Hypergraph) -> Tuple[int, ...]:
    """
    Order the vertices so every prefix closes few distinct edge traces.

    Built from the back: the next vertex taken from the remaining set U is one of
    minimum total degree in the trace hypergraph of U (lowest id on ties).
    """
    remaining = set(range(H.n))
    chosen: List[int] = []
    while remaining:
        score: Counter = Counter()
        for trace in edge_traces(H, remaining):
            score.update(trace)
        v = min(remaining, key=lambda u: (score[u], u))
        chosen.append(v)
        remaining.remove(v)
    return tuple(reversed(chosen))


def trace_counts(H: Hypergraph, order: Sequence[int]) -> List[int]:
    """At each position, the number of distinct traces S + {v_i} closed by v_i."""
    pos = {v: idx for idx, v in enumerate(order)}
    counts = []
    for v in order:
        limit = pos[v]
        traces = {tuple(u for u in e if pos[u] <= limit) for e in H.incidence.get(v, ())}
        counts.append(len(traces))
    return counts


def edge_count_bound_check(H: Hypergraph) -> bool:
    """e(H) <= d_1(H)^(k-1) * n."""
    if H.k < 2:
        raise ValueError("edge_count_bound_check needs k >= 2")
    d1 = skeletal_degeneracy(H, 1).value
    return H.num_edges <= d1 ** (H.k - 1) * H.n


def greedy_coloring(H: Hypergraph) -> Dict[int, int]:
    """
    Proper coloring of skeleton(H, 1) along its degeneracy order.

    Each vertex has at most d_1(H) earlier neighbors, so at most d_1(H) + 1 colors are used.
    """
    if H.k < 2:
        return {v: 0 for v in range(H.n)}
    graph = skeleton(H, 1)
    cert = degeneracy(graph)
    adjacency: Dict[int, set] = {v: set() for v in range(H.n)}
    for a, b in graph.edges:
        adjacency[a].add(b)
        adjacency[b].add(a)
    coloring: Dict[int, int] = {}
    for v in cert.order:
        used = {coloring[u] for u in adjacency[v] if u in coloring}
        c = 0
        while c in used:
            c += 1
        coloring[v] = c
    return coloring
