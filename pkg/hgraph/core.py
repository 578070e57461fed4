"""
Skeletons, partial edges, restricted partial edges and common neighborhoods.
"""

from __future__ import annotations

import logging
from itertools import combinations
from typing import Dict, Iterable, Optional, Sequence

from .errors import SizeError
from .schema import Edge, Hypergraph, PartialEdgeSet, PartiteLayout, canonical

logger = logging.getLogger(__name__)


def skeleton(H: Hypergraph, i: int) -> Hypergraph:
    """H^(i): all (i+1)-subsets of edges of H, on the same vertex set and layout."""
    if not 0 <= i < H.k:
        raise IndexError(f"skeleton index {i} outside [0, {H.k})")
    if i == H.k - 1:
        return H
    edges = {c for e in H.edges for c in combinations(e, i + 1)}
    return Hypergraph(
        k=i + 1,
        n=H.n,
        edges=edges,
        layout=H.layout,
        partite_proper=H.partite_proper,
    )


def partial_edges(G: Hypergraph) -> PartialEdgeSet:
    return PartialEdgeSet(members=G.partial_members)


def pe_restricted(G: Hypergraph, Q: Iterable[int]) -> PartialEdgeSet:
    """PE_Q(G): the partial edges of G contained in Q."""
    q = canonical(set(Q))
    members = G.partial_members
    found = []
    for r in range(min(len(q), G.k) + 1):
        found.extend(s for s in combinations(q, r) if s in members)
    return PartialEdgeSet(members=found)


def common_neighborhood(G: Hypergraph, E: PartialEdgeSet | Iterable[Sequence[int]]):
    """
    N(E; G): vertices v with e + {v} a partial edge for every e in E (v not in e).

    An empty family returns every vertex of G.
    """
    family = E.members if isinstance(E, PartialEdgeSet) else {canonical(e) for e in E}
    for e in family:
        if len(e) >= G.k:
            raise SizeError(f"partial edge {list(e)} has size {len(e)} >= k = {G.k}")
    result: Optional[frozenset] = None
    # smallest extension sets first so the intersection shrinks early
    for ext in sorted((G.extensions(e) for e in family), key=len):
        result = ext if result is None else result & ext
        if not result:
            return frozenset()
    return frozenset(range(G.n)) if result is None else result


def induced(H: Hypergraph, vertices: Iterable[int], relabel: bool = False) -> Hypergraph:
    """
    The subhypergraph induced on `vertices`.

    Without relabelling the vertex set stays [0, n) and the layout is kept. With
    relabelling the kept vertices become 0..m-1 in ascending order and the layout is
    restricted to them (empty parts dropped).
    """
    keep = set(vertices)
    edges = [e for e in H.edges if keep.issuperset(e)]
    if not relabel:
        return H.with_edges(edges)
    order = sorted(keep)
    index: Dict[int, int] = {v: idx for idx, v in enumerate(order)}
    layout = None
    if H.layout is not None:
        parts = [[index[v] for v in part if v in index] for part in H.layout.parts]
        layout = PartiteLayout(parts=[p for p in parts if p])
    return Hypergraph(
        k=H.k,
        n=len(order),
        edges=[tuple(index[v] for v in e) for e in edges],
        layout=layout,
        partite_proper=H.partite_proper and layout is not None,
    )


def edge_traces(H: Hypergraph, vertices: Iterable[int]) -> set[Edge]:
    """Distinct nonempty traces e ∩ U over the edges of H."""
    keep = set(vertices)
    traces = set()
    for e in H.edges:
        t = tuple(v for v in e if v in keep)
        if t:
            traces.add(t)
    return traces
