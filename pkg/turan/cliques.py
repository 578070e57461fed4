"""
K_k^(r) cliques of an r-uniform hypergraph.

Cliques are grown on the 2-shadow. Each vertex only looks back at its neighbors
that come earlier in the shadow's degeneracy order, so every clique is produced
once (from its last vertex) and branching is bounded by the shadow degeneracy.
"""

from __future__ import annotations

import logging
from itertools import combinations
from typing import Dict, Iterator, List, Optional, Set, Tuple

from hgraph import ArgumentError, BudgetExceeded, Edge, Hypergraph, canonical, degeneracy, skeleton

logger = logging.getLogger(__name__)


def iter_cliques(G1: Hypergraph, k: int, cap: Optional[int] = None) -> Iterator[Edge]:
    r = G1.k
    if k < r:
        raise ArgumentError(f"cannot form {k}-cliques of a {r}-uniform hypergraph")
    if k == r:
        yield from G1.sorted_edges
        return
    if r < 2:
        raise ArgumentError("clique lifting needs r >= 2")

    shadow = skeleton(G1, 1)
    order = degeneracy(shadow).order
    pos = {v: idx for idx, v in enumerate(order)}
    adjacency: Dict[int, Set[int]] = {v: set() for v in range(G1.n)}
    for a, b in shadow.edges:
        adjacency[a].add(b)
        adjacency[b].add(a)
    edges = G1.edges
    produced = 0

    def closes(clique: Tuple[int, ...], w: int) -> bool:
        return all(canonical(s + (w,)) in edges for s in combinations(clique, r - 1))

    def grow(clique: Tuple[int, ...], candidates: List[int]) -> Iterator[Edge]:
        nonlocal produced
        if len(clique) == k:
            produced += 1
            if cap is not None and produced > cap:
                raise BudgetExceeded(f"clique enumeration passed {cap} cliques")
            yield canonical(clique)
            return
        for idx, w in enumerate(candidates):
            if not closes(clique, w):
                continue
            yield from grow(clique + (w,), [u for u in candidates[idx + 1:] if u in adjacency[w]])

    for v in order:
        earlier = sorted(u for u in adjacency[v] if pos[u] < pos[v])
        if len(earlier) + 1 >= k:
            yield from grow((v,), earlier)


def clique_hypergraph(G1: Hypergraph, k: int, cap: Optional[int] = None) -> Hypergraph:
    """The k-uniform hypergraph whose edges are the vertex sets of K_k^(r) cliques of G1."""
    return Hypergraph(k=k, n=G1.n, edges=list(iter_cliques(G1, k, cap)))


def count_cliques(G1: Hypergraph, k: int, cap: Optional[int] = None) -> int:
    return sum(1 for _ in iter_cliques(G1, k, cap))
