"""
Exact Turán and Ramsey numbers at tiny scale, plus monochromatic-copy search.

Both searches walk the k-subsets of [n] in lexicographic order and prune with the
containment oracle. Budgets count search nodes; when one runs out the best
partial result travels on the BudgetExceeded.
"""

from __future__ import annotations

import logging
from itertools import combinations
from math import comb, log2
from typing import List, Optional, Sequence, Tuple

from hgraph import (
    ArgumentError,
    BudgetExceeded,
    EdgeColoring,
    Edge,
    Embedding,
    Hypergraph,
)

from .schema import RamseyBound
from .search import find_embedding

logger = logging.getLogger(__name__)

TURAN_EDGE_CAP = 28


def _contains(H: Hypergraph, k: int, n: int, edges: Sequence[Edge]) -> bool:
    if len(edges) < H.num_edges:
        return False
    return find_embedding(H, Hypergraph(k=k, n=n, edges=edges)) is not None


class _NodeCounter:
    def __init__(self, budget: Optional[int]):
        self.budget = budget
        self.nodes = 0

    def tick(self) -> bool:
        self.nodes += 1
        return self.budget is not None and self.nodes > self.budget


def greedy_hfree(n: int, H: Hypergraph) -> Hypergraph:
    """Lexicographic greedy H-free hypergraph; a cheap lower bound on ex(n, H)."""
    chosen: List[Edge] = []
    for e in combinations(range(n), H.k):
        chosen.append(e)
        if _contains(H, H.k, n, chosen):
            chosen.pop()
    return Hypergraph(k=H.k, n=n, edges=chosen)


def brute_force_turan(
    n: int,
    H: Hypergraph,
    cap: int = TURAN_EDGE_CAP,
    budget: Optional[int] = None,
) -> Tuple[int, Hypergraph]:
    """
    ex(n, H) with an H-free witness.

    Include-first branch and bound over the lexicographic k-subsets. Above `cap`
    candidate edges a node `budget` is required.
    """
    if n < 0:
        raise ArgumentError(f"n must be non-negative, got {n}")
    k = H.k
    candidates = list(combinations(range(n), k))
    m = len(candidates)
    if m > cap and budget is None:
        fallback = greedy_hfree(n, H)
        raise BudgetExceeded(
            f"C({n}, {k}) = {m} candidate edges exceeds the cap {cap}; pass a budget",
            best=(fallback.num_edges, fallback),
        )

    counter = _NodeCounter(budget)
    chosen: List[Edge] = []
    best: List = [0, ()]
    exhausted = False

    def search(idx: int) -> None:
        nonlocal exhausted
        if exhausted:
            return
        if counter.tick():
            exhausted = True
            return
        if len(chosen) > best[0]:
            best[0], best[1] = len(chosen), tuple(chosen)
        if idx == m or len(chosen) + (m - idx) <= best[0]:
            return
        chosen.append(candidates[idx])
        if not _contains(H, k, n, chosen):
            search(idx + 1)
        chosen.pop()
        search(idx + 1)

    search(0)
    witness = Hypergraph(k=k, n=n, edges=best[1])
    if exhausted:
        raise BudgetExceeded(
            f"Turán search passed {budget} nodes; best so far {best[0]}",
            best=(best[0], witness),
        )
    logger.debug(f"✅ ex({n}, H) = {best[0]} after {counter.nodes} nodes")
    return best[0], witness


def avoiding_coloring(
    H: Hypergraph,
    q: int,
    N: int,
    counter: Optional[_NodeCounter] = None,
) -> Optional[Tuple[int, ...]]:
    """
    A q-coloring of K_N^(k) with no monochromatic H, or None if every coloring has one.

    Color symmetry is broken by letting an edge open at most one new color: the
    first edge always gets color 0.
    """
    k = H.k
    edges = list(combinations(range(N), k))
    m = len(edges)
    counter = counter or _NodeCounter(None)
    colors: List[int] = []
    classes: List[List[Edge]] = [[] for _ in range(q)]

    def search(idx: int, used: int) -> bool:
        if counter.tick():
            raise BudgetExceeded(f"coloring search passed {counter.budget} nodes")
        if idx == m:
            return True
        for c in range(min(q, used + 1)):
            classes[c].append(edges[idx])
            colors.append(c)
            if not _contains(H, k, N, classes[c]) and search(idx + 1, max(used, c + 1)):
                return True
            colors.pop()
            classes[c].pop()
        return False

    return tuple(colors) if search(0, 0) else None


def brute_force_ramsey(
    H: Hypergraph,
    q: int,
    N_max: int,
    budget: Optional[int] = None,
) -> RamseyBound:
    """Smallest N <= N_max forcing a monochromatic H in every q-coloring of K_N^(k)."""
    if q < 2:
        raise ArgumentError(f"q must be at least 2, got {q}")
    start = max(1, H.n)
    counter = _NodeCounter(budget)
    witness: Optional[Tuple[int, ...]] = None
    if H.num_edges == 0:
        return RamseyBound(value=start, n_max=N_max) if start <= N_max else RamseyBound(n_max=N_max)
    for N in range(start, N_max + 1):
        try:
            found = avoiding_coloring(H, q, N, counter)
        except BudgetExceeded as exc:
            exc.best = RamseyBound(n_max=N - 1, avoiding_witness=witness)
            raise
        if found is None:
            logger.debug(f"✅ every {q}-coloring of K_{N} contains the pattern")
            return RamseyBound(value=N, n_max=N_max, avoiding_witness=witness)
        witness = found
        logger.debug(f"🎲 K_{N} has an avoiding {q}-coloring")
    return RamseyBound(n_max=N_max, avoiding_witness=witness)


def find_monochromatic_copy(
    coloring: EdgeColoring,
    H: Hypergraph,
    budget: Optional[int] = None,
) -> Optional[Tuple[int, Embedding]]:
    """First color class (ascending) that contains H, with the embedding."""
    for c in range(coloring.q):
        embedding = find_embedding(H, coloring.color_class(c), budget=budget)
        if embedding is not None:
            return c, embedding
    return None


def coloring_space_bits(N: int, k: int, q: int) -> float:
    """log2 of the number of colorings once the first edge's color is fixed."""
    edges = comb(N, k)
    return max(edges - 1, 0) * log2(q)
