"""
Exhaustive containment search.

Pattern vertices are placed in simultaneous-ordering order. The candidates for a
vertex x are the host vertices that extend, for every pattern edge through x, the
image of the part of that edge already placed to a partial edge of the host.
"""

from __future__ import annotations

import logging
from typing import Dict, FrozenSet, Iterator, List, Optional, Set

from hgraph import (
    BudgetExceeded,
    Embedding,
    Hypergraph,
    InvariantViolation,
    LayoutError,
    UniformityError,
    simultaneous_ordering,
)

logger = logging.getLogger(__name__)


class ContainmentSearch:
    """Backtracking search for copies of H in G."""

    def __init__(
        self,
        H: Hypergraph,
        G: Hypergraph,
        respect_parts: bool = False,
        budget: Optional[int] = None,
    ):
        if H.k != G.k:
            raise UniformityError(f"pattern is {H.k}-uniform but host is {G.k}-uniform")
        if respect_parts:
            if H.layout is None or G.layout is None:
                raise LayoutError("part-respecting search needs layouts on both sides")
            if H.layout.num_parts != G.layout.num_parts:
                raise LayoutError(
                    f"pattern has {H.layout.num_parts} parts but host has {G.layout.num_parts}"
                )
        self.H = H
        self.G = G
        self.respect_parts = respect_parts
        self.budget = budget
        self.nodes = 0
        self.order = simultaneous_ordering(H)
        everything = frozenset(range(G.n))
        self._domain: Dict[int, FrozenSet[int]] = {}
        for x in range(H.n):
            if respect_parts:
                self._domain[x] = frozenset(G.layout.part(H.part_of(x)))
            else:
                self._domain[x] = everything

    def _candidates(self, x: int, phi: Dict[int, int], used: Set[int]) -> List[int]:
        cands: Optional[FrozenSet[int]] = None
        for e in self.H.incidence.get(x, ()):
            mapped = [phi[u] for u in e if u in phi]
            ext = self.G.extensions(mapped)
            cands = ext if cands is None else cands & ext
            if not cands:
                return []
        pool = self._domain[x] if cands is None else cands & self._domain[x]
        return sorted(c for c in pool if c not in used)

    def _search(self, depth: int, phi: Dict[int, int], used: Set[int]) -> Iterator[Dict[int, int]]:
        if depth == len(self.order):
            yield dict(phi)
            return
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise BudgetExceeded(f"containment search passed {self.budget} nodes")
        x = self.order[depth]
        for c in self._candidates(x, phi, used):
            phi[x] = c
            used.add(c)
            yield from self._search(depth + 1, phi, used)
            used.discard(c)
            del phi[x]

    def embeddings(self) -> Iterator[Embedding]:
        if self.H.n > self.G.n:
            return
        for mapping in self._search(0, {}, set()):
            yield Embedding(mapping=mapping, part_respecting=self.respect_parts)

    def first(self) -> Optional[Embedding]:
        return next(self.embeddings(), None)


def find_embedding(
    H: Hypergraph,
    G: Hypergraph,
    respect_parts: bool = False,
    budget: Optional[int] = None,
) -> Optional[Embedding]:
    """A copy of H in G, or None after an exhaustive search."""
    embedding = ContainmentSearch(H, G, respect_parts, budget).first()
    if embedding is not None and not verify_embedding(H, G, embedding):
        raise InvariantViolation("containment search returned a map that does not verify")
    return embedding


def verify_embedding(H: Hypergraph, G: Hypergraph, embedding: Embedding) -> bool:
    """Injective, total on V(H), edge-preserving and, when flagged, part-respecting."""
    mapping = embedding.mapping
    if set(mapping) != set(range(H.n)):
        return False
    images = list(mapping.values())
    if len(set(images)) != len(images) or any(not 0 <= v < G.n for v in images):
        return False
    if any(not G.has_edge(embedding.image(e)) for e in H.edges):
        return False
    if embedding.part_respecting:
        if H.layout is None or G.layout is None:
            return False
        return all(G.part_of(mapping[x]) == H.part_of(x) for x in range(H.n))
    return True
