"""
Deterministic families: complete k-partite hypergraphs and bipartite hedgehogs.
"""

from __future__ import annotations

from itertools import product
from typing import Sequence

from hgraph import ArgumentError, Hypergraph

from .base import BaseGenerator


class FamilyGenerator(BaseGenerator):
    """Closed-form constructions with a layout attached."""

    def complete_kpartite(self, sizes: Sequence[int]) -> Hypergraph:
        """K^(k)_{sizes}: every transversal of the parts is an edge."""
        sizes = list(sizes)
        if len(sizes) < 2:
            raise ArgumentError(f"need at least two parts, got {len(sizes)}")
        for idx, size in enumerate(sizes):
            self._positive(f"sizes[{idx}]", size)
        parts = self._consecutive_parts(sizes)
        return Hypergraph(
            k=len(sizes),
            n=sum(sizes),
            edges=product(*parts),
            layout=self._layout(parts),
            partite_proper=True,
        )

    def bipartite_hedgehog(self, k: int, d: int) -> Hypergraph:
        """
        K_{d,d} with each edge (i, j) extended by k-2 private vertices, one per middle part.

        Ids: part 0 is 0..d-1, part 1 is d..2d-1, middle part m holds the d^2 vertices
        2d + m*d^2 + i*d + j.
        """
        if not isinstance(k, int) or k < 2:
            raise ArgumentError(f"hedgehogs need k >= 2, got {k!r}")
        d = self._positive("d", d)
        parts = [tuple(range(d)), tuple(range(d, 2 * d))]
        for m in range(k - 2):
            base = 2 * d + m * d * d
            parts.append(tuple(range(base, base + d * d)))
        edges = []
        for i in range(d):
            for j in range(d):
                middle = [2 * d + m * d * d + i * d + j for m in range(k - 2)]
                edges.append((i, d + j, *middle))
        return Hypergraph(
            k=k,
            n=2 * d + (k - 2) * d * d,
            edges=edges,
            layout=self._layout(parts),
            partite_proper=True,
        )


_families = FamilyGenerator()


def complete_kpartite(sizes: Sequence[int]) -> Hypergraph:
    return _families.complete_kpartite(sizes)


def bipartite_hedgehog(k: int, d: int) -> Hypergraph:
    return _families.bipartite_hedgehog(k, d)
