"""
Seeded random constructions: binomial random hypergraphs, random k-partite hosts and
uniformly random equitable partitions.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from itertools import combinations, product
from typing import List, Sequence, Tuple, Union

import numpy as np

from hgraph import ArgumentError, Hypergraph, PartiteLayout

from .base import BaseGenerator

logger = logging.getLogger(__name__)

Probability = Union[float, Fraction, str]


class SamplingGenerator(BaseGenerator):

    def erdos_renyi(self, k: int, n: int, p: Probability, seed: int) -> Hypergraph:
        """G^k(n; p): each k-subset independently, in lexicographic draw order."""
        k = self._positive("k", k)
        n = self._positive("n", n, minimum=0)
        prob = self._probability(p)
        rng = self._rng(seed)
        candidates = list(combinations(range(n), k))
        draws = rng.random(len(candidates))
        edges = [e for e, u in zip(candidates, draws) if u < prob]
        logger.debug(f"🎲 G^{k}({n}; {prob:.4g}) kept {len(edges)}/{len(candidates)} edges")
        return Hypergraph(k=k, n=n, edges=edges)

    def random_kpartite(self, sizes: Sequence[int], p: Probability, seed: int) -> Hypergraph:
        """Each transversal of the consecutive parts kept independently with probability p."""
        if len(sizes) < 2:
            raise ArgumentError("need at least two parts")
        for idx, size in enumerate(sizes):
            self._positive(f"sizes[{idx}]", size)
        prob = self._probability(p)
        rng = self._rng(seed)
        parts = self._consecutive_parts(sizes)
        candidates = list(product(*parts))
        draws = rng.random(len(candidates))
        return Hypergraph(
            k=len(sizes),
            n=sum(sizes),
            edges=[e for e, u in zip(candidates, draws) if u < prob],
            layout=self._layout(parts),
            partite_proper=True,
        )

    def random_parts(self, n: int, k: int, part_size: int, rng: np.random.Generator) -> List[Tuple[int, ...]]:
        """k disjoint random parts of `part_size` vertices each; leftover vertices are dropped."""
        perm = [int(v) for v in rng.permutation(n)]
        return [tuple(sorted(perm[j * part_size:(j + 1) * part_size])) for j in range(k)]

    def equipartition(self, G: Hypergraph, k: int, seed: int) -> Tuple[Hypergraph, PartiteLayout]:
        k = self._positive("k", k)
        if G.n % k:
            raise ArgumentError(f"{k} does not divide {G.n}")
        parts = self.random_parts(G.n, k, G.n // k, self._rng(seed))
        layout = self._layout(parts)
        part_of = layout.part_of
        transversal = [e for e in G.edges if len(e) == k and len({part_of[v] for v in e}) == k]
        return (
            Hypergraph(k=G.k, n=G.n, edges=transversal, layout=layout, partite_proper=G.k == k),
            layout,
        )


_sampling = SamplingGenerator()


def erdos_renyi(k: int, n: int, p: Probability, seed: int) -> Hypergraph:
    return _sampling.erdos_renyi(k, n, p, seed)


def random_kpartite(sizes: Sequence[int], p: Probability, seed: int) -> Hypergraph:
    return _sampling.random_kpartite(sizes, p, seed)


def random_equipartition(G: Hypergraph, k: int, seed: int) -> Tuple[Hypergraph, PartiteLayout]:
    return _sampling.equipartition(G, k, seed)


def random_parts(n: int, k: int, part_size: int, rng: np.random.Generator) -> List[Tuple[int, ...]]:
    return _sampling.random_parts(n, k, part_size, rng)
