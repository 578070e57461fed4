"""
Latin squares and their 3-partite hypergraphs.
"""

from __future__ import annotations

import logging
from typing import List

from hgraph import ArgumentError, Hypergraph, LatinSquare

from .base import BaseGenerator

logger = logging.getLogger(__name__)


class LatinGenerator(BaseGenerator):
    ROW_TRIES = 200
    RESTARTS = 1000

    def cyclic(self, d: int) -> LatinSquare:
        d = self._positive("d", d)
        return LatinSquare(d=d, cells=[[(i + j) % d for j in range(d)] for i in range(d)])

    def random(self, d: int, seed: int) -> LatinSquare:
        """Rows drawn as uniform permutations, rejected on a column clash; restart when stuck."""
        d = self._positive("d", d)
        rng = self._rng(seed)
        for restart in range(self.RESTARTS):
            rows: List[List[int]] = []
            columns = [set() for _ in range(d)]
            while len(rows) < d:
                for _ in range(self.ROW_TRIES):
                    row = [int(x) for x in rng.permutation(d)]
                    if all(row[c] not in columns[c] for c in range(d)):
                        break
                else:
                    break
                rows.append(row)
                for c in range(d):
                    columns[c].add(row[c])
            if len(rows) == d:
                if restart:
                    logger.debug(f"🎲 Latin square of order {d} after {restart} restarts")
                return LatinSquare(d=d, cells=rows)
        raise ArgumentError(f"no Latin square of order {d} found within {self.RESTARTS} restarts")

    def hypergraph(self, L: LatinSquare) -> Hypergraph:
        """Rows 0..d-1, columns d..2d-1, symbols 2d..3d-1; (i, j, L[i][j]) is an edge."""
        d = L.d
        edges = [(i, d + j, 2 * d + L.cells[i][j]) for i in range(d) for j in range(d)]
        parts = [tuple(range(p * d, (p + 1) * d)) for p in range(3)]
        return Hypergraph(k=3, n=3 * d, edges=edges, layout=self._layout(parts), partite_proper=True)


_latin = LatinGenerator()


def cyclic_latin_square(d: int) -> LatinSquare:
    return _latin.cyclic(d)


def random_latin_square(d: int, seed: int) -> LatinSquare:
    return _latin.random(d, seed)


def latin_square_hypergraph(L: LatinSquare) -> Hypergraph:
    return _latin.hypergraph(L)
