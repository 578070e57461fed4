"""
Monochromatic clique harvesting: per color, the l-sets whose k-subsets all share it.
"""

from __future__ import annotations

import logging
from itertools import combinations
from math import comb
from typing import Dict, Optional

from hgraph import ArgumentError, BudgetExceeded, EdgeColoring, Hypergraph

logger = logging.getLogger(__name__)

CLIQUE_CAP = 2_000_000


def harvest_monochromatic_cliques(
    f: EdgeColoring,
    ell: int,
    cap: Optional[int] = CLIQUE_CAP,
) -> Dict[int, Hypergraph]:
    if ell < f.k:
        raise ArgumentError(f"ell = {ell} is below the uniformity {f.k}")
    total = comb(f.N, ell)
    if cap is not None and total > cap:
        raise BudgetExceeded(f"C({f.N}, {ell}) = {total} candidate sets exceeds the cap {cap}")

    color_of = dict(zip(f.edge_list, f.colors))
    found: Dict[int, list] = {c: [] for c in range(f.q)}
    for S in combinations(range(f.N), ell):
        colors = {color_of[e] for e in combinations(S, f.k)}
        if len(colors) == 1:
            found[colors.pop()].append(S)
    logger.debug(f"📊 harvested {sum(len(v) for v in found.values())} monochromatic {ell}-cliques from K_{f.N}")
    return {c: Hypergraph(k=ell, n=f.N, edges=edges) for c, edges in found.items()}
