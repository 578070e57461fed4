"""
Greedy embedding into a host that is vertex-extending to every part.

The pattern is first augmented with one anchor per part. The anchors go onto an
edge of the host; every other vertex is then placed, in skeleton degeneracy
order, onto an unused vertex of its part that extends every (k-1)-trace spanned by
the images of its earlier skeleton neighbors.
"""

from __future__ import annotations

import logging
from itertools import combinations
from typing import Dict, List, Optional

from generators import augment_with_anchors
from hgraph import (
    ArgumentError,
    Embedding,
    Hypergraph,
    LayoutError,
    StageFailed,
    UniformityError,
    attempt_seed,
    degeneracy,
    make_rng,
    skeleton,
)
from oracle import verify_embedding

from .extending import require_partite

logger = logging.getLogger(__name__)


def anchored_order(H_hat: Hypergraph, anchors: List[int]) -> List[int]:
    """Anchors first, then the remaining vertices in skeleton degeneracy order."""
    order = degeneracy(skeleton(H_hat, 1)).order
    anchor_set = set(anchors)
    return list(anchors) + [v for v in order if v not in anchor_set]


def _attempt(G: Hypergraph, H_hat: Hypergraph, order: List[int], anchors: List[int], rng) -> Optional[Dict[int, int]]:
    k = G.k
    graph = skeleton(H_hat, 1)
    neighbors: Dict[int, set] = {v: set() for v in range(H_hat.n)}
    for a, b in graph.edges:
        neighbors[a].add(b)
        neighbors[b].add(a)

    edges = G.sorted_edges
    anchor_edge = edges[int(rng.integers(0, len(edges)))]
    phi: Dict[int, int] = {}
    for j, anchor in enumerate(anchors):
        phi[anchor] = next(v for v in anchor_edge if G.part_of(v) == j)
    used = set(phi.values())

    for x in order[k:]:
        i = H_hat.part_of(x)
        earlier = sorted(phi[u] for u in neighbors[x] if u in phi)
        family = [s for s in combinations(earlier, k - 1) if s in G.partial_members]
        candidates = set(G.layout.part(i)) - used
        for s in family:
            candidates &= G.extensions(s)
            if not candidates:
                break
        if not candidates:
            logger.debug(f"⚠️ no admissible image for pattern vertex {x} in part {i}")
            return None
        pool = sorted(candidates)
        phi[x] = pool[int(rng.integers(0, len(pool)))]
        used.add(phi[x])
    return phi


def anchored_embed(G: Hypergraph, H: Hypergraph, seed: int, retries: int = 8) -> Embedding:
    """A part-respecting copy of H in G."""
    require_partite(G)
    if H.k != G.k:
        raise UniformityError(f"pattern is {H.k}-uniform but host is {G.k}-uniform")
    if H.layout is None or H.layout.num_parts != H.k or not H.partite_proper:
        raise LayoutError("pattern needs a k-partite-proper layout with k parts")
    if retries < 1:
        raise ArgumentError("retries must be at least 1")
    if G.num_edges == 0:
        raise StageFailed("anchored-embed", "host has no edges", {"retries": retries})

    H_hat = augment_with_anchors(H)
    anchors = [H.n + j for j in range(H.k)]
    order = anchored_order(H_hat, anchors)

    for attempt in range(retries):
        phi = _attempt(G, H_hat, order, anchors, make_rng(attempt_seed(seed, "anchored", attempt)))
        if phi is None:
            continue
        embedding = Embedding(mapping={x: phi[x] for x in range(H.n)}, part_respecting=True)
        if verify_embedding(H, G, embedding):
            logger.info(f"✅ anchored embedding found on attempt {attempt}")
            return embedding
        logger.warning(f"⚠️ attempt {attempt} produced a map that does not verify")

    raise StageFailed(
        "anchored-embed",
        f"no admissible placement in {retries} attempts",
        {"retries": retries, "pattern_vertices": H.n, "host_vertices": G.n},
    )
