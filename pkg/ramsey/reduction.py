"""
Coloring-to-containment reduction.

A q-coloring f of K_N^(k) and a pattern H become an l-partite pair (H_hat, G_hat):
H_hat lifts H along a proper coloring of its 1-skeleton, G_hat keeps the
transversal color-c l-cliques of one random equitable l-partition of [N].
Any part-respecting copy of H_hat in G_hat pulls back to a copy of H all of
whose edges have color c.
"""

from __future__ import annotations

import logging
from typing import Optional

from generators import lift_to_uniformity, random_parts
from hgraph import (
    ArgumentError,
    EdgeColoring,
    Embedding,
    Hypergraph,
    InvariantViolation,
    PartiteLayout,
    SetupError,
    StageFailed,
    UniformityError,
    canonical,
    derive_seed,
    greedy_coloring,
    make_rng,
)

from .harvest import CLIQUE_CAP, harvest_monochromatic_cliques
from .schema import Reduction

logger = logging.getLogger(__name__)


def kr_reduce(
    f: EdgeColoring,
    H: Hypergraph,
    ell: int,
    seed: int,
    cap: Optional[int] = CLIQUE_CAP,
) -> Reduction:
    if H.k != f.k:
        raise UniformityError(f"pattern is {H.k}-uniform but the coloring is on {f.k}-sets")
    if ell < f.k:
        raise ArgumentError(f"ell = {ell} is below the uniformity {f.k}")
    if f.N < ell:
        raise ArgumentError(f"N = {f.N} is too small for {ell} nonempty parts")

    coloring = greedy_coloring(H)
    used = max(coloring.values(), default=-1) + 1
    if used > ell:
        raise SetupError(f"greedy coloring of the 1-skeleton needs {used} colors, more than ell = {ell}")
    H_hat = lift_to_uniformity(H, ell, coloring)

    cliques = harvest_monochromatic_cliques(f, ell, cap)
    counts = {c: cliques[c].num_edges for c in range(f.q)}
    ranked = sorted(range(f.q), key=lambda c: (-counts[c], c))

    part_size = f.N // ell
    parts = random_parts(f.N, ell, part_size, make_rng(derive_seed(seed, "ramsey/parts")))
    origin = tuple(v for part in parts for v in part)
    new_id = {v: idx for idx, v in enumerate(origin)}
    part_of = {v: j for j, part in enumerate(parts) for v in part}
    layout = PartiteLayout(parts=[list(range(j * part_size, (j + 1) * part_size)) for j in range(ell)])

    for c in ranked:
        edges = [
            canonical(new_id[v] for v in S)
            for S in cliques[c].sorted_edges
            if all(v in part_of for v in S) and len({part_of[v] for v in S}) == ell
        ]
        if not edges:
            logger.debug(f"🔄 color {c} has no transversal {ell}-cliques in the sampled parts")
            continue
        G_hat = Hypergraph(k=ell, n=len(origin), edges=edges, layout=layout, partite_proper=True)
        logger.info(
            f"📊 reduction: color {c}, {counts[c]} cliques, {len(edges)} transversal, "
            f"H_hat has {H_hat.n} vertices"
        )
        return Reduction(
            H_hat=H_hat,
            G_hat=G_hat,
            color=c,
            ell=ell,
            pattern_vertices=H.n,
            parts=tuple(tuple(part) for part in parts),
            origin=origin,
            clique_counts=counts,
        )

    raise StageFailed(
        "reduce",
        "no color has a transversal clique in the sampled parts",
        {"ell": ell, "part_size": part_size, "clique_counts": {str(c): m for c, m in counts.items()}},
    )


def pullback(reduction: Reduction, embedding: Embedding) -> Embedding:
    """Restrict a copy of H_hat in G_hat to V(H) and map it back to [N]."""
    missing = [x for x in range(reduction.pattern_vertices) if x not in embedding.mapping]
    if missing:
        raise ArgumentError(f"embedding leaves pattern vertices {missing[:5]} unmapped")
    return Embedding(
        mapping={x: reduction.origin[embedding.mapping[x]] for x in range(reduction.pattern_vertices)}
    )


def verify_monochromatic(f: EdgeColoring, H: Hypergraph, embedding: Embedding, color: int) -> bool:
    """Injective on V(H), and every edge of H lands on an f-edge of the given color."""
    mapping = embedding.mapping
    if set(mapping) != set(range(H.n)):
        return False
    images = list(mapping.values())
    if len(set(images)) != len(images) or any(not 0 <= v < f.N for v in images):
        return False
    return all(f.color(embedding.image(e)) == color for e in H.edges)


def check_pullback(f: EdgeColoring, H: Hypergraph, reduction: Reduction, embedding: Embedding) -> Embedding:
    copy = pullback(reduction, embedding)
    if not verify_monochromatic(f, H, copy, reduction.color):
        raise InvariantViolation(f"pullback of a copy of H_hat is not a color-{reduction.color} copy of H")
    return copy


def lift_vertex_bound(H: Hypergraph, ell: int, d: int) -> int:
    """(1 + (ell - k) d^(k-1)) v(H)."""
    return (1 + (ell - H.k) * d ** (H.k - 1)) * H.n
