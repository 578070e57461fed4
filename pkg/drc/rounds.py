"""
Single dependent-random-choice rounds.

A round against part t keeps an edge e exactly when every substitution of its
part-t vertex by a sampled x is again an edge. The simultaneous round samples a
tuple in every part and keeps e when the whole product of {e_i} + X_i lies in G.
Both rounds re-check their output against the definition before returning.
"""

from __future__ import annotations

import logging
from itertools import product
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from hgraph import (
    ArgumentError,
    Edge,
    Hypergraph,
    InvariantViolation,
    canonical,
    induced,
    make_rng,
)

from .extending import require_partite
from .schema import SimultaneousPrune

logger = logging.getLogger(__name__)


def sample_with_replacement(pool: Sequence[int], u: int, rng) -> Tuple[int, ...]:
    if u == 0:
        return ()
    picks = rng.integers(0, len(pool), size=u)
    return tuple(int(pool[j]) for j in picks)


def apply_round(G: Hypergraph, t: int, samples: Sequence[int]) -> Hypergraph:
    """Survivors of the round against part t for a fixed sample X_t."""
    part = set(G.layout.part(t))
    wanted = frozenset(samples)
    survivors_of: Dict[Edge, bool] = {}
    kept = []
    for e in G.sorted_edges:
        trace = tuple(v for v in e if v not in part)
        if trace not in survivors_of:
            survivors_of[trace] = wanted <= G.extensions(trace)
        if survivors_of[trace]:
            kept.append(e)
    return G.with_edges(kept)


def replay_round(G: Hypergraph, G_out: Hypergraph, t: int, samples: Sequence[int]) -> None:
    """Raise InvariantViolation unless G_out is exactly the survivor set of the round."""
    part = set(G.layout.part(t))
    for e in G.edges:
        rest = [v for v in e if v not in part]
        expected = all(G.has_edge(rest + [x]) for x in samples)
        if expected != G_out.has_edge(e):
            raise InvariantViolation(f"edge {list(e)} disagrees with the survival rule for part {t}")
    if not G_out.edges <= G.edges:
        raise InvariantViolation("round produced an edge outside the input")


def drc_round(
    G: Hypergraph,
    t: int,
    u: int,
    seed: int,
    pool: Optional[Sequence[int]] = None,
) -> Tuple[Hypergraph, Tuple[int, ...]]:
    """Sample u vertices of part t (or of `pool`) with replacement and keep the survivors."""
    require_partite(G)
    if not 0 <= t < G.k:
        raise ArgumentError(f"part index {t} outside [0, {G.k})")
    if u < 0:
        raise ArgumentError(f"u must be non-negative, got {u}")
    source = list(G.layout.part(t) if pool is None else pool)
    if not source:
        raise ArgumentError(f"part {t} has no vertex to sample")
    samples = sample_with_replacement(source, u, make_rng(seed))
    G_out = apply_round(G, t, samples)
    replay_round(G, G_out, t, samples)
    logger.debug(f"🎲 round on part {t}: {G.num_edges} -> {G_out.num_edges} edges")
    return G_out, samples


def _product_survives(G: Hypergraph, choices: List[Tuple[int, ...]]) -> bool:
    return all(canonical(f) in G.edges for f in product(*choices))


def replay_simultaneous(G: Hypergraph, kept: FrozenSet[Edge], samples: Sequence[Sequence[int]]) -> None:
    part_of = G.layout.part_of
    for e in G.edges:
        by_part: List[List[int]] = [[] for _ in range(G.k)]
        for v in e:
            by_part[part_of[v]].append(v)
        expected = True
        for f in product(*[by_part[i] + list(samples[i]) for i in range(G.k)]):
            if not G.has_edge(f):
                expected = False
                break
        if expected != (e in kept):
            raise InvariantViolation(f"edge {list(e)} disagrees with the product survival rule")


def simultaneous_prune(G: Hypergraph, t: int, seed: int) -> SimultaneousPrune:
    """Sample X_i of length t in every part at once and keep the edges whose product survives."""
    require_partite(G)
    sizes = {len(part) for part in G.layout.parts}
    if len(sizes) != 1:
        raise ArgumentError("simultaneous pruning needs equal part sizes")
    if t < 0:
        raise ArgumentError(f"tuple length must be non-negative, got {t}")
    rng = make_rng(seed)
    samples = tuple(sample_with_replacement(G.layout.part(i), t, rng) for i in range(G.k))

    part_of = G.layout.part_of
    kept = []
    for e in G.sorted_edges:
        choices: List[Tuple[int, ...]] = [()] * G.k
        for v in e:
            i = part_of[v]
            choices[i] = tuple(sorted({v, *samples[i]}))
        if _product_survives(G, choices):
            kept.append(e)
    kept_set = frozenset(kept)
    replay_simultaneous(G, kept_set, samples)

    pruned = G.with_edges(kept)
    origin = tuple(sorted(pruned.non_isolated))
    survivor = induced(pruned, origin, relabel=True)
    logger.debug(f"🎲 simultaneous round: {G.num_edges} -> {len(kept)} edges on {len(origin)} vertices")
    return SimultaneousPrune(survivor=survivor, samples=samples, origin=origin, kept_edges=len(kept))
