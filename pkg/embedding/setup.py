"""
Construction and validation of an EmbeddingSetup.
"""

from __future__ import annotations

import logging
from typing import Dict, List, Optional, Sequence, Set, Tuple

from hgraph import Hypergraph, Rational, SetupError, as_fraction, skeleton

from .schema import EmbeddingSetup

logger = logging.getLogger(__name__)


def _blocks(
    given: Optional[Sequence[Sequence[int]]],
    fallback: Optional[Hypergraph],
    name: str,
) -> List[Tuple[int, ...]]:
    if given is not None:
        return [tuple(sorted(b)) for b in given]
    if fallback is None or fallback.layout is None:
        raise SetupError(f"{name} blocks are missing: pass them or give the hypergraph a layout")
    return [tuple(b) for b in fallback.layout.parts]


def forward_neighbors(H: Hypergraph, pattern_block: Dict[int, int]) -> Dict[int, List[int]]:
    """N^+(v): skeleton neighbors of v in strictly later blocks, ascending."""
    result: Dict[int, Set[int]] = {v: set() for v in range(H.n)}
    if H.k >= 2:
        for a, b in skeleton(H, 1).edges:
            if pattern_block[b] > pattern_block[a]:
                result[a].add(b)
            elif pattern_block[a] > pattern_block[b]:
                result[b].add(a)
    return {v: sorted(ns) for v, ns in result.items()}


def build_setup(
    G: Hypergraph,
    H: Hypergraph,
    thetas: Sequence[Rational],
    d: int,
    parts_order: Optional[Sequence[int]] = None,
    host_parts: Optional[Sequence[Sequence[int]]] = None,
    pattern_parts: Optional[Sequence[Sequence[int]]] = None,
    block_class: Optional[Sequence[int]] = None,
) -> EmbeddingSetup:
    """
    Validate the setup conditions and build the forward tuples.

    Blocks default to the layouts of G and H; `parts_order` permutes both. f_v lists
    N^+(v) ascending and is padded with the smallest vertices of later blocks whose
    class differs from the class of v, cycling through them when they run out.
    """
    hosts = _blocks(host_parts, G, "host")
    patterns = _blocks(pattern_parts, H, "pattern")
    if len(hosts) != len(patterns):
        raise SetupError(f"host has {len(hosts)} blocks but pattern has {len(patterns)}")
    K = len(hosts)
    if K < 2:
        raise SetupError("a setup needs at least two blocks")
    classes = list(block_class) if block_class is not None else list(range(K))
    if len(classes) != K:
        raise SetupError("block_class needs one entry per block")
    if parts_order is not None:
        order = list(parts_order)
        if sorted(order) != list(range(K)):
            raise SetupError(f"parts_order must be a permutation of 0..{K - 1}")
        hosts = [hosts[i] for i in order]
        patterns = [patterns[i] for i in order]
        classes = [classes[i] for i in order]
    if d < 1:
        raise SetupError(f"tuple length d must be positive, got {d}")
    if G.k != H.k:
        raise SetupError(f"host is {G.k}-uniform but pattern is {H.k}-uniform")

    seen: Set[int] = set()
    for i, block in enumerate(hosts):
        for v in block:
            if not 0 <= v < G.n or v in seen:
                raise SetupError(f"host block {i} holds vertex {v} twice or outside [0, {G.n})")
            if v not in G.non_isolated:
                raise SetupError(f"host vertex {v} in block {i} is isolated")
            seen.add(v)
    pattern_block = {x: i for i, block in enumerate(patterns) for x in block}
    if sorted(pattern_block) != list(range(H.n)) or sum(len(b) for b in patterns) != H.n:
        raise SetupError("pattern blocks must partition the pattern vertices")
    for e in H.sorted_edges:
        if len({pattern_block[x] for x in e}) != H.k:
            raise SetupError(f"pattern edge {list(e)} meets a block more than once")
    if len(hosts[-1]) < len(patterns[-1]):
        raise SetupError(f"last host block has {len(hosts[-1])} vertices, fewer than the {len(patterns[-1])} it must host")
    if len(thetas) != K - 1:
        raise SetupError(f"expected {K - 1} thresholds, got {len(thetas)}")
    exact = [as_fraction(theta) for theta in thetas]
    for i, theta in enumerate(exact):
        if theta <= 0:
            raise SetupError(f"theta for block {i} must be positive, got {theta}")

    forward = forward_neighbors(H, pattern_block)
    fwd: Dict[int, Tuple[int, ...]] = {}
    for i in range(K - 1):
        for v in patterns[i]:
            ahead = forward[v]
            if len(ahead) > d:
                raise SetupError(f"vertex {v} has {len(ahead)} forward neighbors, more than d = {d}")
            f = list(ahead)
            if len(f) < d:
                eligible = sorted(
                    y for b in range(i + 1, K) if classes[b] != classes[i] for y in patterns[b]
                )
                if not eligible:
                    raise SetupError(f"no later block of another class can pad f_{v}")
                fresh = [y for y in eligible if y not in ahead]
                pool = fresh or eligible
                idx = 0
                while len(f) < d:
                    f.append(pool[idx % len(pool)])
                    idx += 1
            fwd[v] = tuple(f)

    logger.debug(f"📦 setup: K={K} blocks, d={d}, {len(fwd)} forward tuples")
    return EmbeddingSetup(
        G=G,
        H=H,
        host_parts=tuple(hosts),
        pattern_parts=tuple(patterns),
        block_class=tuple(classes),
        fwd=fwd,
        thetas=tuple(exact),
        d=d,
    )
