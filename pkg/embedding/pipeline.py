"""
End-to-end embedding of a k-partite pattern into a dense k-partite host.

Stages, each failing with StageFailed under its own name:

    constants    eta, theta and the moment t; subasymptotic defaults stop here
    prune        simultaneous pruning round with tuple length t, retried until nonempty
    g-partition  host blocks V_i^(j) with thresholds theta_i = p_i theta / 4
    setup        pattern blocks W_i^(j) and host blocks in lexicographic (i, j) order
    embed        random greedy map, retried until it verifies
"""

from __future__ import annotations

import logging
from math import log2
from typing import Any, Dict, List, Optional, Tuple

from hgraph import (
    Embedding,
    Hypergraph,
    LayoutError,
    PartiteLayout,
    SetupError,
    StageFailed,
    UniformityError,
    attempt_seed,
    derive_seed,
    skeletal_degeneracy,
)
from drc import simultaneous_prune
from oracle import verify_embedding

from .greedy import random_greedy_embed, verify_run
from .partition import g_partition, h_partition
from .schema import PipelineOverrides, PipelineResult
from .setup import build_setup

logger = logging.getLogger(__name__)


def log2_default_eta(p: float, k: int, d: int) -> float:
    """log2 of p^((4d/(k-1)) (16d+1)^k) / (2^(2^(4d)+1) k^(4d+1))."""
    if p <= 0:
        return float("-inf")
    return (4 * d / (k - 1)) * (16 * d + 1) ** k * log2(p) - (2 ** (4 * d) + 1) - (4 * d + 1) * log2(k)


def pad_last_level(H: Hypergraph, blocks) -> Tuple[Hypergraph, List[List[List[int]]], List[int]]:
    """Give every empty block of the last level a fresh isolated vertex of its part."""
    levels = [[list(b) for b in level] for level in blocks]
    parts = [list(part) for part in H.layout.parts]
    fresh: List[int] = []
    n = H.n
    for j, block in enumerate(levels[-1]):
        if not block:
            block.append(n)
            parts[j].append(n)
            fresh.append(n)
            n += 1
    if not fresh:
        return H, levels, fresh
    padded = Hypergraph(k=H.k, n=n, edges=H.edges, layout=PartiteLayout(parts=parts), partite_proper=True)
    return padded, levels, fresh


def linear_turan_pipeline(
    G: Hypergraph,
    H: Hypergraph,
    overrides: Optional[PipelineOverrides] = None,
    seed: int = 0,
) -> PipelineResult:
    overrides = overrides or PipelineOverrides()
    if G.layout is None or not G.partite_proper or G.layout.num_parts != G.k:
        raise LayoutError("host must be k-partite with k parts")
    if H.layout is None or not H.partite_proper or H.layout.num_parts != H.k:
        raise LayoutError("pattern must be k-partite with k parts")
    if G.k != H.k:
        raise UniformityError(f"host is {G.k}-uniform but pattern is {H.k}-uniform")
    sizes = {len(part) for part in G.layout.parts}
    if len(sizes) != 1:
        raise LayoutError("host parts must have equal size")
    k = G.k
    if k < 2:
        raise UniformityError("the pipeline needs k >= 2")
    n = sizes.pop()
    d = max(1, skeletal_degeneracy(H, 1).value)
    diagnostics: Dict[str, Any] = {"k": k, "n": n, "d": d, "pattern_vertices": H.n}

    # constants
    density = G.num_edges / n ** k if n else 0.0
    log_eta = log2_default_eta(density, k, d)
    log_theta = 3 * log_eta + log2(n) if n else float("-inf")
    regime = "asymptotic" if log_theta >= 0 else "subasymptotic"
    diagnostics["constants"] = {"density": density, "log2_eta": log_eta, "log2_theta": log_theta, "regime": regime}
    if overrides.theta is None and overrides.eta is None and regime == "subasymptotic":
        logger.error(f"❌ default constants give theta = 2^{log_theta:.4g} < 1")
        raise StageFailed("constants", "subasymptotic", {**diagnostics, "regime": "subasymptotic"})

    if overrides.theta is not None:
        theta = overrides.theta
        eta = overrides.eta if overrides.eta is not None else (theta / n) ** (1 / 3)
    else:
        eta = overrides.eta if overrides.eta is not None else 2 ** log_eta
        theta = eta ** 3 * n
    t = overrides.t or 16 * d
    prune_t = overrides.prune_t if overrides.prune_t is not None else t
    length = overrides.tuple_length or 4 * d
    epsilon = overrides.epsilon or min(1.0, eta ** 3)
    epsilon_prime = overrides.epsilon_prime or max(eta ** (34 * d), 1e-300)
    diagnostics["parameters"] = {
        "eta": eta,
        "theta": theta,
        "t": t,
        "prune_t": prune_t,
        "tuple_length": length,
        "epsilon": epsilon,
        "epsilon_prime": epsilon_prime,
    }
    logger.info(f"🚀 pipeline: k={k}, n={n}, d={d}, theta={theta:.4g}, t={t}, tuple length {length}")

    hpart = h_partition(H, d)
    H_pad, pattern_levels, fresh = pad_last_level(H, hpart.blocks)
    diagnostics["h_partition"] = {"T": hpart.T, "padding": fresh}

    # prune
    pruned = None
    for attempt in range(overrides.prune_retries):
        candidate = simultaneous_prune(G, prune_t, attempt_seed(seed, "pipeline/prune", attempt))
        if candidate.survivor.num_edges > 0:
            pruned = candidate
            diagnostics["prune"] = {"attempt": attempt, "kept_edges": candidate.kept_edges, "vertices": candidate.survivor.n}
            break
    if pruned is None:
        raise StageFailed("prune", f"every pruning round came out empty in {overrides.prune_retries} attempts", diagnostics)
    host = pruned.survivor

    gpart = g_partition(
        host,
        hpart.T,
        length,
        t,
        theta,
        epsilon=epsilon,
        epsilon_prime=epsilon_prime,
        seed=derive_seed(seed, "pipeline/g-partition"),
        retries=overrides.partition_retries,
        tuple_cap=overrides.tuple_cap,
        tuple_samples=overrides.tuple_samples,
    )
    diagnostics["g_partition"] = gpart.diagnostics()

    order = [(i, j) for i in range(hpart.T) for j in range(k)]
    host_parts = [gpart.blocks[i][j] for i, j in order]
    pattern_parts = [pattern_levels[i][j] for i, j in order]
    thetas = [gpart.thetas[i] for i, _ in order[:-1]]
    try:
        setup = build_setup(
            host,
            H_pad,
            thetas,
            length,
            host_parts=host_parts,
            pattern_parts=pattern_parts,
            block_class=[j for _, j in order],
        )
    except SetupError as exc:
        raise StageFailed("setup", str(exc), diagnostics) from exc

    cases: Dict[str, int] = {}
    for attempt in range(overrides.embed_retries):
        run = random_greedy_embed(setup, attempt_seed(seed, "pipeline/embed", attempt))
        for case in run.case_log.values():
            cases[case] = cases.get(case, 0) + 1
        if not verify_run(run):
            logger.debug(f"🔄 greedy attempt {attempt} did not verify")
            continue
        mapping = {x: pruned.origin[run.psi[x]] for x in range(H.n)}
        embedding = Embedding(mapping=mapping, part_respecting=True)
        if not verify_embedding(H, G, embedding):
            raise StageFailed("embed", "verified block embedding failed to lift to the host", diagnostics)
        diagnostics["embed"] = {"attempt": attempt, "cases": cases}
        logger.info(f"✅ pipeline embedded {H.n} vertices on attempt {attempt}")
        return PipelineResult(embedding=embedding, regime=regime, diagnostics=diagnostics)

    diagnostics["embed"] = {"attempts": overrides.embed_retries, "cases": cases}
    logger.error(f"❌ no greedy run verified in {overrides.embed_retries} attempts")
    raise StageFailed("embed", f"no greedy run verified in {overrides.embed_retries} attempts", diagnostics)
