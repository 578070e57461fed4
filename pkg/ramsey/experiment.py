"""
Ramsey sweeps: does every coloring in a batch hold a monochromatic copy of H?

oracle    containment search in each color class of f
pipeline  kr_reduce, then a part-respecting copy of H_hat in G_hat found either by the
          containment search ("oracle" machinery) or by almost-linear pruning followed by
          anchored embedding ("extending" machinery)

Every copy is pulled back and re-checked against f before it counts.
"""

from __future__ import annotations

import logging
from itertools import product
from math import comb
from typing import Iterator, List, Optional, Tuple

from drc import anchored_embed, prune_pipeline
from hgraph import (
    ArgumentError,
    BudgetExceeded,
    EdgeColoring,
    Hypergraph,
    InvariantViolation,
    StageFailed,
    attempt_seed,
    skeletal_degeneracy,
)
from oracle import coloring_space_bits, find_embedding, find_monochromatic_copy

from .harvest import CLIQUE_CAP, harvest_monochromatic_cliques
from .reduction import check_pullback, kr_reduce, verify_monochromatic
from .schema import Machinery, RamseyReport, RamseyTrial, Strategy

logger = logging.getLogger(__name__)

RAMSEY_BITS_CAP = 24


def default_ell(H: Hypergraph) -> int:
    """max(k, d_1(H) + 1): enough colors for a greedy coloring of the 1-skeleton."""
    return max(H.k, skeletal_degeneracy(H, 1).value + 1)


def exhaustive_colorings(N: int, k: int, q: int) -> Iterator[EdgeColoring]:
    """Every q-coloring of K_N^(k) whose first edge has color 0."""
    m = comb(N, k)
    if m == 0:
        yield EdgeColoring(N=N, k=k, q=q, colors=())
        return
    for rest in product(range(q), repeat=m - 1):
        yield EdgeColoring(N=N, k=k, q=q, colors=(0,) + rest)


def _oracle_trial(f: EdgeColoring, H: Hypergraph, index: int, seed: Optional[int], budget: Optional[int]) -> Tuple[RamseyTrial, bool]:
    try:
        found = find_monochromatic_copy(f, H, budget)
    except BudgetExceeded:
        return RamseyTrial(index=index, seed=seed, success=False, failure="budget"), False
    if found is None:
        return RamseyTrial(index=index, seed=seed, success=False, failure="no-copy"), False
    color, embedding = found
    if not verify_monochromatic(f, H, embedding, color):
        raise InvariantViolation(f"coloring {index}: reported color-{color} copy does not verify")
    return RamseyTrial(index=index, seed=seed, success=True, color=color), True


def _pipeline_trial(
    f: EdgeColoring,
    H: Hypergraph,
    index: int,
    seed: Optional[int],
    ell: int,
    machinery: Machinery,
    stage_seed: int,
    budget: Optional[int],
    retries: int,
    clique_cap: Optional[int],
) -> Tuple[RamseyTrial, bool]:
    try:
        reduction = kr_reduce(f, H, ell, stage_seed, cap=clique_cap)
    except StageFailed as exc:
        return RamseyTrial(index=index, seed=seed, success=False, failure=exc.stage), False
    sizes = {"h_hat_vertices": reduction.H_hat.n, "g_hat_edges": reduction.G_hat.num_edges}

    try:
        if machinery == "oracle":
            embedding = find_embedding(reduction.H_hat, reduction.G_hat, respect_parts=True, budget=budget)
            if embedding is None:
                return RamseyTrial(index=index, seed=seed, success=False, failure="no-copy", **sizes), False
        else:
            d = max(1, skeletal_degeneracy(reduction.H_hat, 1).value)
            survivor, _ = prune_pipeline(reduction.G_hat, d, seed=stage_seed, budget=retries, schedule="almost-linear")
            embedding = anchored_embed(survivor, reduction.H_hat, seed=stage_seed, retries=retries)
    except BudgetExceeded:
        return RamseyTrial(index=index, seed=seed, success=False, failure="budget", **sizes), False
    except StageFailed as exc:
        return RamseyTrial(index=index, seed=seed, success=False, failure=exc.stage, **sizes), False

    check_pullback(f, H, reduction, embedding)
    return RamseyTrial(index=index, seed=seed, success=True, color=reduction.color, **sizes), True


def ramsey_experiment(
    H: Hypergraph,
    q: int,
    N: int,
    strategy: Strategy = "oracle",
    seed: int = 0,
    exhaustive: bool = False,
    samples: int = 16,
    ell: Optional[int] = None,
    machinery: Machinery = "oracle",
    budget: Optional[int] = None,
    retries: int = 16,
    bits_cap: Optional[float] = RAMSEY_BITS_CAP,
    clique_cap: Optional[int] = CLIQUE_CAP,
) -> RamseyReport:
    if q < 1:
        raise ArgumentError(f"q must be positive, got {q}")
    if N < 0:
        raise ArgumentError(f"N must be nonnegative, got {N}")
    if strategy not in ("oracle", "pipeline"):
        raise ArgumentError(f"unknown strategy {strategy!r}")
    if machinery not in ("oracle", "extending"):
        raise ArgumentError(f"unknown machinery {machinery!r}")
    k = H.k

    if exhaustive:
        bits = coloring_space_bits(N, k, q)
        if bits_cap is not None and bits > bits_cap:
            raise BudgetExceeded(f"exhaustive sweep spans 2^{bits:.4g} colorings, above the 2^{bits_cap} cap")
        batch = ((idx, None, f) for idx, f in enumerate(exhaustive_colorings(N, k, q)))
    else:
        if samples < 1:
            raise ArgumentError("samples must be at least 1")
        batch = (
            (idx, s, EdgeColoring.random(N, k, q, s))
            for idx, s in ((i, attempt_seed(seed, "ramsey/coloring", i)) for i in range(samples))
        )

    if strategy == "pipeline":
        ell = ell if ell is not None else default_ell(H)
    logger.info(
        f"🚀 ramsey sweep: v(H)={H.n}, k={k}, q={q}, N={N}, strategy={strategy}, "
        f"{'exhaustive' if exhaustive else f'{samples} samples'}"
    )

    trials: List[RamseyTrial] = []
    successes = 0
    verified = 0
    witness: Optional[Tuple[int, ...]] = None
    for idx, s, f in batch:
        if strategy == "oracle":
            trial, ok = _oracle_trial(f, H, idx, s, budget)
        else:
            trial, ok = _pipeline_trial(
                f, H, idx, s, ell, machinery, attempt_seed(seed, "ramsey/reduce", idx), budget, retries, clique_cap
            )
        trials.append(trial)
        if ok:
            successes += 1
            verified += 1
        elif witness is None:
            witness = f.colors
            logger.debug(f"🎲 coloring {idx} has no monochromatic copy ({trial.failure})")

    report = RamseyReport(
        k=k,
        pattern_vertices=H.n,
        q=q,
        N=N,
        strategy=strategy,
        machinery=machinery if strategy == "pipeline" else None,
        ell=ell if strategy == "pipeline" else None,
        exhaustive=exhaustive,
        colorings=len(trials),
        successes=successes,
        verified_pullbacks=verified,
        failure_witness=witness,
        trials=tuple(trials),
    )
    logger.info(f"📊 {successes}/{len(trials)} colorings held a verified monochromatic copy")
    return report


def mono_clique_floor(N: int, k: int, q: int, ell: int) -> int:
    """Fewest monochromatic ell-cliques over all q-colorings of K_N^(k), first edge fixed."""
    best: Optional[int] = None
    for f in exhaustive_colorings(N, k, q):
        total = sum(G.num_edges for G in harvest_monochromatic_cliques(f, ell).values())
        best = total if best is None else min(best, total)
    return best or 0
