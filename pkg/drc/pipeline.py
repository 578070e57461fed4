"""
Iterated pruning towards a host that is vertex-extending to every part.

Two schedules are supported:

standard       k-1 rounds against parts 1..k-1 with set bounds d_t = (lam+1)^(k-t+1) d,
               then a final round against part k sampled from its non-isolated vertices.
               Target: (h, d)-extending to every part.
almost-linear  k rounds, all sampled from the whole part, with d' = d + k and
               d_t = (lam+1)^(k-t) d'. Target: (h, d + k)-extending to every part.

A stage with set bound d_t samples lam * d_t vertices (the final standard stage samples
((lam+1)^2 - 1) d). Every count can be overridden through PruneParams. Attempts run
with derived seeds until the survivor is nonempty and extending, else StageFailed.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from itertools import product
from typing import List, NamedTuple, Optional, Tuple

from hgraph import (
    ArgumentError,
    Hypergraph,
    InvariantViolation,
    LayoutError,
    Rational,
    StageFailed,
    attempt_seed,
    canonical,
    make_rng,
)

from .extending import is_vertex_extending, require_partite
from .rounds import apply_round, replay_round, sample_with_replacement
from .schema import PruneParams, PruneStage, PruneTrace, Schedule

logger = logging.getLogger(__name__)


class StagePlan(NamedTuple):
    part: int
    samples: int
    pool: str
    set_bound: int
    epsilon: Optional[Fraction]


def integer_cube_root_ceil(n: int) -> int:
    """Smallest a >= 1 with a^3 >= n."""
    a = max(1, round(n ** (1 / 3)))
    while a ** 3 < n:
        a += 1
    while a > 1 and (a - 1) ** 3 >= n:
        a -= 1
    return a


def default_epsilon0(k: int, d: int) -> Fraction:
    """3^(-k(k+3)/2) * d^(-(k-1))."""
    return Fraction(1, 3 ** (k * (k + 3) // 2) * d ** (k - 1))


def plan_stages(
    k: int,
    d: int,
    schedule: Schedule,
    params: PruneParams,
    epsilon0: Fraction,
) -> List[StagePlan]:
    lam = params.lam
    plan: List[StagePlan] = []
    eps = epsilon0
    if schedule == "standard":
        for t in range(1, k):
            d_t = (lam + 1) ** (k - t + 1) * d
            eps = eps * (lam + 1) * d_t
            plan.append(StagePlan(t - 1, lam * d_t, "part", d_t, eps))
        plan.append(StagePlan(k - 1, ((lam + 1) ** 2 - 1) * d, "non-isolated", d, None))
    elif schedule == "almost-linear":
        d_prime = d + k
        for t in range(1, k + 1):
            d_t = (lam + 1) ** (k - t) * d_prime
            eps = eps * (lam + 1) * d_t
            plan.append(StagePlan(t - 1, lam * d_t, "part", d_t, eps))
    else:
        raise ArgumentError(f"unknown schedule {schedule!r}")

    if params.stage_samples is not None:
        if len(params.stage_samples) != len(plan):
            raise ArgumentError(f"stage_samples needs {len(plan)} entries, got {len(params.stage_samples)}")
        plan = [stage._replace(samples=u) for stage, u in zip(plan, params.stage_samples)]
    return plan


def _meets_density(edges: int, n: int, k: int, eps: Fraction) -> bool:
    """edges >= n^(k - eps), compared exactly as edges^q >= n^(kq - p)."""
    if edges <= 0:
        return False
    p, q = eps.numerator, eps.denominator
    if k * q - p <= 0:
        return True
    return edges ** q >= n ** (k * q - p)


def product_contained(G: Hypergraph, parts: List[Tuple[int, ...]]) -> bool:
    return all(G.has_edge(canonical(f)) for f in product(*[sorted(set(p)) for p in parts]))


def prune_pipeline(
    G: Hypergraph,
    d: int,
    epsilon0: Optional[Rational] = None,
    seed: int = 0,
    budget: int = 16,
    params: Optional[PruneParams] = None,
    schedule: Schedule = "standard",
) -> Tuple[Hypergraph, PruneTrace]:
    require_partite(G)
    sizes = {len(part) for part in G.layout.parts}
    if len(sizes) != 1:
        raise LayoutError("the pruning pipeline needs equal part sizes")
    if d < 1:
        raise ArgumentError(f"d must be positive, got {d}")
    if budget < 1:
        raise ArgumentError("budget must allow at least one attempt")
    k = G.k
    n = sizes.pop()
    params = params or PruneParams()
    h = params.h or integer_cube_root_ceil(n)
    target = d if schedule == "standard" else d + k
    eps0 = Fraction(epsilon0) if epsilon0 is not None else default_epsilon0(k, d)
    plan = plan_stages(k, d, schedule, params, eps0)
    diagnostics = {
        "schedule": schedule,
        "k": k,
        "n": n,
        "d": d,
        "h": h,
        "target_set_bound": target,
        "epsilon0": str(eps0),
        "stage_samples": [s.samples for s in plan],
    }
    logger.info(f"🚀 pruning: k={k}, n={n} per part, d={d}, h={h}, schedule={schedule}")

    if G.num_edges == 0:
        raise StageFailed("prune", "host has no edges", diagnostics)
    if not _meets_density(G.num_edges, n, k, eps0):
        logger.warning(f"⚠️ e(G) = {G.num_edges} is below n^(k - eps0); proceeding")
        diagnostics["density_below_epsilon0"] = True

    best: Optional[PruneTrace] = None
    for attempt in range(budget):
        rng = make_rng(attempt_seed(seed, "prune", attempt))
        current = G
        stages: List[PruneStage] = []
        for stage in plan:
            if stage.pool == "part":
                pool = list(G.layout.part(stage.part))
            else:
                pool = sorted(set(current.layout.part(stage.part)) & current.non_isolated)
            if not pool:
                break
            X = sample_with_replacement(pool, stage.samples, rng)
            nxt = apply_round(current, stage.part, X)
            replay_round(current, nxt, stage.part, X)
            stages.append(
                PruneStage(
                    part=stage.part,
                    samples=X,
                    pool=stage.pool,
                    set_bound=stage.set_bound,
                    edges_before=current.num_edges,
                    edges_after=nxt.num_edges,
                    epsilon=str(stage.epsilon) if stage.epsilon is not None else None,
                    density_ok=_meets_density(nxt.num_edges, n, k, stage.epsilon) if stage.epsilon is not None else None,
                )
            )
            current = nxt

        complete = len(stages) == len(plan) and current.num_edges > 0
        extending: Tuple[bool, ...] = ()
        if complete:
            extending = tuple(
                is_vertex_extending(current, r, h, target, cap=params.extension_cap, stop_at_first=True).extending
                for r in range(k)
            )
        trace = PruneTrace(schedule=schedule, stages=tuple(stages), survivor=current, attempt=attempt, extending=extending)

        if complete and schedule == "standard" and not product_contained(current, trace.product):
            raise InvariantViolation("survivor misses part of the sampled product")
        if complete and all(extending):
            logger.info(f"✅ pruning succeeded on attempt {attempt}: {current.num_edges} edges survive")
            return current, trace

        if best is None or (sum(trace.extending), trace.survivor.num_edges) > (sum(best.extending), best.survivor.num_edges):
            best = trace
        logger.warning(
            f"⚠️ attempt {attempt}: {current.num_edges} edges, extending parts {sum(extending)}/{k}"
        )

    diagnostics["attempts"] = budget
    diagnostics["best"] = best.to_payload() if best is not None else None
    logger.error(f"❌ pruning failed after {budget} attempts")
    raise StageFailed("prune", f"no nonempty extending survivor in {budget} attempts", diagnostics, trace=best)
