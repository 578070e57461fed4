"""
The random greedy map V(H) -> V(G) and the per-block defect budget that certifies it.

The last block is placed first, uniformly without repetition. Every earlier block,
from the back, is ordered by non-increasing defect omega(x; psi) (ascending id on
ties) and each vertex x_j is drawn from

    3a  all of V_i           when N_j is empty
    3b  N_j                  when 2|L_j| < |N_j|
    3c  L_j                  otherwise

where N_j is the common neighborhood of PE_{psi(f_x)}(G) inside V_i and L_j drops
the images already used in V_i.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Dict, List, Tuple

from hgraph import ArgumentError, Defect, DefectMeter, PreconditionError, make_rng
from oracle import verify_embedding

from .schema import Case, EmbeddingSetup, GreedyRun

logger = logging.getLogger(__name__)


def _pick(pool: List[int], rng) -> int:
    return pool[int(rng.integers(0, len(pool)))]


def random_greedy_embed(setup: EmbeddingSetup, seed: int) -> GreedyRun:
    rng = make_rng(seed)
    K = setup.K
    meter = DefectMeter(setup.G, setup.host_parts)
    psi: Dict[int, int] = {}
    order: List[int] = []
    case_log: Dict[int, Case] = {}
    defect_log: Dict[int, Defect] = {}
    sizes: Dict[int, Tuple[int, int]] = {}

    available = list(setup.host_parts[K - 1])
    for x in setup.pattern_parts[K - 1]:
        v = available.pop(int(rng.integers(0, len(available))))
        psi[x] = v
        order.append(x)
        case_log[x] = "first"
        defect_log[x] = Defect.zero()

    for i in range(K - 2, -1, -1):
        theta = setup.thetas[i]
        block = setup.host_parts[i]
        omega = {x: meter.defect([psi[y] for y in setup.fwd[x]], i, theta) for x in setup.pattern_parts[i]}
        # stable sort: equal defects keep ascending id
        ranked = sorted(sorted(setup.pattern_parts[i]), key=lambda x: omega[x], reverse=True)
        used: set = set()
        for x in ranked:
            N = meter.neighborhood([psi[y] for y in setup.fwd[x]], i)
            L = N - used
            if not N:
                case: Case = "3a"
                v = _pick(list(block), rng)
            elif 2 * len(L) < len(N):
                case = "3b"
                v = _pick(sorted(N), rng)
            else:
                case = "3c"
                v = _pick(sorted(L), rng)
            psi[x] = v
            used.add(v)
            order.append(x)
            case_log[x] = case
            defect_log[x] = omega[x]
            sizes[x] = (len(N), len(L))
            if case != "3c":
                logger.debug(f"⚠️ block {i}: vertex {x} placed by case {case} (|N|={len(N)}, |L|={len(L)})")

    return GreedyRun(
        setup=setup,
        seed=seed,
        psi=psi,
        order=tuple(order),
        case_log=case_log,
        defect_log=defect_log,
        sizes=sizes,
    )


def block_defect_sums(run: GreedyRun, s: int) -> List[Defect]:
    """sum over x in W_i of omega(x; psi)^s, for every block but the last."""
    setup = run.setup
    sums = []
    for i in range(setup.K - 1):
        total = Defect.zero()
        for x in setup.pattern_parts[i]:
            total = total + run.defect_log[x] ** s
        sums.append(total)
    return sums


def check_embedding_conditions(run: GreedyRun, s: int) -> bool:
    """
    True when every block i < K keeps sum omega(x; psi)^s within theta_i / 2.

    Requires theta_i >= 2|W_i| for every such block; a run meeting the budget is an
    embedding.
    """
    if s < 1:
        raise ArgumentError(f"s must be at least 1, got {s}")
    setup = run.setup
    for i, theta in enumerate(setup.thetas):
        if theta < 2 * len(setup.pattern_parts[i]):
            raise PreconditionError(f"theta_{i} = {theta} is below 2|W_{i}| = {2 * len(setup.pattern_parts[i])}")
    if set(run.psi) != set(range(setup.H.n)):
        raise PreconditionError("the run does not map every pattern vertex")
    return all(total <= Fraction(theta, 2) for total, theta in zip(block_defect_sums(run, s), setup.thetas))


def verify_run(run: GreedyRun) -> bool:
    return verify_embedding(run.setup.H, run.setup.G, run.as_embedding())
