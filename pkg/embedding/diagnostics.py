"""
Setup-level statistics: gamma, the block averages mu_t(x) and the criterion that
bounds the failure probability of the greedy map.

None of these are asserted per run; they are reported next to the runs.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from itertools import product
from math import prod
from typing import Dict, NamedTuple, Optional, Sequence, Tuple

from hgraph import ArgumentError, Defect, DefectMeter, average_defect, derive_seed, make_rng

from .schema import EmbeddingSetup

logger = logging.getLogger(__name__)

TUPLE_CAP = 100_000
TUPLE_SAMPLES = 10_000


class MuEstimate(NamedTuple):
    value: Defect
    tuples: int
    sampled: bool


class Criterion(NamedTuple):
    value: Defect
    holds: bool
    exponent: int
    gamma: Fraction
    mu: Defect
    sampled: bool
    hypotheses: Dict[str, bool]


def gamma(setup: EmbeddingSetup) -> Fraction:
    """max{1, max_{i<K} |V_i| / theta_i}."""
    ratios = [Fraction(len(setup.host_parts[i]), 1) / theta for i, theta in enumerate(setup.thetas)]
    return max([Fraction(1)] + ratios)


def product_average(
    meter: DefectMeter,
    factors: Sequence[Sequence[int]],
    i: int,
    theta: Fraction,
    t: int,
    cap: int = TUPLE_CAP,
    samples: int = TUPLE_SAMPLES,
    seed: int = 0,
) -> MuEstimate:
    """
    mu_{theta,t} over the product of `factors` against block i.

    Exact when the product has at most `cap` tuples, otherwise the mean over `samples`
    uniform draws.
    """
    size = prod(len(f) for f in factors)
    if size == 0:
        raise ArgumentError("the tuple product is empty")
    if size <= cap:
        tuples = list(product(*factors))
        return MuEstimate(average_defect(meter.G, tuples, i, theta, t, meter=meter), size, False)
    rng = make_rng(seed)
    draws = [tuple(f[int(rng.integers(0, len(f)))] for f in factors) for _ in range(samples)]
    return MuEstimate(average_defect(meter.G, draws, i, theta, t, meter=meter), samples, True)


def mu_t(
    setup: EmbeddingSetup,
    x: int,
    t: int,
    cap: int = TUPLE_CAP,
    samples: int = TUPLE_SAMPLES,
    seed: int = 0,
    meter: Optional[DefectMeter] = None,
) -> MuEstimate:
    """mu_{theta_x,t}(Q_x, V_x; G); zero for vertices of the last block."""
    i = setup.pattern_block[x]
    if i == setup.K - 1:
        return MuEstimate(Defect.zero(), 0, False)
    meter = meter or DefectMeter(setup.G, setup.host_parts)
    return product_average(
        meter, setup.block_product(x), i, setup.thetas[i], t, cap, samples, derive_seed(seed, f"mu/{x}")
    )


def mu_max(
    setup: EmbeddingSetup,
    t: int,
    cap: int = TUPLE_CAP,
    samples: int = TUPLE_SAMPLES,
    seed: int = 0,
) -> MuEstimate:
    meter = DefectMeter(setup.G, setup.host_parts)
    best = MuEstimate(Defect.zero(), 0, False)
    sampled = False
    for x in sorted(setup.fwd):
        est = mu_t(setup, x, t, cap, samples, seed, meter)
        sampled = sampled or est.sampled
        if est.value > best.value:
            best = est
        if best.value.is_infinite:
            break
    return best._replace(sampled=sampled)


def embedding_criterion(
    setup: EmbeddingSetup,
    exponent: Optional[int] = None,
    cap: int = TUPLE_CAP,
    samples: int = TUPLE_SAMPLES,
    seed: int = 0,
) -> Criterion:
    """
    2^(e+2) gamma^e mu_{2e} sum_{i<K} |W_i| / theta_i, compared with 1.

    The exponent e defaults to 2d; 8d gives the variant used for the end-to-end bound.
    """
    e = 2 * setup.d if exponent is None else exponent
    if e < 1:
        raise ArgumentError(f"exponent must be positive, got {e}")
    g = gamma(setup)
    mu = mu_max(setup, 2 * e, cap, samples, seed)
    load = sum((Fraction(len(setup.pattern_parts[i])) / theta for i, theta in enumerate(setup.thetas)), Fraction(0))
    value = mu.value * (Fraction(2) ** (e + 2) * g ** e * load)
    hypotheses = {
        "last_block_room": len(setup.host_parts[-1]) >= 2 * len(setup.pattern_parts[-1]),
        "thetas_cover_blocks": all(theta >= 2 * len(setup.pattern_parts[i]) for i, theta in enumerate(setup.thetas)),
    }
    holds = value < 1 and all(hypotheses.values())
    logger.debug(f"📊 criterion e={e}: value={value}, gamma={g}, mu={mu.value}, holds={holds}")
    return Criterion(value, holds, e, g, mu.value, mu.sampled, hypotheses)
