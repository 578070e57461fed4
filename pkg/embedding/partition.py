"""
Partitions feeding the greedy embedding.

h_partition peels the pattern skeleton by degree: U_1 = V(H), U_{i+1} keeps the
vertices of degree >= 4d inside skeleton[U_i]. Level i is U_i minus U_{i+1}, split by
the pattern parts.

g_partition trims the host parts of vertices that carry too much defect mass, then
assigns every surviving vertex of B_j independently to block V_i^(j) with
probability p_i / 2, and keeps an assignment only after checking the block sizes and
the block defect averages directly.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from itertools import product
from typing import Dict, List, Optional, Sequence, Set, Tuple

from hgraph import (
    ArgumentError,
    Defect,
    DefectMeter,
    DegeneracyError,
    Hypergraph,
    InvariantViolation,
    LayoutError,
    Rational,
    StageFailed,
    as_fraction,
    attempt_seed,
    derive_seed,
    make_rng,
    skeletal_degeneracy,
    skeleton,
)

from .diagnostics import TUPLE_CAP, product_average
from .schema import GPartition, HPartition

logger = logging.getLogger(__name__)

INDEX_CAP = 100_000
INDEX_SAMPLES = 10_000


def _adjacency(H: Hypergraph) -> Dict[int, Set[int]]:
    adjacency: Dict[int, Set[int]] = {v: set() for v in range(H.n)}
    if H.k >= 2:
        for a, b in skeleton(H, 1).edges:
            adjacency[a].add(b)
            adjacency[b].add(a)
    return adjacency


def check_h_partition(H: Hypergraph, partition: HPartition) -> List[str]:
    """Every conclusion of the peeling, checked from scratch. Returns the failures."""
    problems: List[str] = []
    n = H.n
    T = partition.T
    if n and not (T == 1 or 2 ** T <= n):
        problems.append(f"(i) T = {T} exceeds log2 {n}")
    for i, level in enumerate(partition.blocks):
        for j, block in enumerate(level):
            if len(block) * 2 ** i > n:
                problems.append(f"(ii) block ({i}, {j}) has {len(block)} vertices")
    for j, part in enumerate(H.layout.parts):
        union = sorted(x for level in partition.blocks for x in level[j])
        if union != sorted(part):
            problems.append(f"(iii) levels of part {j} do not recover it")
    adjacency = _adjacency(H)
    level_of = {x: i for x, (i, _) in partition.block_of.items()}
    for x, i in level_of.items():
        later = sum(1 for y in adjacency[x] if level_of[y] >= i)
        if later > partition.threshold:
            problems.append(f"(iv) vertex {x} has {later} neighbors at level >= {i}")
    return problems


def h_partition(H: Hypergraph, d: int) -> HPartition:
    if H.layout is None or H.layout.num_parts != H.k:
        raise LayoutError("h_partition needs a k-part layout on the pattern")
    if d < 1:
        raise ArgumentError(f"d must be positive, got {d}")
    if H.k >= 2:
        d1 = skeletal_degeneracy(H, 1).value
        if d < d1:
            raise DegeneracyError(f"d = {d} is below the skeletal degeneracy {d1}")
    threshold = 4 * d
    adjacency = _adjacency(H)

    levels: List[Set[int]] = []
    U = set(range(H.n))
    while U:
        heavy = {v for v in U if len(adjacency[v] & U) >= threshold}
        levels.append(U - heavy)
        U = heavy
    part_of = H.layout.part_of
    blocks = tuple(
        tuple(tuple(sorted(v for v in level if part_of[v] == j)) for j in range(H.k)) for level in levels
    )
    partition = HPartition(d=d, threshold=threshold, blocks=blocks)
    problems = check_h_partition(H, partition)
    if problems:
        raise InvariantViolation("; ".join(problems))
    logger.debug(f"📦 h-partition: T={partition.T} levels at threshold {threshold}")
    return partition


def level_probabilities(T: int, d: int) -> List[float]:
    """p_i = c 2^(-i/(80d)), normalised to sum to 1."""
    weights = [2 ** (-(i + 1) / (80 * d)) for i in range(T)]
    total = sum(weights)
    return [w / total for w in weights]


def _part_mu(
    meter: DefectMeter,
    parts: Sequence[Sequence[int]],
    j: int,
    d: int,
    theta: Fraction,
    t: int,
    cap: int,
    samples: int,
    seed: int,
):
    outside = [v for idx, part in enumerate(parts) if idx != j for v in part]
    if not outside:
        return None
    return product_average(meter, [outside] * d, j, theta, t, cap, samples, seed)


def _heavy_vertices(
    meter: DefectMeter,
    parts: Sequence[Sequence[int]],
    i: int,
    d: int,
    theta: Fraction,
    t: int,
    cap: int,
    samples: int,
    seed: int,
) -> Tuple[Set[int], bool]:
    """R_i: vertices v outside A_i whose tuples Q containing v carry defect mass >= |A_{-i}|^(d - 5/8)."""
    outside = [v for idx, part in enumerate(parts) if idx != i for v in part]
    if not outside:
        return set(), False
    total = len(outside) ** d
    mass: Dict[int, Defect] = {v: Defect.zero() for v in outside}
    sampled = total > cap
    if sampled:
        rng = make_rng(seed)
        tuples = [tuple(outside[int(rng.integers(0, len(outside)))] for _ in range(d)) for _ in range(samples)]
        scale = Fraction(total, samples)
    else:
        tuples = list(product(outside, repeat=d))
        scale = Fraction(1)
    for Q in tuples:
        w = meter.defect(Q, i, theta) ** t
        if w == 0:
            continue
        for v in set(Q):
            mass[v] = mass[v] + w
    limit = len(outside) ** (d - 5 / 8)
    heavy = {v for v, m in mass.items() if m.is_infinite or float(m.value * scale) >= limit}
    return heavy, sampled


def _index_tuples(T: int, k: int, d: int, rng, cap: int, samples: int):
    """(i, j, levels, parts) tuples for the block average check, exhaustive under the cap."""
    count = T * k * T ** d * (k - 1) ** d
    if count <= cap:
        for i, j in product(range(T), range(k)):
            others = [c for c in range(k) if c != j]
            for levels in product(range(T), repeat=d):
                for classes in product(others, repeat=d):
                    yield i, j, levels, classes
        return
    for _ in range(samples):
        i = int(rng.integers(0, T))
        j = int(rng.integers(0, k))
        others = [c for c in range(k) if c != j]
        levels = tuple(int(rng.integers(0, T)) for _ in range(d))
        classes = tuple(others[int(rng.integers(0, len(others)))] for _ in range(d))
        yield i, j, levels, classes


def g_partition(
    G: Hypergraph,
    T: int,
    d: int,
    t: int,
    theta: Rational,
    p_schedule: Optional[Sequence[float]] = None,
    epsilon: float = 0.5,
    epsilon_prime: float = 0.5,
    seed: int = 0,
    retries: int = 64,
    tuple_cap: int = TUPLE_CAP,
    tuple_samples: int = 2_000,
    index_cap: int = INDEX_CAP,
    index_samples: int = INDEX_SAMPLES,
) -> GPartition:
    """
    Disjoint blocks V_i^(j) inside the host parts A_j, sized within [p_i|A_j|/4, p_i|A_j|],
    whose block averages mu_{theta_i,t} stay below max{eps', 8 eps^(-d) k^d mu_{theta,t}(A_{-j}^d, A_j)}.

    Hypotheses are checked and reported, never enforced. Raises StageFailed when no
    attempt passes both checks.
    """
    if G.layout is None:
        raise LayoutError("g_partition needs the host parts")
    if T < 1 or d < 1 or t < 1:
        raise ArgumentError("T, d and t must be positive")
    if retries < 1:
        raise ArgumentError("retries must be at least 1")
    k = G.layout.num_parts
    if k < 2:
        raise LayoutError("g_partition needs at least two host parts")
    theta = as_fraction(theta)
    if theta <= 0:
        raise ArgumentError(f"theta must be positive, got {theta}")
    p = list(p_schedule) if p_schedule is not None else level_probabilities(T, d)
    if len(p) != T:
        raise ArgumentError(f"p_schedule needs {T} entries, got {len(p)}")
    parts = [list(part) for part in G.layout.parts]
    m = max(len(part) for part in parts)
    if m == 0:
        raise ArgumentError("host parts are empty")
    meter = DefectMeter(G, parts)

    part_mu: List[Optional[Defect]] = []
    sampled = False
    for j in range(k):
        est = _part_mu(meter, parts, j, d, theta, t, tuple_cap, tuple_samples, derive_seed(seed, f"g-partition/mu/{j}"))
        part_mu.append(None if est is None else est.value)
        sampled = sampled or (est is not None and est.sampled)
    hypotheses = {
        "part_sizes_in_window": all(epsilon * m <= len(part) <= m for part in parts),
        "part_defect_below_half": all(mu is not None and mu < Fraction(1, 2) for mu in part_mu),
        "probabilities_sum_at_most_one": sum(p) <= 1 + 1e-12,
        "probabilities_large_enough": all(pi >= m ** (-1 / (10 * d)) for pi in p),
        "moment_at_least_4d": t >= 4 * d,
        "theta_at_least_eps_m": theta >= Fraction(epsilon) * m,
    }
    for name, ok in hypotheses.items():
        if not ok:
            logger.warning(f"⚠️ g-partition hypothesis not met: {name}")

    heavy: Set[int] = set()
    for i in range(k):
        R_i, was_sampled = _heavy_vertices(
            meter, parts, i, d, theta, t, tuple_cap, tuple_samples, derive_seed(seed, f"g-partition/heavy/{i}")
        )
        heavy |= R_i
        sampled = sampled or was_sampled
    trimmed = [tuple(v for v in part if v not in heavy) for part in parts]
    logger.info(f"📦 g-partition: trimmed {len(heavy)} heavy vertices, B sizes {[len(b) for b in trimmed]}")

    thetas = tuple(theta * Fraction(pi) / 4 for pi in p)
    bounds = []
    for mu in part_mu:
        if mu is None or mu.is_infinite:
            bounds.append(Defect.infinite())
        else:
            bounds.append(Defect.of(max(Fraction(epsilon_prime), 8 * Fraction(epsilon) ** (-d) * k ** d * mu.value)))

    last: Dict = {}
    for attempt in range(retries):
        rng = make_rng(attempt_seed(seed, "g-partition", attempt))
        q = [pi / 2 for pi in p]
        blocks: List[List[List[int]]] = [[[] for _ in range(k)] for _ in range(T)]
        for j, B in enumerate(trimmed):
            draws = rng.random(len(B))
            for v, u in zip(B, draws):
                acc = 0.0
                for i, qi in enumerate(q):
                    acc += qi
                    if u < acc:
                        blocks[i][j].append(v)
                        break

        sizes_ok = all(
            p[i] * len(parts[j]) / 4 <= len(blocks[i][j]) <= p[i] * len(parts[j]) for i in range(T) for j in range(k)
        )
        if not sizes_ok:
            last = {"attempt": attempt, "reason": "block sizes", "block_sizes": [[len(b) for b in lv] for lv in blocks]}
            logger.debug(f"🔄 g-partition attempt {attempt}: block sizes outside the window")
            continue

        # one meter per attempt, targets indexed as i * k + j
        block_meter = DefectMeter(G, [blocks[i][j] for i in range(T) for j in range(k)])
        worst = Defect.zero()
        checked = 0
        within = True
        index_sampled = T * k * T ** d * (k - 1) ** d > index_cap
        for i, j, levels, classes in _index_tuples(T, k, d, rng, index_cap, index_samples):
            factors = [blocks[li][cj] for li, cj in zip(levels, classes)]
            est = product_average(
                block_meter,
                factors,
                i * k + j,
                thetas[i],
                t,
                tuple_cap,
                tuple_samples,
                derive_seed(seed, f"g-partition/{attempt}/{checked}"),
            )
            checked += 1
            sampled = sampled or est.sampled
            if est.value > worst:
                worst = est.value
            if est.value > bounds[j]:
                within = False
                break
        if within:
            result = GPartition(
                blocks=tuple(tuple(tuple(sorted(b)) for b in level) for level in blocks),
                thetas=thetas,
                trimmed=tuple(trimmed),
                attempt=attempt,
                bound=min(bounds),
                worst=worst,
                index_tuples=checked,
                sampled=sampled or index_sampled,
                hypotheses=hypotheses,
            )
            logger.info(f"✅ g-partition accepted on attempt {attempt} ({checked} index tuples)")
            return result
        last = {"attempt": attempt, "reason": "block defect average", "worst": str(worst), "bound": str(bounds[j])}
        logger.debug(f"🔄 g-partition attempt {attempt}: block average {worst} over the bound")

    diagnostics = {"retries": retries, "hypotheses": hypotheses, "last": last, "trimmed": len(heavy)}
    logger.error(f"❌ g-partition failed after {retries} attempts")
    raise StageFailed("g-partition", f"no assignment passed the checks in {retries} attempts", diagnostics)
