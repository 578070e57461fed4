"""
Deletion-method lower bounds for Turán numbers.

Both constructions sample a binomial random hypergraph, delete one edge per
forbidden copy until none is left, and report how the result compares with the
edge count the construction guarantees.
"""

from __future__ import annotations

import logging
from math import comb
from typing import Optional, Tuple

from generators import complete_kpartite, erdos_renyi
from hgraph import (
    ArgumentError,
    BudgetExceeded,
    Hypergraph,
    InvariantViolation,
    PreconditionError,
    attempt_seed,
    derive_seed,
    induced,
    skeleton,
)
from oracle import find_embedding

from .cliques import clique_hypergraph, count_cliques
from .schema import DeletionReport

logger = logging.getLogger(__name__)


def min_degree_subhypergraph(H: Hypergraph, i: int, d: int) -> Optional[Hypergraph]:
    """
    The d-core of H^(i): the largest subhypergraph with minimum degree >= d.

    Vertices are relabelled onto 0..m-1 in ascending order. None when the core is
    empty, which happens exactly when d_i(H) < d.
    """
    if not 1 <= i < H.k:
        raise ArgumentError(f"skeleton index {i} outside [1, {H.k})")
    S = skeleton(H, i)
    alive = set(range(S.n))
    deg = {v: S.degree(v) for v in alive}
    live_edges = set(S.edges)
    stack = [v for v in sorted(alive) if deg[v] < d]
    while stack:
        v = stack.pop()
        if v not in alive:
            continue
        alive.discard(v)
        for e in S.incidence.get(v, ()):
            if e not in live_edges:
                continue
            live_edges.discard(e)
            for u in e:
                if u != v and u in alive:
                    deg[u] -= 1
                    if deg[u] < d:
                        stack.append(u)
    if not alive:
        return None
    return induced(S, alive, relabel=True)


def remove_copies(G: Hypergraph, F: Hypergraph, budget: Optional[int] = None) -> Tuple[Hypergraph, int]:
    """
    Delete the lexicographically least image edge of a copy of F until G is F-free.

    Returns the F-free hypergraph and the number of edges removed.
    """
    if F.num_edges == 0:
        raise ArgumentError("the forbidden hypergraph needs at least one edge")
    edges = set(G.edges)
    removed = 0
    current = G
    while True:
        copy = find_embedding(F, current, budget=budget)
        if copy is None:
            return current, removed
        edges.discard(min(copy.image(e) for e in F.edges))
        removed += 1
        current = G.with_edges(edges)


def _skipped(report_fields: dict, exc: BudgetExceeded, partial: Hypergraph) -> BudgetExceeded:
    report = DeletionReport(hfree_verified="skipped", **report_fields)
    return BudgetExceeded(str(exc), best=(partial, report))


def deletion_construction_complete(
    k: int,
    d: int,
    n: int,
    seed: int,
    budget: Optional[int] = None,
) -> Tuple[Hypergraph, DeletionReport]:
    """A K^(k)_{d,...,d}-free k-uniform hypergraph on n vertices."""
    if k < 2 or d < 2:
        raise ArgumentError(f"need k, d >= 2, got k={k}, d={d}")
    if n < 1:
        raise ArgumentError(f"n must be positive, got {n}")
    p = float(n) ** (-k / d ** (k - 1))
    stage_seed = derive_seed(seed, "turan/complete")
    G0 = erdos_renyi(k, n, p, stage_seed)
    F = complete_kpartite([d] * k)
    floor = n ** (k - k / d ** (k - 1)) / k ** k - 1
    regime = "asymptotic" if floor >= 1 else "subasymptotic"
    logger.info(f"🎲 sampled G^{k}({n}; {p:.4g}) with {G0.num_edges} edges")

    fields = dict(
        family="complete",
        n=n,
        p=p,
        seed=stage_seed,
        sampled_edges=G0.num_edges,
        floor=floor,
        regime=regime,
    )
    try:
        G, removed = remove_copies(G0, F, budget)
    except BudgetExceeded as exc:
        raise _skipped({**fields, "removed": 0, "final_edges": G0.num_edges}, exc, G0) from exc

    hfree = find_embedding(F, G) is None
    if not hfree:
        logger.error("❌ deletion left a forbidden copy behind")
    report = DeletionReport(
        removed=removed,
        final_edges=G.num_edges,
        meets_floor=G.num_edges >= floor if regime == "asymptotic" else None,
        hfree_verified=hfree,
        **fields,
    )
    logger.info(f"✅ complete construction: {G.num_edges} edges after removing {removed}")
    return G, report


def deletion_construction_skeletal(
    H: Hypergraph,
    i: int,
    d: int,
    n: int,
    seed: int,
    retries: int = 1,
    budget: Optional[int] = None,
    clique_cap: Optional[int] = None,
) -> Tuple[Hypergraph, DeletionReport]:
    """
    An H-free k-uniform hypergraph from the cliques of an F-free r-uniform one.

    F is the d-core of H^(i) and r = i + 1. Attempts use derived seeds until the
    clique bookkeeping Z = X - C(n, k-r) * Y is positive; the last attempt is kept
    when none is.
    """
    k = H.k
    if not 1 <= i < k:
        raise ArgumentError(f"skeleton index {i} outside [1, {k})")
    r = i + 1
    if d <= comb(k, r):
        raise PreconditionError(f"d = {d} must exceed C({k}, {r}) = {comb(k, r)}")
    F = min_degree_subhypergraph(H, i, d)
    if F is None:
        raise PreconditionError(f"d_{i}(H) is below {d}")
    if retries < 1:
        raise ArgumentError("retries must be at least 1")

    p = float(n) ** (-r / d)
    floor = (n / k) ** k * float(n) ** (-(r / d) * comb(k, r)) - n ** (k - r)
    regime = "asymptotic" if floor >= 1 else "subasymptotic"
    penalty = comb(n, k - r)

    for attempt in range(retries):
        stage_seed = attempt_seed(seed, "turan/skeletal", attempt)
        G0 = erdos_renyi(r, n, p, stage_seed)
        before = count_cliques(G0, k, clique_cap)
        fields = dict(
            family="skeletal",
            n=n,
            p=p,
            seed=stage_seed,
            attempts=attempt + 1,
            sampled_edges=G0.num_edges,
            clique_count_before=before,
            floor=floor,
            regime=regime,
        )
        try:
            G1, removed = remove_copies(G0, F, budget)
        except BudgetExceeded as exc:
            raise _skipped({**fields, "removed": 0, "final_edges": G0.num_edges}, exc, G0) from exc
        z = before - penalty * removed
        if z > 0 or attempt == retries - 1:
            break
        logger.warning(f"⚠️ attempt {attempt}: Z = {z} <= 0, resampling")

    if find_embedding(F, G1) is not None:
        raise InvariantViolation("pruned r-uniform hypergraph still contains the core")
    G = clique_hypergraph(G1, k, clique_cap)
    hfree = find_embedding(H, G) is None
    if not hfree:
        logger.error("❌ lifted hypergraph contains the pattern")
    report = DeletionReport(
        removed=removed,
        final_edges=G1.num_edges,
        clique_count_after=G.num_edges,
        z_lower_bound=z,
        meets_floor=G.num_edges >= floor if regime == "asymptotic" else None,
        hfree_verified=hfree,
        **fields,
    )
    logger.info(f"✅ skeletal construction: {G.num_edges} {k}-edges, Z = {z}, attempts = {attempt + 1}")
    return G, report
