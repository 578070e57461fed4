"""
Subcommand handlers. Each takes the parsed CLI namespace and the effective RunConfig
and returns an Outcome; failures of randomized stages propagate as StageFailed or
BudgetExceeded and are turned into artifacts by failure_outcome.
"""

from __future__ import annotations

import argparse
import logging
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

from drc import PruneParams, anchored_embed, prune_pipeline, simultaneous_prune
from embedding import PipelineOverrides, linear_turan_pipeline
from generators import (
    augment_with_anchors,
    bipartite_hedgehog,
    complete_kpartite,
    cyclic_latin_square,
    erdos_renyi,
    latin_square_hypergraph,
    lift_to_uniformity,
    random_kpartite,
    random_latin_square,
)
from hgraph import (
    ArgumentError,
    BudgetExceeded,
    FormatError,
    Hypergraph,
    StageFailed,
    derive_seed,
    greedy_coloring,
    max_skeletal_degeneracy,
    skeletal_degeneracy,
    skeletal_profile,
    skeleton,
    verify_certificate,
)
from hgraph.io import (
    Diagnostic,
    hypergraph_payload,
    load_hypergraph,
    read_payload,
    validate_coloring_payload,
    validate_hypergraph_payload,
)
from oracle import RamseyBound, brute_force_ramsey, brute_force_turan
from ramsey import ramsey_experiment
from turan import DeletionReport, deletion_construction_complete, deletion_construction_skeletal

from .artifacts import Outcome
from .config import RunConfig

logger = logging.getLogger(__name__)

Handler = Callable[[argparse.Namespace, RunConfig], Outcome]

GEN_FAMILIES = ("complete-kpartite", "hedgehog", "latin", "erdos-renyi", "kpartite-random", "anchors", "lift")


def parse_ints(text: str) -> List[int]:
    try:
        return [int(tok) for tok in text.replace(" ", "").split(",") if tok]
    except ValueError as e:
        raise ArgumentError(f"expected comma-separated integers, got {text!r}") from e


def parse_seed_range(text: str) -> List[int]:
    """'7' or '0..9' (inclusive)."""
    try:
        if ".." in text:
            lo, hi = (int(tok) for tok in text.split("..", 1))
            if hi < lo:
                raise ArgumentError(f"empty seed range {text!r}")
            return list(range(lo, hi + 1))
        return [int(text)]
    except ValueError as e:
        raise ArgumentError(f"expected a seed or S0..S1, got {text!r}") from e


def _require(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{name.replace('_', '-')}" for name in names if getattr(args, name, None) is None]
    if missing:
        raise ArgumentError(f"{args.command} needs {', '.join(missing)}")


# -----------------------------------------------------------------------------
# Structures
# -----------------------------------------------------------------------------
def handle_gen(args: argparse.Namespace, config: RunConfig) -> Outcome:
    family = args.family
    seed = derive_seed(config.seed, f"gen/{family}")
    if family == "complete-kpartite":
        _require(args, "sizes")
        H = complete_kpartite(parse_ints(args.sizes))
    elif family == "hedgehog":
        _require(args, "k", "d")
        H = bipartite_hedgehog(args.k, args.d)
    elif family == "latin":
        _require(args, "d")
        square = random_latin_square(args.d, seed) if args.random else cyclic_latin_square(args.d)
        H = latin_square_hypergraph(square)
    elif family == "erdos-renyi":
        _require(args, "k", "n", "p")
        H = erdos_renyi(args.k, args.n, args.p, seed)
    elif family == "kpartite-random":
        _require(args, "sizes", "p")
        H = random_kpartite(parse_ints(args.sizes), args.p, seed)
    elif family == "anchors":
        _require(args, "input")
        H = augment_with_anchors(load_hypergraph(args.input))
    elif family == "lift":
        _require(args, "input", "ell")
        base = load_hypergraph(args.input)
        H = lift_to_uniformity(base, args.ell, greedy_coloring(base))
    else:
        raise ArgumentError(f"unknown family {family!r}; choose from {', '.join(GEN_FAMILIES)}")
    logger.info(f"📦 {family}: k={H.k}, n={H.n}, {H.num_edges} edges")
    return Outcome(result=hypergraph_payload(H), raw=True)


def handle_degeneracy(args: argparse.Namespace, config: RunConfig) -> Outcome:
    _require(args, "input")
    H = load_hypergraph(args.input)
    result: Dict[str, Any] = {"k": H.k, "n": H.n, "edges": H.num_edges}
    if H.k >= 2:
        result["profile"] = list(skeletal_profile(H))
        result["d_max"] = max_skeletal_degeneracy(H)
    if args.i is not None:
        if not 0 <= args.i < H.k:
            raise ArgumentError(f"--i must lie in [0, {H.k}), got {args.i}")
        cert = skeletal_degeneracy(H, args.i)
        result.update(
            i=args.i,
            value=cert.value,
            order=list(cert.order),
            witness=list(cert.witness),
            verified=verify_certificate(skeleton(H, args.i), cert),
        )
        logger.info(f"✅ d_{args.i}(H) = {cert.value}")
    return Outcome(result=result)


def handle_validate(args: argparse.Namespace, config: RunConfig) -> Outcome:
    _require(args, "input")
    kind, diagnostics = validate_file(args.input, args.kind)
    result = {"path": str(args.input), "kind": kind, "diagnostics": [d.model_dump(mode="json") for d in diagnostics]}
    if diagnostics:
        logger.warning(f"⚠️ {args.input}: {diagnostics[0]}")
        return Outcome(status="invalid", result=result, exit_code=1)
    logger.info(f"✅ {args.input} is a well-formed {kind}")
    return Outcome(result=result)


def validate_file(path: Path | str, kind: str = "auto") -> tuple[str, List[Diagnostic]]:
    """Full validation of a hypergraph or coloring file; first problem first."""
    try:
        data = read_payload(path)
    except FormatError as exc:
        return kind, list(exc.diagnostics or [])
    except OSError as exc:
        return kind, [Diagnostic(location="$", message=f"cannot read file: {exc.strerror or exc}")]
    if kind == "auto":
        kind = "coloring" if isinstance(data, dict) and "colors" in data else "hypergraph"
    if kind == "coloring":
        return kind, validate_coloring_payload(data)
    return kind, validate_hypergraph_payload(data)


# -----------------------------------------------------------------------------
# Pruning and embedding
# -----------------------------------------------------------------------------
def handle_prune(args: argparse.Namespace, config: RunConfig) -> Outcome:
    _require(args, "input")
    G = load_hypergraph(args.input)
    if args.mode == "simultaneous":
        _require(args, "t")
        pruned = simultaneous_prune(G, args.t, derive_seed(config.seed, "prune/simultaneous"))
        result = {
            "mode": "simultaneous",
            "samples": [list(x) for x in pruned.samples],
            "origin": list(pruned.origin),
            "kept_edges": pruned.kept_edges,
            "survivor": hypergraph_payload(pruned.survivor),
        }
        return Outcome(result=result)

    _require(args, "d")
    params = PruneParams(
        lam=args.lam or 2,
        h=args.h,
        extension_cap=config.caps.extension_sets,
    )
    survivor, trace = prune_pipeline(
        G,
        args.d,
        epsilon0=Fraction(args.epsilon0) if args.epsilon0 else None,
        seed=config.seed,
        budget=config.retries,
        params=params,
        schedule=args.schedule,
    )
    result = {
        "mode": "pipeline",
        "trace": trace.to_payload(),
        "product": [list(x) for x in trace.product],
        "survivor": hypergraph_payload(survivor),
    }
    return Outcome(result=result)


def handle_embed(args: argparse.Namespace, config: RunConfig) -> Outcome:
    _require(args, "host", "pattern")
    G = load_hypergraph(args.host)
    H = load_hypergraph(args.pattern)
    if args.mode == "anchored":
        embedding = anchored_embed(G, H, derive_seed(config.seed, "embed/anchored"), retries=config.retries)
        return Outcome(result={"mode": "anchored", "mapping": _mapping(embedding.mapping)})

    retries = dict(
        prune_retries=config.retries,
        embed_retries=config.retries,
        tuple_cap=config.caps.tuples,
        tuple_samples=config.caps.tuple_samples,
    )
    if config.paper_constants:
        overrides = PipelineOverrides(**retries)
    else:
        overrides = PipelineOverrides(
            theta=args.theta,
            eta=args.eta,
            t=args.t,
            prune_t=args.prune_t,
            tuple_length=args.tuple_length,
            epsilon=args.epsilon,
            epsilon_prime=args.epsilon_prime,
            **retries,
        )
    outcome = linear_turan_pipeline(G, H, overrides, seed=config.seed)
    return Outcome(
        result={
            "mode": "greedy",
            "mapping": _mapping(outcome.embedding.mapping),
            "regime": outcome.regime,
            "diagnostics": outcome.diagnostics,
        }
    )


def _mapping(mapping: Dict[int, int]) -> Dict[str, int]:
    return {str(x): v for x, v in sorted(mapping.items())}


# -----------------------------------------------------------------------------
# Extremal numbers
# -----------------------------------------------------------------------------
def handle_turan_lb(args: argparse.Namespace, config: RunConfig) -> Outcome:
    _require(args, "family", "d", "n")
    seeds = parse_seed_range(args.seeds) if args.seeds else [config.seed]
    pattern: Optional[Hypergraph] = None
    if args.family == "skeletal":
        _require(args, "pattern", "i")
        pattern = load_hypergraph(args.pattern)
    else:
        _require(args, "k")

    reports: List[Dict[str, Any]] = []
    for s in seeds:
        try:
            if pattern is None:
                G, report = deletion_construction_complete(args.k, args.d, args.n, s, budget=config.caps.search_nodes)
            else:
                G, report = deletion_construction_skeletal(
                    pattern,
                    args.i,
                    args.d,
                    args.n,
                    s,
                    retries=config.retries,
                    budget=config.caps.search_nodes,
                    clique_cap=config.caps.cliques,
                )
            edges = G.num_edges
        except BudgetExceeded as exc:
            partial, report = exc.best
            edges = partial.num_edges
            logger.warning(f"⚠️ seed {s}: {exc}")
        reports.append({"root_seed": s, "output_edges": edges, **report.model_dump(mode="json")})

    logger.info(f"📊 {args.family} construction over {len(seeds)} seeds")
    return Outcome(result={"family": args.family, "reports": reports}, rows=reports)


def handle_brute_ex(args: argparse.Namespace, config: RunConfig) -> Outcome:
    _require(args, "pattern", "n")
    H = load_hypergraph(args.pattern)
    value, witness = brute_force_turan(args.n, H, cap=config.caps.turan_edges, budget=config.caps.search_nodes)
    logger.info(f"✅ ex({args.n}, H) = {value}")
    return Outcome(result={"n": args.n, "value": value, "witness": hypergraph_payload(witness), "exhaustive": True})


def handle_brute_ramsey(args: argparse.Namespace, config: RunConfig) -> Outcome:
    _require(args, "pattern", "q", "N_max")
    H = load_hypergraph(args.pattern)
    bound = brute_force_ramsey(H, args.q, args.N_max, budget=config.caps.search_nodes)
    return Outcome(result={**_bound_payload(bound), "q": args.q, "exhaustive": True})


def _bound_payload(bound: RamseyBound) -> Dict[str, Any]:
    payload = bound.model_dump(mode="json")
    payload["unknown"] = bound.is_unknown
    return payload


def handle_ramsey(args: argparse.Namespace, config: RunConfig) -> Outcome:
    _require(args, "pattern", "q", "N")
    H = load_hypergraph(args.pattern)
    report = ramsey_experiment(
        H,
        args.q,
        args.N,
        strategy=args.strategy,
        seed=config.seed,
        exhaustive=args.exhaustive,
        samples=args.samples,
        ell=args.ell,
        machinery=args.machinery,
        budget=config.caps.search_nodes,
        retries=config.retries,
        bits_cap=config.caps.ramsey_bits,
        clique_cap=config.caps.cliques,
    )
    return Outcome(result=report.to_payload(), rows=report.rows())


# -----------------------------------------------------------------------------
# Failures
# -----------------------------------------------------------------------------
def failure_outcome(exc: Exception) -> Outcome:
    """Artifact body for a stage that ran out of retries or budget."""
    if isinstance(exc, StageFailed):
        return Outcome(status="failed", result=exc.to_payload(), exit_code=2)
    result: Dict[str, Any] = {"status": "failed", "stage": "budget", "reason": str(exc)}
    best = getattr(exc, "best", None)
    if isinstance(best, RamseyBound):
        result["best"] = _bound_payload(best)
    elif isinstance(best, tuple) and len(best) == 2 and isinstance(best[1], Hypergraph):
        result["best"] = {"value": best[0], "witness": hypergraph_payload(best[1])}
    elif isinstance(best, tuple) and len(best) == 2 and isinstance(best[1], DeletionReport):
        result["best"] = best[1].model_dump(mode="json")
    return Outcome(status="failed", result=result, exit_code=2)


HANDLERS: Dict[str, Handler] = {
    "gen": handle_gen,
    "degeneracy": handle_degeneracy,
    "prune": handle_prune,
    "embed": handle_embed,
    "turan-lb": handle_turan_lb,
    "brute-ex": handle_brute_ex,
    "brute-ramsey": handle_brute_ramsey,
    "ramsey": handle_ramsey,
    "validate": handle_validate,
}
