"""
Dependent Random Choice Package

Pruning machinery for k-partite hosts:

- is_vertex_extending: exhaustive (a, d)-vertex-extension check (extending.py)
- drc_round / simultaneous_prune: single rounds with post-hoc replay (rounds.py)
- prune_pipeline: staged pruning with retries (pipeline.py)
- defect_moment_sum: exact defect moments of a pruned host (moments.py)
- anchored_embed: greedy embedding into an extending host (anchored.py)

Usage:
    from drc import prune_pipeline, anchored_embed

    survivor, trace = prune_pipeline(G, d=1, seed=3)
    embedding = anchored_embed(survivor, H, seed=3)
"""

from .anchored import anchored_embed, anchored_order
from .extending import (
    EXTENSION_CAP,
    extension_set_count,
    is_vertex_extending,
    mutual_extensions,
    outside_traces,
    require_partite,
)
from .moments import TUPLE_CAP, defect_moment_sum, moment_bound
from .pipeline import (
    default_epsilon0,
    integer_cube_root_ceil,
    plan_stages,
    product_contained,
    prune_pipeline,
)
from .rounds import (
    apply_round,
    drc_round,
    replay_round,
    replay_simultaneous,
    sample_with_replacement,
    simultaneous_prune,
)
from .schema import ExtensionWitness, PruneParams, PruneStage, PruneTrace, SimultaneousPrune

__all__ = [
    'ExtensionWitness',
    'PruneParams',
    'PruneStage',
    'PruneTrace',
    'SimultaneousPrune',
    'is_vertex_extending',
    'mutual_extensions',
    'outside_traces',
    'extension_set_count',
    'require_partite',
    'drc_round',
    'apply_round',
    'replay_round',
    'simultaneous_prune',
    'replay_simultaneous',
    'sample_with_replacement',
    'prune_pipeline',
    'plan_stages',
    'default_epsilon0',
    'integer_cube_root_ceil',
    'product_contained',
    'defect_moment_sum',
    'moment_bound',
    'anchored_embed',
    'anchored_order',
    'EXTENSION_CAP',
    'TUPLE_CAP',
]
