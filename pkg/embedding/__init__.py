"""
Greedy Embedding Package

Defect-controlled embedding of sparse patterns into dense partite hosts:

- build_setup: forward tuples and setup validation (setup.py)
- random_greedy_embed / check_embedding_conditions: the random greedy map (greedy.py)
- h_partition / g_partition: pattern and host block partitions (partition.py)
- linear_turan_pipeline: prune, partition, set up and embed end to end (pipeline.py)
- gamma / mu_t / embedding_criterion: setup statistics (diagnostics.py)

Usage:
    from embedding import build_setup, random_greedy_embed, verify_run

    setup = build_setup(G, H, thetas=[4, 4], d=2)
    run = random_greedy_embed(setup, seed=1)
    ok = verify_run(run)
"""

from .diagnostics import Criterion, MuEstimate, embedding_criterion, gamma, mu_max, mu_t, product_average
from .greedy import block_defect_sums, check_embedding_conditions, random_greedy_embed, verify_run
from .partition import check_h_partition, g_partition, h_partition, level_probabilities
from .pipeline import linear_turan_pipeline, log2_default_eta, pad_last_level
from .schema import EmbeddingSetup, GPartition, GreedyRun, HPartition, PipelineOverrides, PipelineResult
from .setup import build_setup, forward_neighbors

__all__ = [
    'EmbeddingSetup',
    'GreedyRun',
    'HPartition',
    'GPartition',
    'PipelineOverrides',
    'PipelineResult',
    'MuEstimate',
    'Criterion',
    'build_setup',
    'forward_neighbors',
    'random_greedy_embed',
    'check_embedding_conditions',
    'block_defect_sums',
    'verify_run',
    'h_partition',
    'check_h_partition',
    'g_partition',
    'level_probabilities',
    'linear_turan_pipeline',
    'log2_default_eta',
    'pad_last_level',
    'gamma',
    'mu_t',
    'mu_max',
    'product_average',
    'embedding_criterion',
]
