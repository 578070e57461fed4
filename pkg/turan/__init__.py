"""
Turán Lower Bounds Package

Deletion-method constructions of dense H-free hypergraphs:

- deletion_construction_complete: K^(k)_{d,...,d}-free hosts from G^k(n; p)
- deletion_construction_skeletal: H-free hosts from an F-free r-uniform sample, where F is
  a dense core of a skeleton of H, lifted through its K_k^(r) cliques
- min_degree_subhypergraph, remove_copies, clique_hypergraph: the building blocks

Usage:
    from turan import deletion_construction_complete

    G, report = deletion_construction_complete(k=2, d=2, n=16, seed=0)
"""

from .cliques import clique_hypergraph, count_cliques, iter_cliques
from .deletion import (
    deletion_construction_complete,
    deletion_construction_skeletal,
    min_degree_subhypergraph,
    remove_copies,
)
from .schema import DeletionReport

__all__ = [
    'DeletionReport',
    'deletion_construction_complete',
    'deletion_construction_skeletal',
    'min_degree_subhypergraph',
    'remove_copies',
    'clique_hypergraph',
    'count_cliques',
    'iter_cliques',
]
