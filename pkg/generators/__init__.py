"""
Generators Package

Every hypergraph family the toolkit works with. Each module pairs a generator
class (holding the construction logic on top of BaseGenerator helpers) with thin
module-level functions:

- FamilyGenerator: complete k-partite hypergraphs and bipartite hedgehogs
- LatinGenerator: cyclic and random Latin squares and their hypergraphs
- AugmentGenerator: anchor augmentation and uniformity lifting
- SamplingGenerator: binomial random hypergraphs, random k-partite hosts, equitable partitions

Usage:
    from generators import complete_kpartite, erdos_renyi

    H = complete_kpartite([2, 2, 2])
    G = erdos_renyi(3, 10, "1/2", seed=7)
"""

from .augment import AugmentGenerator, augment_with_anchors, lift_to_uniformity
from .base import BaseGenerator
from .families import FamilyGenerator, bipartite_hedgehog, complete_kpartite
from .latin import LatinGenerator, cyclic_latin_square, latin_square_hypergraph, random_latin_square
from .sampling import (
    SamplingGenerator,
    erdos_renyi,
    random_equipartition,
    random_kpartite,
    random_parts,
)

__all__ = [
    'BaseGenerator',
    'FamilyGenerator',
    'LatinGenerator',
    'AugmentGenerator',
    'SamplingGenerator',
    'complete_kpartite',
    'bipartite_hedgehog',
    'erdos_renyi',
    'random_kpartite',
    'random_equipartition',
    'random_parts',
    'cyclic_latin_square',
    'random_latin_square',
    'latin_square_hypergraph',
    'augment_with_anchors',
    'lift_to_uniformity',
]
