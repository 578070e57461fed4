"""
Oracle Package

Exhaustive ground truth at tiny scale. Every probabilistic module is checked
against these engines:

- find_embedding / verify_embedding: containment search (search.py)
- brute_force_turan: exact ex(n, H) with a witness (extremal.py)
- brute_force_ramsey: exact r(H; q) or Unknown (extremal.py)
- find_monochromatic_copy: first color class holding a copy of H (extremal.py)

Usage:
    from oracle import find_embedding

    if find_embedding(H, G) is None:
        ...  # G is H-free
"""

from .extremal import (
    TURAN_EDGE_CAP,
    avoiding_coloring,
    brute_force_ramsey,
    brute_force_turan,
    coloring_space_bits,
    find_monochromatic_copy,
    greedy_hfree,
)
from .schema import RamseyBound
from .search import ContainmentSearch, find_embedding, verify_embedding

__all__ = [
    'ContainmentSearch',
    'find_embedding',
    'verify_embedding',
    'brute_force_turan',
    'brute_force_ramsey',
    'avoiding_coloring',
    'find_monochromatic_copy',
    'greedy_hfree',
    'coloring_space_bits',
    'RamseyBound',
    'TURAN_EDGE_CAP',
]
