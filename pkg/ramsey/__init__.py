"""
Ramsey Harness Package

From edge colorings to partite containment:

- harvest_monochromatic_cliques: per-color l-cliques of a coloring (harvest.py)
- kr_reduce / pullback / verify_monochromatic: the l-partite reduction (reduction.py)
- ramsey_experiment: oracle or pipeline sweeps over sampled or exhaustive colorings (experiment.py)

Usage:
    from ramsey import ramsey_experiment

    report = ramsey_experiment(K3, q=2, N=6, strategy="oracle", exhaustive=True)
    assert report.successes == report.colorings
"""

from .experiment import RAMSEY_BITS_CAP, default_ell, exhaustive_colorings, mono_clique_floor, ramsey_experiment
from .harvest import CLIQUE_CAP, harvest_monochromatic_cliques
from .reduction import check_pullback, kr_reduce, lift_vertex_bound, pullback, verify_monochromatic
from .schema import Machinery, RamseyReport, RamseyTrial, Reduction, Strategy

__all__ = [
    'Reduction',
    'RamseyTrial',
    'RamseyReport',
    'Strategy',
    'Machinery',
    'harvest_monochromatic_cliques',
    'kr_reduce',
    'pullback',
    'check_pullback',
    'verify_monochromatic',
    'lift_vertex_bound',
    'ramsey_experiment',
    'exhaustive_colorings',
    'default_ell',
    'mono_clique_floor',
    'CLIQUE_CAP',
    'RAMSEY_BITS_CAP',
]
