"""
Hypergraph Core Package

Canonical k-uniform hypergraphs and the computations every other package builds on:

- Hypergraph / PartiteLayout / PartialEdgeSet: the data model (schema.py)
- skeleton, partial_edges, pe_restricted, common_neighborhood: core.py
- degeneracy, skeletal_degeneracy, simultaneous_ordering: degeneracy.py
- Defect, omega_theta, set_defect, average_defect: defect.py
- derive_seed / make_rng: per-stage seeding (seeding.py)

Usage:
    from hgraph import Hypergraph, skeleton, skeletal_degeneracy

    H = Hypergraph(k=3, n=3, edges=[(0, 1, 2)])
    d1 = skeletal_degeneracy(H, 1).value
"""

from .core import common_neighborhood, edge_traces, induced, partial_edges, pe_restricted, skeleton
from .defect import (
    Defect,
    DefectMeter,
    Rational,
    as_fraction,
    average_defect,
    defect_lower_bound_check,
    omega_theta,
    set_defect,
)
from .degeneracy import (
    closing_counts,
    degeneracy,
    edge_count_bound_check,
    greedy_coloring,
    max_skeletal_degeneracy,
    simultaneous_ordering,
    skeletal_binomial_check,
    skeletal_degeneracy,
    skeletal_profile,
    trace_counts,
    verify_certificate,
)
from .errors import (
    ArgumentError,
    BudgetExceeded,
    ColoringError,
    DegeneracyError,
    FormatError,
    InvariantViolation,
    LayoutError,
    PreconditionError,
    SetupError,
    SizeError,
    SkeletalError,
    StageFailed,
    UniformityError,
)
from .schema import (
    DegeneracyCertificate,
    Edge,
    EdgeColoring,
    Embedding,
    Hypergraph,
    LatinSquare,
    PartialEdgeSet,
    PartiteLayout,
    canonical,
)
from .seeding import SEED_MASK, attempt_seed, derive_seed, make_rng

__version__ = "1.0.0"

__all__ = [
    'Hypergraph',
    'PartiteLayout',
    'PartialEdgeSet',
    'DegeneracyCertificate',
    'Embedding',
    'LatinSquare',
    'EdgeColoring',
    'Edge',
    'canonical',
    'skeleton',
    'partial_edges',
    'pe_restricted',
    'common_neighborhood',
    'induced',
    'edge_traces',
    'degeneracy',
    'skeletal_degeneracy',
    'skeletal_profile',
    'max_skeletal_degeneracy',
    'skeletal_binomial_check',
    'simultaneous_ordering',
    'trace_counts',
    'closing_counts',
    'verify_certificate',
    'edge_count_bound_check',
    'greedy_coloring',
    'Defect',
    'DefectMeter',
    'Rational',
    'as_fraction',
    'omega_theta',
    'set_defect',
    'average_defect',
    'defect_lower_bound_check',
    'derive_seed',
    'attempt_seed',
    'make_rng',
    'SEED_MASK',
    'SkeletalError',
    'ArgumentError',
    'SizeError',
    'UniformityError',
    'LayoutError',
    'ColoringError',
    'SetupError',
    'DegeneracyError',
    'PreconditionError',
    'InvariantViolation',
    'BudgetExceeded',
    'StageFailed',
    'FormatError',
]
