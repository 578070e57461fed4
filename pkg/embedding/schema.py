"""
Data shapes for the random greedy embedding and the partitions that feed it.

Blocks are indexed from 0. In an EmbeddingSetup the last block (index K-1) plays
the role of the block that is embedded first, uniformly and without repetition;
every other block i carries a threshold thetas[i].
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from typing import Any, Dict, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from hgraph import Defect, Embedding, Hypergraph

Case = Literal["first", "3a", "3b", "3c"]


class EmbeddingSetup(BaseModel):
    """Host blocks V_1..V_K, pattern blocks W_1..W_K and the forward tuples f_v."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    G: Hypergraph = Field(..., description="Host hypergraph")
    H: Hypergraph = Field(..., description="Pattern hypergraph")
    host_parts: Tuple[Tuple[int, ...], ...] = Field(..., description="V_1..V_K, disjoint host vertex sets")
    pattern_parts: Tuple[Tuple[int, ...], ...] = Field(..., description="W_1..W_K, a partition of V(H)")
    block_class: Tuple[int, ...] = Field(..., description="Class of each block; padding avoids the class of v")
    fwd: Dict[int, Tuple[int, ...]] = Field(..., description="f_v for every v outside the last block")
    thetas: Tuple[Fraction, ...] = Field(..., description="theta_1..theta_{K-1}")
    d: int = Field(..., ge=1, description="Length of every forward tuple")

    @field_validator("thetas", mode="before")
    @classmethod
    def _exact_thetas(cls, v):
        return tuple(Fraction(x) for x in v)

    @model_validator(mode="after")
    def _check_shape(self) -> "EmbeddingSetup":
        K = len(self.host_parts)
        if len(self.pattern_parts) != K or len(self.block_class) != K:
            raise ValueError("host blocks, pattern blocks and classes must have the same length")
        if len(self.thetas) != K - 1:
            raise ValueError(f"expected {K - 1} thresholds, got {len(self.thetas)}")
        for v, f in self.fwd.items():
            if len(f) != self.d:
                raise ValueError(f"f_{v} has length {len(f)}, expected {self.d}")
        return self

    @property
    def K(self) -> int:
        return len(self.host_parts)

    @cached_property
    def pattern_block(self) -> Dict[int, int]:
        return {x: i for i, block in enumerate(self.pattern_parts) for x in block}

    @cached_property
    def host_block(self) -> Dict[int, int]:
        return {v: i for i, block in enumerate(self.host_parts) for v in block}

    def theta_of(self, x: int) -> Optional[Fraction]:
        i = self.pattern_block[x]
        return None if i == self.K - 1 else self.thetas[i]

    def block_product(self, x: int) -> Tuple[Tuple[int, ...], ...]:
        """Q_x: the host blocks matching the coordinates of f_x."""
        return tuple(self.host_parts[self.pattern_block[y]] for y in self.fwd[x])


class GreedyRun(BaseModel):
    """One run of the random greedy map with everything needed to replay it."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    setup: EmbeddingSetup
    seed: int
    psi: Dict[int, int] = Field(..., description="Pattern vertex -> host vertex")
    order: Tuple[int, ...] = Field(..., description="Pattern vertices in the order they were placed")
    case_log: Dict[int, Case] = Field(..., description="Which sampling rule placed each vertex")
    defect_log: Dict[int, Defect] = Field(..., description="omega(x; psi) at placement time")
    sizes: Dict[int, Tuple[int, int]] = Field(
        default_factory=dict, description="(|N_j|, |L_j|) for every vertex outside the last block"
    )

    def as_embedding(self) -> Embedding:
        return Embedding(mapping=dict(self.psi))

    def cases_in_block(self, i: int) -> Tuple[Case, ...]:
        return tuple(self.case_log[x] for x in self.setup.pattern_parts[i])

    def to_payload(self) -> Dict[str, Any]:
        return {
            "seed": self.seed,
            "psi": {str(x): v for x, v in sorted(self.psi.items())},
            "order": list(self.order),
            "case_log": {str(x): c for x, c in sorted(self.case_log.items())},
            "defect_log": {str(x): str(w) for x, w in sorted(self.defect_log.items())},
        }


class HPartition(BaseModel):
    """Refinement W_i^(j) of a k-partite pattern by skeleton degree peeling."""

    model_config = ConfigDict(frozen=True)

    d: int = Field(..., ge=1)
    threshold: int = Field(..., description="Peeling threshold 4d")
    blocks: Tuple[Tuple[Tuple[int, ...], ...], ...] = Field(..., description="blocks[i][j] = W_{i+1}^(j+1)")

    @property
    def T(self) -> int:
        return len(self.blocks)

    @cached_property
    def block_of(self) -> Dict[int, Tuple[int, int]]:
        return {x: (i, j) for i, level in enumerate(self.blocks) for j, block in enumerate(level) for x in block}

    def lexicographic(self) -> Tuple[Tuple[int, int, Tuple[int, ...]], ...]:
        """(i, j, block) in lexicographic order of (i, j)."""
        return tuple((i, j, block) for i, level in enumerate(self.blocks) for j, block in enumerate(level))


class GPartition(BaseModel):
    """Disjoint host blocks V_i^(j) carved out of the trimmed parts B_j."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    blocks: Tuple[Tuple[Tuple[int, ...], ...], ...] = Field(..., description="blocks[i][j] = V_{i+1}^(j+1)")
    thetas: Tuple[Fraction, ...] = Field(..., description="theta_i = p_i theta / 4 per level")
    trimmed: Tuple[Tuple[int, ...], ...] = Field(..., description="B_j per part")
    attempt: int = Field(0, ge=0)
    bound: Defect = Field(..., description="Right-hand side the block averages were checked against")
    worst: Defect = Field(..., description="Largest block average seen")
    index_tuples: int = Field(..., ge=0, description="Index tuples checked")
    sampled: bool = Field(False, description="Whether index tuples or defect tuples were sampled")
    hypotheses: Dict[str, bool] = Field(default_factory=dict, description="Hypothesis checks; False entries are flagged")

    def diagnostics(self) -> Dict[str, Any]:
        return {
            "attempt": self.attempt,
            "bound": str(self.bound),
            "worst": str(self.worst),
            "index_tuples": self.index_tuples,
            "sampled": self.sampled,
            "hypotheses": dict(self.hypotheses),
            "block_sizes": [[len(b) for b in level] for level in self.blocks],
        }


class PipelineOverrides(BaseModel):
    """
    Constants of the end-to-end embedding pipeline. None keeps the asymptotic default.

    With no constant overridden the defaults are used as is, which leaves theta below 1
    at any size reachable on a desk.
    """

    model_config = ConfigDict(frozen=True)

    eta: Optional[float] = Field(None, gt=0, lt=1)
    theta: Optional[float] = Field(None, gt=0)
    t: Optional[int] = Field(None, ge=1, description="Defect moment used by the partition checks")
    prune_t: Optional[int] = Field(None, ge=0, description="Tuple length of the simultaneous pruning round")
    tuple_length: Optional[int] = Field(None, ge=1, description="Length of the forward tuples")
    epsilon: Optional[float] = Field(None, gt=0, le=1)
    epsilon_prime: Optional[float] = Field(None, gt=0, le=1)

    prune_retries: int = Field(16, ge=1)
    partition_retries: int = Field(64, ge=1)
    embed_retries: int = Field(16, ge=1)
    tuple_cap: int = Field(100_000, ge=1)
    tuple_samples: int = Field(2_000, ge=1)

    @property
    def is_default(self) -> bool:
        return all(
            getattr(self, name) is None
            for name in ("eta", "theta", "t", "prune_t", "tuple_length", "epsilon", "epsilon_prime")
        )


class PipelineResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    embedding: Embedding
    regime: Literal["asymptotic", "subasymptotic"]
    diagnostics: Dict[str, Any] = Field(default_factory=dict, description="Per-stage diagnostics")
