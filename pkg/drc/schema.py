"""
Result shapes for the dependent-random-choice stages.
"""

from __future__ import annotations

from typing import Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from hgraph import Hypergraph

Schedule = Literal["standard", "almost-linear"]


class ExtensionWitness(BaseModel):
    """Outcome of an (a, d)-vertex-extension check against one part."""

    model_config = ConfigDict(frozen=True)

    t: int = Field(..., ge=0, description="Target part index")
    a: int = Field(..., description="Required number of mutual extensions")
    d: int = Field(..., ge=0, description="Largest set size checked")
    violations: Tuple[Tuple[Tuple[int, ...], int], ...] = Field(
        default_factory=tuple, description="(S, mutual-extension count) pairs with count < a"
    )
    sets_checked: int = Field(0, ge=0)

    @property
    def extending(self) -> bool:
        return not self.violations


class PruneParams(BaseModel):
    """Overridable thresholds of the pruning pipeline; None means the standard default."""

    model_config = ConfigDict(frozen=True)

    lam: int = Field(2, ge=1, description="Sampling multiplier: a stage with set bound d_t samples lam * d_t vertices")
    h: Optional[int] = Field(None, ge=1, description="Extension threshold; defaults to ceil(n^(1/3))")
    stage_samples: Optional[Tuple[int, ...]] = Field(None, description="Per-stage sample counts, final stage included")
    extension_cap: int = Field(100_000, ge=1, description="Largest number of sets an extension check may visit")


class PruneStage(BaseModel):
    model_config = ConfigDict(frozen=True)

    part: int = Field(..., ge=0)
    samples: Tuple[int, ...] = Field(..., description="X_t, sampled with replacement")
    pool: Literal["part", "non-isolated"] = Field("part", description="Where X_t was drawn from")
    set_bound: int = Field(..., ge=0, description="d_t of the stage")
    edges_before: int = Field(..., ge=0)
    edges_after: int = Field(..., ge=0)
    epsilon: Optional[str] = Field(None, description="Density budget eps_t as an exact fraction")
    density_ok: Optional[bool] = Field(None, description="Whether e(G_t) >= n^(k - eps_t)")


class PruneTrace(BaseModel):
    model_config = ConfigDict(frozen=True)

    schedule: Schedule = "standard"
    stages: Tuple[PruneStage, ...] = Field(default_factory=tuple)
    survivor: Hypergraph
    attempt: int = Field(0, ge=0)
    extending: Tuple[bool, ...] = Field(default_factory=tuple, description="Per-part extension verdicts")

    @model_validator(mode="after")
    def _check_monotone(self) -> "PruneTrace":
        for stage in self.stages:
            if stage.edges_after > stage.edges_before:
                raise ValueError(f"edge count grew at the stage on part {stage.part}")
        for prev, nxt in zip(self.stages, self.stages[1:]):
            if nxt.edges_before != prev.edges_after:
                raise ValueError("stages do not chain")
        return self

    @property
    def product(self) -> List[Tuple[int, ...]]:
        """X_1, ..., X_k indexed by part (the last stage on a part wins)."""
        by_part: Dict[int, Tuple[int, ...]] = {}
        for stage in self.stages:
            by_part[stage.part] = stage.samples
        return [by_part[p] for p in sorted(by_part)]

    def to_payload(self) -> dict:
        return {
            "schedule": self.schedule,
            "attempt": self.attempt,
            "stages": [s.model_dump(mode="json") for s in self.stages],
            "survivor_edges": self.survivor.num_edges,
            "extending": list(self.extending),
        }


class SimultaneousPrune(BaseModel):
    """Survivor of the product survival rule, relabelled after dropping isolated vertices."""

    model_config = ConfigDict(frozen=True)

    survivor: Hypergraph
    samples: Tuple[Tuple[int, ...], ...] = Field(..., description="X_i per part, in original vertex ids")
    origin: Tuple[int, ...] = Field(..., description="survivor vertex -> original vertex")
    kept_edges: int = Field(..., ge=0)
