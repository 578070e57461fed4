"""
Bookkeeping for the deletion-method constructions.
"""

from __future__ import annotations

from typing import Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

Regime = Literal["asymptotic", "subasymptotic"]


class DeletionReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    family: Literal["complete", "skeletal"] = Field(..., description="Which construction produced the report")
    n: int = Field(..., ge=0)
    p: float = Field(..., ge=0, le=1, description="Edge probability of the sampled hypergraph")
    seed: int = Field(..., description="Seed of the attempt that was kept")
    attempts: int = Field(1, ge=1, description="Sampling attempts made")

    sampled_edges: int = Field(..., ge=0, description="Edges of the sampled hypergraph")
    removed: int = Field(..., ge=0, description="Edges deleted to kill every forbidden copy")
    final_edges: int = Field(..., ge=0, description="Edges left in the sampled hypergraph after deletion")

    clique_count_before: Optional[int] = Field(None, description="K_k^(r) cliques before deletion (X)")
    clique_count_after: Optional[int] = Field(None, description="K_k^(r) cliques after deletion")
    z_lower_bound: Optional[int] = Field(None, description="X - C(n, k-r) * removed")

    floor: Optional[float] = Field(None, description="Guaranteed edge-count floor of the construction")
    regime: Regime = Field("asymptotic", description="subasymptotic when the floor is vacuous at this n")
    meets_floor: Optional[bool] = Field(None, description="final_edges >= floor, reported in the asymptotic regime")

    hfree_verified: Union[bool, Literal["skipped"]] = Field(
        ..., description="Oracle verdict on the output being H-free, or skipped on budget"
    )

    @model_validator(mode="after")
    def _check_counts(self) -> "DeletionReport":
        if self.final_edges != self.sampled_edges - self.removed:
            raise ValueError("final_edges must equal sampled_edges - removed")
        if self.z_lower_bound is not None and self.clique_count_after is not None:
            if self.z_lower_bound > self.clique_count_after:
                raise ValueError("z_lower_bound exceeds clique_count_after")
        return self
