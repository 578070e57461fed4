"""
Result shapes for the coloring reduction and the Ramsey sweeps.
"""

from __future__ import annotations

from typing import Any, Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from hgraph import Hypergraph

Strategy = Literal["oracle", "pipeline"]
Machinery = Literal["oracle", "extending"]


class Reduction(BaseModel):
    """An l-partite pattern/host pair: a copy of H_hat in G_hat pulls back to a monochromatic H."""

    model_config = ConfigDict(frozen=True)

    H_hat: Hypergraph = Field(..., description="Pattern lifted to uniformity l")
    G_hat: Hypergraph = Field(..., description="Transversal color-c cliques, relabelled onto the sampled parts")
    color: int = Field(..., ge=0)
    ell: int = Field(..., ge=1)
    pattern_vertices: int = Field(..., ge=0, description="v(H); pattern vertex x keeps id x in H_hat")
    parts: Tuple[Tuple[int, ...], ...] = Field(..., description="Sampled parts, original vertex ids")
    origin: Tuple[int, ...] = Field(..., description="G_hat vertex -> original vertex")
    clique_counts: Dict[int, int] = Field(..., description="Monochromatic l-cliques per color")

    def summary(self) -> Dict[str, Any]:
        return {
            "color": self.color,
            "ell": self.ell,
            "h_hat_vertices": self.H_hat.n,
            "g_hat_vertices": self.G_hat.n,
            "g_hat_edges": self.G_hat.num_edges,
            "clique_counts": {str(c): m for c, m in sorted(self.clique_counts.items())},
        }


class RamseyTrial(BaseModel):
    model_config = ConfigDict(frozen=True)

    index: int = Field(..., ge=0)
    seed: Optional[int] = Field(None, description="Seed of a sampled coloring; None in exhaustive sweeps")
    success: bool
    color: Optional[int] = Field(None, description="Color of the monochromatic copy")
    failure: Optional[str] = Field(None, description="Stage or reason when no copy was found")
    h_hat_vertices: Optional[int] = None
    g_hat_edges: Optional[int] = None


class RamseyReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    k: int
    pattern_vertices: int
    q: int
    N: int
    strategy: Strategy
    machinery: Optional[Machinery] = None
    ell: Optional[int] = None
    exhaustive: bool = False
    colorings: int = Field(..., ge=0)
    successes: int = Field(..., ge=0)
    verified_pullbacks: int = Field(0, ge=0, description="Copies re-checked as monochromatic")
    failure_witness: Optional[Tuple[int, ...]] = Field(None, description="Colors of the first coloring without a copy")
    trials: Tuple[RamseyTrial, ...] = Field(default_factory=tuple)

    @property
    def success_rate(self) -> float:
        return self.successes / self.colorings if self.colorings else 0.0

    def rows(self) -> List[Dict[str, Any]]:
        """One flat row per coloring, for summary tables."""
        return [
            {"N": self.N, "q": self.q, "strategy": self.strategy, **trial.model_dump()}
            for trial in self.trials
        ]

    def to_payload(self) -> Dict[str, Any]:
        payload = self.model_dump(mode="json", exclude={"trials"})
        payload["success_rate"] = self.success_rate
        payload["trials"] = [t.model_dump(mode="json") for t in self.trials]
        return payload
