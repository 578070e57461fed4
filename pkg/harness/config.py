"""
Run configuration.

Values come from CLI flags, then SKELETAL_* environment variables, then an optional
.env file, then the defaults below.
"""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any, Dict, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from hgraph import SEED_MASK

logger = logging.getLogger(__name__)


class Caps(BaseModel):
    """Budgets for the exhaustive engines. None means unbounded."""

    model_config = ConfigDict(frozen=True)

    search_nodes: Optional[int] = Field(None, ge=1, description="Containment and coloring search nodes")
    turan_edges: int = Field(28, ge=0, description="Largest C(n, k) brute-ex will enumerate subsets of")
    extension_sets: int = Field(100_000, ge=1, description="Sets visited by a vertex-extension check")
    tuples: int = Field(100_000, ge=1, description="Tuple products evaluated exactly before sampling")
    tuple_samples: int = Field(10_000, ge=1, description="Tuples drawn above the exact cap")
    cliques: int = Field(2_000_000, ge=1, description="Candidate l-sets in clique harvesting")
    ramsey_bits: float = Field(24.0, ge=0, description="log2 of the largest exhaustive coloring sweep")


class RunConfig(BaseSettings):
    seed: int = Field(default=0, alias="SKELETAL_SEED")
    retries: int = Field(default=16, ge=1, alias="SKELETAL_RETRIES")
    caps: Caps = Field(default_factory=Caps, alias="SKELETAL_CAPS")
    out: Optional[Path] = Field(default=None, alias="SKELETAL_OUT")
    format: Literal["json", "csv"] = Field(default="json", alias="SKELETAL_FORMAT")
    paper_constants: bool = Field(default=False, alias="SKELETAL_PAPER_CONSTANTS")
    log_level: str = Field(default="INFO", alias="SKELETAL_LOG_LEVEL")

    model_config = SettingsConfigDict(env_file=".env", extra="ignore", populate_by_name=True)

    @field_validator("seed", mode="before")
    @classmethod
    def _parse_seed(cls, v):
        if isinstance(v, str):
            v = int(v.strip(), 0)
        if v < 0 or v > SEED_MASK:
            raise ValueError(f"seed must fit in 64 bits, got {v}")
        return v

    @field_validator("caps", mode="before")
    @classmethod
    def _parse_caps(cls, v):
        if isinstance(v, str):
            try:
                return json.loads(v)
            except Exception:
                logging.warning("SKELETAL_CAPS not valid JSON; using default caps")
                return {}
        return v

    @field_validator("log_level", mode="before")
    @classmethod
    def _upper_level(cls, v):
        return v.upper() if isinstance(v, str) else v

    def with_overrides(self, **changes: Any) -> "RunConfig":
        """Validated copy with CLI flags applied; None leaves a value alone."""
        merged = self.model_dump()
        cap_updates = changes.pop("caps", None) or {}
        merged.update({key: value for key, value in changes.items() if value is not None})
        merged["caps"] = {**merged["caps"], **cap_updates}
        return type(self)(**merged)

    def echo(self) -> Dict[str, Any]:
        """The effective config as written into artifacts. `out` is left out so moving a file keeps it identical."""
        return self.model_dump(mode="json", exclude={"out", "log_level"})


def load_config(env_file: Optional[str] = ".env") -> RunConfig:
    config = RunConfig(_env_file=env_file)
    logger.debug(f"📦 config: seed={config.seed}, retries={config.retries}, format={config.format}")
    return config
