"""
Result shapes for the exhaustive engines.
"""

from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, ConfigDict, Field


class RamseyBound(BaseModel):
    """The smallest forcing N found in range, or Unknown (value None) up to n_max."""

    model_config = ConfigDict(frozen=True)

    value: Optional[int] = Field(None, description="r(H; q), or None when no N <= n_max forces a copy")
    n_max: int = Field(..., ge=0, description="Largest N searched")
    avoiding_witness: Optional[tuple] = Field(
        None, description="Colors of an avoiding coloring at value - 1 (or at n_max when unknown)"
    )

    @property
    def is_unknown(self) -> bool:
        return self.value is None
