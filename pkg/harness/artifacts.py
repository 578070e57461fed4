"""
Artifact writing. Structures are always JSON; sweeps may add a CSV summary table.
"""

from __future__ import annotations

import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, TextIO

import pandas as pd
from pydantic import BaseModel, ConfigDict, Field

from hgraph import __version__
from hgraph.io import dumps

from .config import RunConfig

logger = logging.getLogger(__name__)


class Outcome(BaseModel):
    """What a handler hands back to the CLI."""

    model_config = ConfigDict(frozen=True)

    status: str = Field("ok", description="ok, failed or invalid")
    result: Dict[str, Any] = Field(default_factory=dict)
    rows: Optional[List[Dict[str, Any]]] = Field(None, description="Summary table rows for --format csv")
    exit_code: int = Field(0, ge=0)
    raw: bool = Field(False, description="Write result as a bare document instead of the run envelope")


def envelope(command: str, config: RunConfig, outcome: Outcome) -> Dict[str, Any]:
    return {
        "command": command,
        "status": outcome.status,
        "version": __version__,
        "config": config.echo(),
        "result": outcome.result,
    }


def summary_csv(rows: List[Dict[str, Any]]) -> str:
    return pd.DataFrame(rows).to_csv(index=False)


def write_artifacts(command: str, config: RunConfig, outcome: Outcome, stdout: Optional[TextIO] = None) -> List[Path]:
    """Write the JSON artifact (and CSV table if asked); returns the files written."""
    text = dumps(outcome.result if outcome.raw else envelope(command, config, outcome))
    wants_csv = config.format == "csv" and outcome.rows is not None
    written: List[Path] = []
    if config.out is None:
        (stdout or sys.stdout).write(summary_csv(outcome.rows) if wants_csv else text)
        return written

    out = Path(config.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text, encoding="utf-8")
    written.append(out)
    if wants_csv:
        table = out.with_suffix(".csv")
        table.write_text(summary_csv(outcome.rows), encoding="utf-8")
        written.append(table)
    elif config.format == "csv":
        logger.warning(f"⚠️ {command} has no summary table; wrote JSON only")
    logger.info(f"📋 wrote {', '.join(str(p) for p in written)}")
    return written
