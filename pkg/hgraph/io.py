"""
JSON files for hypergraphs and edge colorings.

Hypergraph file: {"k": int, "n": int, "parts": [[int, ...], ...] | null,
"edges": [[int, ...], ...], "partite_proper": bool (optional)}.
Coloring file: {"N": int, "k": int, "q": int, "colors": [int, ...]} with one color
per lexicographically ordered k-subset of [N].
"""

from __future__ import annotations

import json
import logging
from math import comb
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from pydantic import BaseModel, Field

from .errors import FormatError
from .schema import EdgeColoring, Hypergraph, PartiteLayout

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


class Diagnostic(BaseModel):
    location: str = Field(..., description="Field path of the offending value, e.g. edges[3]")
    message: str
    line: Optional[int] = Field(None, description="Line number for parse errors")

    def __str__(self) -> str:
        where = f"line {self.line}" if self.line is not None else self.location
        return f"{where}: {self.message}"


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def validate_hypergraph_payload(data: Any) -> List[Diagnostic]:
    diags: List[Diagnostic] = []
    if not isinstance(data, dict):
        return [Diagnostic(location="$", message="top level must be an object")]
    for key in ("k", "n", "edges"):
        if key not in data:
            diags.append(Diagnostic(location=key, message="missing field"))
    if diags:
        return diags
    k, n, edges = data["k"], data["n"], data["edges"]
    if not _is_int(k) or k < 1:
        diags.append(Diagnostic(location="k", message="must be an integer >= 1"))
    if not _is_int(n) or n < 0:
        diags.append(Diagnostic(location="n", message="must be a non-negative integer"))
    if not isinstance(edges, list):
        diags.append(Diagnostic(location="edges", message="must be a list"))
    if diags:
        return diags

    part_of: Dict[int, int] = {}
    parts = data.get("parts")
    if parts is not None:
        if not isinstance(parts, list):
            diags.append(Diagnostic(location="parts", message="must be a list or null"))
        else:
            for p_idx, part in enumerate(parts):
                if not isinstance(part, list):
                    diags.append(Diagnostic(location=f"parts[{p_idx}]", message="must be a list"))
                    continue
                for v in part:
                    if not _is_int(v) or not 0 <= v < n:
                        diags.append(Diagnostic(location=f"parts[{p_idx}]", message=f"vertex {v!r} outside [0, {n})"))
                    elif v in part_of:
                        diags.append(
                            Diagnostic(location=f"parts[{p_idx}]", message=f"vertex {v} already in parts[{part_of[v]}]")
                        )
                    else:
                        part_of[v] = p_idx
            missing = [v for v in range(n) if v not in part_of]
            if missing and not diags:
                diags.append(Diagnostic(location="parts", message=f"parts do not cover vertex {missing[0]}"))

    partite_proper = data.get("partite_proper", False)
    if not isinstance(partite_proper, bool):
        diags.append(Diagnostic(location="partite_proper", message="must be a boolean"))
        partite_proper = False
    if partite_proper and parts is None:
        diags.append(Diagnostic(location="partite_proper", message="declared without parts"))

    seen: Dict[tuple, int] = {}
    for idx, edge in enumerate(edges):
        loc = f"edges[{idx}]"
        if not isinstance(edge, list) or not all(_is_int(v) for v in edge):
            diags.append(Diagnostic(location=loc, message="must be a list of integers"))
            continue
        if len(edge) != k or len(set(edge)) != k:
            diags.append(Diagnostic(location=loc, message=f"must have exactly {k} distinct vertices"))
            continue
        if any(not 0 <= v < n for v in edge):
            diags.append(Diagnostic(location=loc, message=f"vertex outside [0, {n})"))
            continue
        if edge != sorted(edge):
            diags.append(Diagnostic(location=loc, message="vertices must be sorted ascending"))
        key = tuple(sorted(edge))
        if key in seen:
            diags.append(Diagnostic(location=loc, message=f"duplicates edges[{seen[key]}]"))
        else:
            seen[key] = idx
        if partite_proper and part_of:
            hits = [part_of.get(v) for v in edge]
            if len(set(hits)) != len(hits):
                diags.append(Diagnostic(location=loc, message="meets a part more than once"))
    return diags


def validate_coloring_payload(data: Any) -> List[Diagnostic]:
    if not isinstance(data, dict):
        return [Diagnostic(location="$", message="top level must be an object")]
    diags: List[Diagnostic] = []
    for key in ("N", "k", "q"):
        if key not in data:
            diags.append(Diagnostic(location=key, message="missing field"))
        elif not _is_int(data[key]) or data[key] < (0 if key == "N" else 1):
            diags.append(Diagnostic(location=key, message="must be a non-negative integer" if key == "N" else "must be an integer >= 1"))
    colors = data.get("colors")
    if not isinstance(colors, list):
        diags.append(Diagnostic(location="colors", message="must be a list"))
    if diags:
        return diags
    expected = comb(data["N"], data["k"])
    if len(colors) != expected:
        diags.append(Diagnostic(location="colors", message=f"expected {expected} entries, got {len(colors)}"))
    for idx, c in enumerate(colors):
        if not _is_int(c) or not 0 <= c < data["q"]:
            diags.append(Diagnostic(location=f"colors[{idx}]", message=f"color {c!r} outside [0, {data['q']})"))
    return diags


def read_payload(path: PathLike) -> Any:
    text = Path(path).read_text(encoding="utf-8")
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(
            f"{path}: not valid JSON",
            [Diagnostic(location="$", message=e.msg, line=e.lineno)],
        ) from e


def hypergraph_from_payload(data: Any) -> Hypergraph:
    diags = validate_hypergraph_payload(data)
    if diags:
        raise FormatError(f"hypergraph rejected: {diags[0]}", diags)
    parts = data.get("parts")
    return Hypergraph(
        k=data["k"],
        n=data["n"],
        edges=data["edges"],
        layout=PartiteLayout(parts=parts) if parts is not None else None,
        partite_proper=data.get("partite_proper", False),
    )


def coloring_from_payload(data: Any) -> EdgeColoring:
    diags = validate_coloring_payload(data)
    if diags:
        raise FormatError(f"coloring rejected: {diags[0]}", diags)
    return EdgeColoring(N=data["N"], k=data["k"], q=data["q"], colors=data["colors"])


def load_hypergraph(path: PathLike) -> Hypergraph:
    logger.debug(f"📂 Loading hypergraph from {path}")
    return hypergraph_from_payload(read_payload(path))


def load_coloring(path: PathLike) -> EdgeColoring:
    return coloring_from_payload(read_payload(path))


def hypergraph_payload(H: Hypergraph) -> Dict[str, Any]:
    return {
        "k": H.k,
        "n": H.n,
        "parts": [list(p) for p in H.layout.parts] if H.layout is not None else None,
        "edges": [list(e) for e in H.sorted_edges],
        "partite_proper": H.partite_proper,
    }


def coloring_payload(f: EdgeColoring) -> Dict[str, Any]:
    return {"N": f.N, "k": f.k, "q": f.q, "colors": list(f.colors)}


def dumps(payload: Any) -> str:
    """Canonical JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def save_hypergraph(H: Hypergraph, path: PathLike) -> None:
    Path(path).write_text(dumps(hypergraph_payload(H)), encoding="utf-8")
