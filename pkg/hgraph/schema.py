"""
Core data shapes: uniform hypergraphs, partite layouts, partial-edge families,
degeneracy certificates, embeddings, Latin squares and edge colorings.

Every model is frozen. Derived indexes (incidence lists, partial edges, extension
sets) are computed lazily and cached on the instance.
"""

from __future__ import annotations

from functools import cached_property
from itertools import combinations
from math import comb
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

Edge = Tuple[int, ...]


def canonical(edge: Iterable[int]) -> Edge:
    """Sorted tuple form used for every edge and partial edge."""
    return tuple(sorted(int(v) for v in edge))


class PartiteLayout(BaseModel):
    """A partition of the vertex set into disjoint parts."""

    model_config = ConfigDict(frozen=True)

    parts: Tuple[Tuple[int, ...], ...] = Field(..., description="Disjoint vertex sets, each sorted ascending")

    @field_validator("parts", mode="before")
    @classmethod
    def _sort_parts(cls, v):
        return tuple(canonical(part) for part in v)

    @model_validator(mode="after")
    def _check_disjoint(self) -> "PartiteLayout":
        seen = set()
        for idx, part in enumerate(self.parts):
            for v in part:
                if v in seen:
                    raise ValueError(f"vertex {v} appears in more than one part (again in part {idx})")
                seen.add(v)
        return self

    @cached_property
    def part_of(self) -> Dict[int, int]:
        return {v: idx for idx, part in enumerate(self.parts) for v in part}

    @property
    def num_parts(self) -> int:
        return len(self.parts)

    def part(self, t: int) -> Tuple[int, ...]:
        return self.parts[t]

    def others(self, t: int) -> Tuple[int, ...]:
        """V_{-t}: every vertex outside part t, ascending."""
        return tuple(sorted(v for idx, part in enumerate(self.parts) if idx != t for v in part))

    def covers(self, n: int) -> bool:
        return len(self.part_of) == n and all(0 <= v < n for v in self.part_of)


class Hypergraph(BaseModel):
    """
    A k-uniform hypergraph on vertices 0..n-1.

    Edges are stored as sorted tuples in a frozenset. When `partite_proper` is set the
    layout is enforced: every edge meets each part at most once.
    """

    model_config = ConfigDict(frozen=True)

    k: int = Field(..., ge=1, description="Uniformity")
    n: int = Field(..., ge=0, description="Number of vertices")
    edges: FrozenSet[Edge] = Field(default_factory=frozenset, description="k-subsets, sorted ascending")
    layout: Optional[PartiteLayout] = Field(None, description="Optional partition of [0, n)")
    partite_proper: bool = Field(False, description="Whether every edge meets each part at most once")

    @field_validator("edges", mode="before")
    @classmethod
    def _canonical_edges(cls, v):
        return frozenset(canonical(e) for e in v)

    @model_validator(mode="after")
    def _check_invariants(self) -> "Hypergraph":
        for e in self.edges:
            if len(e) != self.k or len(set(e)) != self.k:
                raise ValueError(f"edge {list(e)} does not have exactly {self.k} distinct vertices")
            if e[0] < 0 or e[-1] >= self.n:
                raise ValueError(f"edge {list(e)} has a vertex outside [0, {self.n})")
        if self.layout is not None:
            if not self.layout.covers(self.n):
                raise ValueError(f"layout parts do not cover exactly [0, {self.n})")
            if self.partite_proper:
                part_of = self.layout.part_of
                for e in self.edges:
                    if len({part_of[v] for v in e}) != self.k:
                        raise ValueError(f"edge {list(e)} meets a part more than once")
        elif self.partite_proper:
            raise ValueError("partite_proper requires a layout")
        return self

    # ------------------------------------------------------------------
    # Derived structure
    # ------------------------------------------------------------------
    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(self.n)

    @cached_property
    def sorted_edges(self) -> Tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def incidence(self) -> Dict[int, Tuple[Edge, ...]]:
        inc: Dict[int, List[Edge]] = {}
        for e in self.sorted_edges:
            for v in e:
                inc.setdefault(v, []).append(e)
        return {v: tuple(es) for v, es in inc.items()}

    def degree(self, v: int) -> int:
        return len(self.incidence.get(v, ()))

    @cached_property
    def non_isolated(self) -> FrozenSet[int]:
        return frozenset(self.incidence)

    @cached_property
    def partial_members(self) -> FrozenSet[Edge]:
        """E*(G): every subset of every edge, the empty tuple included when G has an edge."""
        members = set()
        for e in self.edges:
            for r in range(self.k + 1):
                members.update(combinations(e, r))
        return frozenset(members)

    @cached_property
    def extension_cache(self) -> Dict[Edge, FrozenSet[int]]:
        return {}

    def extensions(self, partial: Sequence[int]) -> FrozenSet[int]:
        """Vertices v outside `partial` with partial + {v} a partial edge."""
        key = canonical(partial)
        cache = self.extension_cache
        if key not in cache:
            if not key:
                result = self.non_isolated
            else:
                pivot = min(key, key=self.degree)
                found = set()
                for e in self.incidence.get(pivot, ()):
                    es = set(e)
                    if es.issuperset(key):
                        found.update(es.difference(key))
                result = frozenset(found)
            cache[key] = result
        return cache[key]

    def has_edge(self, edge: Iterable[int]) -> bool:
        return canonical(edge) in self.edges

    def part_of(self, v: int) -> int:
        if self.layout is None:
            raise ValueError("hypergraph has no layout")
        return self.layout.part_of[v]

    def with_edges(self, edges: Iterable[Edge]) -> "Hypergraph":
        """Same vertex set, uniformity and layout; new edge set."""
        return Hypergraph(
            k=self.k,
            n=self.n,
            edges=edges,
            layout=self.layout,
            partite_proper=self.partite_proper,
        )


class PartialEdgeSet(BaseModel):
    """A family of partial edges (vertex subsets of size 0..k)."""

    model_config = ConfigDict(frozen=True)

    members: FrozenSet[Edge] = Field(default_factory=frozenset, description="Sorted tuples; () is the empty set")

    @field_validator("members", mode="before")
    @classmethod
    def _canonical_members(cls, v):
        return frozenset(canonical(s) for s in v)

    def __contains__(self, item: Iterable[int]) -> bool:
        return canonical(item) in self.members

    def __len__(self) -> int:
        return len(self.members)

    def sorted(self) -> List[Edge]:
        return sorted(self.members, key=lambda s: (len(s), s))

    @property
    def max_size(self) -> int:
        return max((len(s) for s in self.members), default=-1)


class DegeneracyCertificate(BaseModel):
    """Both sides of a degeneracy value: a closing order and a dense witness set."""

    model_config = ConfigDict(frozen=True)

    value: int = Field(..., ge=0, description="The degeneracy d")
    order: Tuple[int, ...] = Field(..., description="Reverse peeling order; each vertex closes at most `value` edges")
    witness: Tuple[int, ...] = Field(..., description="Vertex set whose induced minimum degree equals `value`")


class Embedding(BaseModel):
    """An injective map V(H) -> V(G) sending edges to edges."""

    model_config = ConfigDict(frozen=True)

    mapping: Dict[int, int] = Field(..., description="Pattern vertex -> host vertex")
    part_respecting: bool = Field(False, description="Whether part j of the pattern maps into part j of the host")

    def image(self, edge: Iterable[int]) -> Edge:
        return canonical(self.mapping[v] for v in edge)


class LatinSquare(BaseModel):
    """A d x d array whose rows and columns are permutations of [0, d)."""

    model_config = ConfigDict(frozen=True)

    d: int = Field(..., ge=1)
    cells: Tuple[Tuple[int, ...], ...]

    @model_validator(mode="after")
    def _check_latin(self) -> "LatinSquare":
        full = set(range(self.d))
        if len(self.cells) != self.d or any(len(row) != self.d for row in self.cells):
            raise ValueError(f"cells must be a {self.d}x{self.d} array")
        for i, row in enumerate(self.cells):
            if set(row) != full:
                raise ValueError(f"row {i} is not a permutation of [0, {self.d})")
        for j in range(self.d):
            if {row[j] for row in self.cells} != full:
                raise ValueError(f"column {j} is not a permutation of [0, {self.d})")
        return self


class EdgeColoring(BaseModel):
    """A q-coloring of every k-subset of [N]; colors listed in lexicographic edge order."""

    model_config = ConfigDict(frozen=True)

    N: int = Field(..., ge=0)
    k: int = Field(..., ge=1)
    q: int = Field(..., ge=1)
    colors: Tuple[int, ...] = Field(..., description="One color per lex-ordered k-subset of [N]")

    @model_validator(mode="after")
    def _check_total(self) -> "EdgeColoring":
        expected = comb(self.N, self.k)
        if len(self.colors) != expected:
            raise ValueError(f"expected {expected} colors, got {len(self.colors)}")
        for idx, c in enumerate(self.colors):
            if not 0 <= c < self.q:
                raise ValueError(f"colors[{idx}] = {c} is outside [0, {self.q})")
        return self

    @cached_property
    def edge_list(self) -> Tuple[Edge, ...]:
        return tuple(combinations(range(self.N), self.k))

    @cached_property
    def edge_index(self) -> Dict[Edge, int]:
        return {e: idx for idx, e in enumerate(self.edge_list)}

    def color(self, edge: Iterable[int]) -> int:
        return self.colors[self.edge_index[canonical(edge)]]

    def color_class(self, c: int) -> Hypergraph:
        return Hypergraph(
            k=self.k,
            n=self.N,
            edges=[e for e, col in zip(self.edge_list, self.colors) if col == c],
        )

    @classmethod
    def random(cls, N: int, k: int, q: int, seed: int) -> "EdgeColoring":
        rng = np.random.default_rng(seed)
        draws = rng.integers(0, q, size=comb(N, k))
        return cls(N=N, k=k, q=q, colors=tuple(int(c) for c in draws))
