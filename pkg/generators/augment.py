"""
Augmentations used by the embedding arguments: anchor vertices and uniformity lifting.

New vertices always get ids after the existing ones, part-major: the anchor of
part j is n + j, and the auxiliary vertices of a lift run through the color classes
in ascending order, edges in sorted order within a class.
"""

from __future__ import annotations

from typing import Dict, List, Mapping, Tuple

from hgraph import ArgumentError, ColoringError, Edge, Hypergraph, LayoutError

from .base import BaseGenerator


class AugmentGenerator(BaseGenerator):

    def anchors(self, H: Hypergraph) -> Hypergraph:
        k = H.k
        if H.layout is None or H.layout.num_parts != k or not H.partite_proper:
            raise LayoutError("anchor augmentation needs a k-partite-proper layout with k parts")
        part_of = H.layout.part_of
        n = H.n
        edges = set()
        for e in H.edges:
            by_part = [0] * k
            for v in e:
                by_part[part_of[v]] = v
            for mask in range(1 << k):
                edges.add(tuple(n + j if mask >> j & 1 else by_part[j] for j in range(k)))
        parts = [part + (n + j,) for j, part in enumerate(H.layout.parts)]
        return Hypergraph(k=k, n=n + k, edges=edges, layout=self._layout(parts), partite_proper=True)

    def lift(self, H: Hypergraph, ell: int, coloring: Mapping[int, int]) -> Hypergraph:
        if ell < H.k:
            raise ArgumentError(f"cannot lift {H.k}-uniform to {ell}-uniform")
        for v in range(H.n):
            c = coloring.get(v)
            if c is None or not 0 <= c < ell:
                raise ColoringError(f"vertex {v} has no color in [0, {ell})")
        color_of: Dict[int, int] = {v: coloring[v] for v in range(H.n)}
        missing: List[Tuple[Edge, List[int]]] = []
        for e in H.sorted_edges:
            used = [color_of[v] for v in e]
            if len(set(used)) != len(used):
                raise ColoringError(f"edge {list(e)} repeats a color")
            missing.append((e, [c for c in range(ell) if c not in used]))

        aux: Dict[Tuple[int, int], int] = {}
        next_id = H.n
        for c in range(ell):
            for idx, (_, colors) in enumerate(missing):
                if c in colors:
                    aux[idx, c] = next_id
                    color_of[next_id] = c
                    next_id += 1
        edges = [e + tuple(aux[idx, c] for c in colors) for idx, (e, colors) in enumerate(missing)]
        parts = [[v for v in range(next_id) if color_of[v] == c] for c in range(ell)]
        return Hypergraph(k=ell, n=next_id, edges=edges, layout=self._layout(parts), partite_proper=True)


_augment = AugmentGenerator()


def augment_with_anchors(H: Hypergraph) -> Hypergraph:
    return _augment.anchors(H)


def lift_to_uniformity(H: Hypergraph, ell: int, coloring: Mapping[int, int]) -> Hypergraph:
    return _augment.lift(H, ell, coloring)
