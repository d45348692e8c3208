"""Finite 1-dimensional CW complexes stored as multigraphs.

Vertices are ``0..vertex_count-1``.  Edges are unordered endpoint pairs;
loops ``(u, u)`` and repeated pairs are allowed and each counts as one
1-cell.  Component identifiers are the smallest vertex index in the
component.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from hocospan.unionfind import UnionFind


class InvalidVertexError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    vertex_count: int = 0
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.vertex_count < 0:
            raise ValueError(f"negative vertex count {self.vertex_count}")
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        for i, (u, v) in enumerate(edges):
            _check_vertex(self, u, f"edge {i}")
            _check_vertex(self, v, f"edge {i}")

    @classmethod
    def _trusted(cls, vertex_count: int, edges: tuple[tuple[int, int], ...]) -> Graph:
        # skips validation; only for results of operations on valid graphs
        g = object.__new__(cls)
        object.__setattr__(g, "vertex_count", vertex_count)
        object.__setattr__(g, "edges", edges)
        return g

    @property
    def edge_count(self) -> int:
        return len(self.edges)


def _check_vertex(g: Graph, v: int, where: str) -> None:
    if not 0 <= v < g.vertex_count:
        raise InvalidVertexError(
            f"{where}: vertex {v} out of range for {g.vertex_count} vertices"
        )


def component_labels(g: Graph) -> list[int]:
    """Component identifier of every vertex, indexed by vertex."""
    uf = UnionFind(g.vertex_count)
    for u, v in g.edges:
        uf.union(u, v)
    return uf.labels()


def components(g: Graph) -> dict[int, tuple[int, ...]]:
    """Map each component identifier to the sorted vertices it contains."""
    out: dict[int, list[int]] = {}
    for v, c in enumerate(component_labels(g)):
        out.setdefault(c, []).append(v)
    return {c: tuple(vs) for c, vs in sorted(out.items())}


def betti_numbers(g: Graph) -> dict[int, int]:
    """First Betti number ``|E_K| - |V_K| + 1`` of every component ``K``."""
    labels = component_labels(g)
    betti = {c: 1 for c in sorted(set(labels))}
    for c in labels:
        betti[c] -= 1
    # a loop is one 1-cell on one 0-cell
    for u, _ in g.edges:
        betti[labels[u]] += 1
    return betti


def disjoint_union(g: Graph, h: Graph) -> tuple[Graph, list[int], list[int]]:
    """Place ``h`` after ``g``; also return the vertex reindexing of each."""
    shift = g.vertex_count
    edges = g.edges + tuple((u + shift, v + shift) for u, v in h.edges)
    union = Graph._trusted(g.vertex_count + h.vertex_count, edges)
    return union, list(range(shift)), [v + shift for v in range(h.vertex_count)]


def attach_edges(g: Graph, pairs: Iterable[tuple[int, int]]) -> Graph:
    pairs = tuple(pairs)
    for i, (u, v) in enumerate(pairs):
        _check_vertex(g, u, f"attached pair {i}")
        _check_vertex(g, v, f"attached pair {i}")
    return Graph._trusted(g.vertex_count, g.edges + tuple((int(u), int(v)) for u, v in pairs))


def subdivide_edge(g: Graph, edge_index: int) -> Graph:
    """Split edge ``(u, v)`` into ``(u, w), (w, v)`` through a fresh vertex ``w``."""
    if not 0 <= edge_index < len(g.edges):
        raise IndexError(f"edge index {edge_index} out of range ({len(g.edges)} edges)")
    u, v = g.edges[edge_index]
    w = g.vertex_count
    edges = g.edges[:edge_index] + ((u, w), (w, v)) + g.edges[edge_index + 1 :]
    return Graph._trusted(g.vertex_count + 1, edges)


def relabel(g: Graph, perm: list[int]) -> Graph:
    """Rename vertex ``v`` to ``perm[v]``; ``perm`` must be a permutation."""
    if sorted(perm) != list(range(g.vertex_count)):
        raise ValueError("relabeling is not a permutation of the vertices")
    return Graph(g.vertex_count, tuple((perm[u], perm[v]) for u, v in g.edges))
