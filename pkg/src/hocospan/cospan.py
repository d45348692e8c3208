"""Cospans ``dom -> apex <- cod`` of finite sets with a graph apex.

Composition is diagrammatic: ``compose_homotopy(f, g)`` is "f then g".
Both composites keep ``f``'s apex vertices first, then ``g``'s.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

from hocospan.graph import Graph, attach_edges, disjoint_union
from hocospan.unionfind import UnionFind

GeneratorKind = Literal["mult", "unit", "comult", "counit", "swap"]


class CompositionTypeError(ValueError):
    """Raised when the middle feet of a composite disagree."""


@dataclass(frozen=True)
class FinSet:
    size: int = 0

    def __post_init__(self):
        if self.size < 0:
            raise ValueError(f"negative finite set size {self.size}")


@dataclass(frozen=True)
class GraphCospan:
    dom: FinSet
    cod: FinSet
    apex: Graph
    leg_in: tuple[int, ...]
    leg_out: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "leg_in", tuple(self.leg_in))
        object.__setattr__(self, "leg_out", tuple(self.leg_out))
        for name, foot, leg in (("leg_in", self.dom, self.leg_in), ("leg_out", self.cod, self.leg_out)):
            if len(leg) != foot.size:
                raise ValueError(f"{name} has {len(leg)} entries for a foot of size {foot.size}")
            for a, v in enumerate(leg):
                if not 0 <= v < self.apex.vertex_count:
                    raise ValueError(f"{name}[{a}] = {v} is not an apex vertex")

    @classmethod
    def _trusted(cls, dom: FinSet, cod: FinSet, apex: Graph, leg_in: tuple[int, ...], leg_out: tuple[int, ...]) -> GraphCospan:
        f = object.__new__(cls)
        for name, value in (("dom", dom), ("cod", cod), ("apex", apex), ("leg_in", leg_in), ("leg_out", leg_out)):
            object.__setattr__(f, name, value)
        return f

    @classmethod
    def build(cls, vertex_count, edges, leg_in, leg_out) -> GraphCospan:
        return cls(FinSet(len(leg_in)), FinSet(len(leg_out)), Graph(vertex_count, tuple(edges)), leg_in, leg_out)


@lru_cache(maxsize=64)
def identity_cospan(n: int) -> GraphCospan:
    legs = tuple(range(n))
    return GraphCospan(FinSet(n), FinSet(n), Graph(n), legs, legs)


def empty_cospan() -> GraphCospan:
    return identity_cospan(0)


_GENERATORS = {
    "mult": (1, (0, 0), (0,)),
    "unit": (1, (), (0,)),
    "comult": (1, (0,), (0, 0)),
    "counit": (1, (0,), ()),
    "swap": (2, (0, 1), (1, 0)),
}


@lru_cache(maxsize=None)
def generator_cospan(kind: GeneratorKind) -> GraphCospan:
    try:
        vertices, leg_in, leg_out = _GENERATORS[kind]
    except KeyError:
        raise ValueError(f"unknown generator {kind!r}") from None
    return GraphCospan.build(vertices, (), leg_in, leg_out)


def _check_composable(f: GraphCospan, g: GraphCospan) -> None:
    if f.cod.size != g.dom.size:
        raise CompositionTypeError(
            f"cannot compose: first codomain has size {f.cod.size}, "
            f"second domain has size {g.dom.size}"
        )


def compose_homotopy(f: GraphCospan, g: GraphCospan) -> GraphCospan:
    """Homotopy pushout: sew one interval per middle point instead of gluing."""
    _check_composable(f, g)
    apex, fmap, gmap = disjoint_union(f.apex, g.apex)
    cables = [(fmap[f.leg_out[a]], gmap[g.leg_in[a]]) for a in range(f.cod.size)]
    apex = attach_edges(apex, cables)
    return GraphCospan._trusted(
        f.dom, g.cod, apex, tuple(fmap[v] for v in f.leg_in), tuple(gmap[v] for v in g.leg_out)
    )


def compose_strict(f: GraphCospan, g: GraphCospan) -> GraphCospan:
    """Set pushout: identify the two images of every middle point.

    Edges follow their endpoints through the quotient, so identifying both
    ends of an existing edge turns it into a loop.
    """
    _check_composable(f, g)
    apex, fmap, gmap = disjoint_union(f.apex, g.apex)
    uf = UnionFind(apex.vertex_count)
    for a in range(f.cod.size):
        uf.union(fmap[f.leg_out[a]], gmap[g.leg_in[a]])
    roots = sorted({uf.find(v) for v in range(apex.vertex_count)})
    index = {r: i for i, r in enumerate(roots)}
    q = [index[uf.find(v)] for v in range(apex.vertex_count)]
    quotient = Graph._trusted(len(roots), tuple((q[u], q[v]) for u, v in apex.edges))
    return GraphCospan._trusted(
        f.dom, g.cod, quotient, tuple(q[fmap[v]] for v in f.leg_in), tuple(q[gmap[v]] for v in g.leg_out)
    )


def tensor_cospan(f: GraphCospan, g: GraphCospan) -> GraphCospan:
    apex, fmap, gmap = disjoint_union(f.apex, g.apex)
    return GraphCospan._trusted(
        FinSet(f.dom.size + g.dom.size),
        FinSet(f.cod.size + g.cod.size),
        apex,
        tuple(fmap[v] for v in f.leg_in) + tuple(gmap[v] for v in g.leg_in),
        tuple(fmap[v] for v in f.leg_out) + tuple(gmap[v] for v in g.leg_out),
    )


def mapping_cylinder(f: GraphCospan) -> GraphCospan:
    """Whisker every foot point to its image, so the legs become disjoint embeddings.

    Fresh vertices are numbered after the original apex: first one per
    ``dom`` element, then one per ``cod`` element.
    """
    n = f.apex.vertex_count
    targets = f.leg_in + f.leg_out
    whiskers = tuple((n + i, v) for i, v in enumerate(targets))
    apex = Graph._trusted(n + len(targets), f.apex.edges + whiskers)
    leg_in = tuple(n + i for i in range(f.dom.size))
    leg_out = tuple(n + f.dom.size + j for j in range(f.cod.size))
    return GraphCospan._trusted(f.dom, f.cod, apex, leg_in, leg_out)
