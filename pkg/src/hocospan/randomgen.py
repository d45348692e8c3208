"""Seeded random cospans and terms for property checks.

Every function takes a ``random.Random`` so callers control reproducibility;
the same seed always yields the same objects.
"""

from __future__ import annotations

import random
from typing import Optional

from hocospan.cospan import GraphCospan
from hocospan.termlang import Arity, Comult, Counit, Id, Mult, Par, Seq, Swap, Term, Unit, infer_arity

MAX_DEPTH = 8
MAX_ARITY = 6


def random_graph_cospan(
    rng: random.Random,
    dom: Optional[int] = None,
    cod: Optional[int] = None,
    max_vertices: int = 8,
    max_edges: int = 10,
    max_foot: int = 4,
) -> GraphCospan:
    dom = rng.randint(0, max_foot) if dom is None else dom
    cod = rng.randint(0, max_foot) if cod is None else cod
    low = 1 if dom or cod else 0
    n = rng.randint(low, max_vertices)
    m = rng.randint(0, max_edges) if n else 0
    edges = [(rng.randrange(n), rng.randrange(n)) for _ in range(m)]
    leg_in = [rng.randrange(n) for _ in range(dom)]
    leg_out = [rng.randrange(n) for _ in range(cod)]
    return GraphCospan.build(n, edges, leg_in, leg_out)


def random_composable_pair(rng: random.Random, **kw) -> tuple[GraphCospan, GraphCospan]:
    f = random_graph_cospan(rng, **kw)
    g = random_graph_cospan(rng, dom=f.cod.size, **kw)
    return f, g


_LEAVES_BY_DOM = {0: (Unit,), 1: (Comult, Counit), 2: (Mult, Swap)}


def _leaf(rng: random.Random, dom: int, max_arity: int) -> tuple[Term, int]:
    options = [c() for c in _LEAVES_BY_DOM.get(dom, ())]
    options = [t for t in options if infer_arity(t).cod <= max_arity]
    if not options or rng.random() < 0.25:
        return Id(dom), dom
    t = rng.choice(options)
    return t, infer_arity(t).cod


def random_term(
    rng: random.Random,
    dom: Optional[int] = None,
    max_depth: int = MAX_DEPTH,
    max_arity: int = MAX_ARITY,
    leaf_bias: float = 0.3,
) -> Term:
    """A well-typed term with domain ``dom`` and every arity at most ``max_arity``.

    Inner nodes are Seq or Par with equal probability; a draw whose
    codomain exceeds ``max_arity`` is discarded and redrawn, falling back
    to an identity after repeated failures.
    """
    if dom is None:
        dom = rng.randint(0, min(3, max_arity))
    for _ in range(20):
        drawn = _random_term(rng, dom, max_depth, max_arity, leaf_bias)
        if drawn is not None:
            return drawn[0]
    return Id(dom)


def _random_term(rng, dom, depth, max_arity, leaf_bias) -> Optional[tuple[Term, int]]:
    """Draw a term and its codomain, or None when the draw got too wide."""
    if depth <= 1 or rng.random() < leaf_bias:
        return _leaf(rng, dom, max_arity)
    if rng.random() < 0.5:
        first = _random_term(rng, dom, depth - 1, max_arity, leaf_bias)
        if first is None:
            return None
        second = _random_term(rng, first[1], depth - 1, max_arity, leaf_bias)
        if second is None:
            return None
        return Seq(first[0], second[0]), second[1]
    split = rng.randint(0, dom)
    left = _random_term(rng, split, depth - 1, max_arity, leaf_bias)
    right = _random_term(rng, dom - split, depth - 1, max_arity, leaf_bias)
    if left is None or right is None or left[1] + right[1] > max_arity:
        return None
    return Par(left[0], right[0]), left[1] + right[1]


def random_term_pair(rng: random.Random, **kw) -> tuple[Term, Term]:
    """Two terms where the second starts at the first one's codomain."""
    first = random_term(rng, **kw)
    second = random_term(rng, dom=infer_arity(first).cod, **kw)
    return first, second


def random_term_with_arity(rng: random.Random, arity: Arity, tries: int = 200, **kw) -> Optional[Term]:
    for _ in range(tries):
        t = random_term(rng, dom=arity.dom, **kw)
        if infer_arity(t).cod == arity.cod:
            return t
    return None
