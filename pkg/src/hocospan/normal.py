"""Canonical classification data for homotopy classes of graph cospans.

A connected graph is determined up to homotopy by its first Betti number,
so a cospan class is fully described by which boundary ports share a
component, the Betti number of each such component, and the Betti numbers
of the components that touch no port at all.  Open components are ordered
by their smallest port (input ports before output ports), closed
components ascending, so structural equality is morphism equality.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass

from hocospan.cospan import CompositionTypeError, GraphCospan
from hocospan.graph import betti_numbers, component_labels
from hocospan.unionfind import UnionFind


@dataclass(frozen=True, order=True)
class OpenComponent:
    in_ports: tuple[int, ...]
    out_ports: tuple[int, ...]
    betti: int = 0


@dataclass(frozen=True)
class NormalCospan:
    dom_size: int
    cod_size: int
    open_components: tuple[OpenComponent, ...] = ()
    closed_components: tuple[int, ...] = ()

    def to_text(self) -> str:
        return encode(self)

    @property
    def total_betti(self) -> int:
        return sum(c.betti for c in self.open_components) + sum(self.closed_components)


class NormalFormError(ValueError):
    pass


def _sort_key(dom_size: int, c: OpenComponent) -> int:
    return c.in_ports[0] if c.in_ports else dom_size + c.out_ports[0]


def canonicalize(p: NormalCospan) -> NormalCospan:
    opens = [
        OpenComponent(tuple(sorted(c.in_ports)), tuple(sorted(c.out_ports)), c.betti)
        for c in p.open_components
    ]
    for c in opens:
        if not c.in_ports and not c.out_ports:
            raise NormalFormError("open component without ports")
    opens.sort(key=lambda c: _sort_key(p.dom_size, c))
    return NormalCospan(p.dom_size, p.cod_size, tuple(opens), tuple(sorted(p.closed_components)))


def check_invariants(p: NormalCospan) -> None:
    """Raise NormalFormError unless ``p`` is a well-formed canonical normal cospan."""
    ins = sorted(i for c in p.open_components for i in c.in_ports)
    outs = sorted(j for c in p.open_components for j in c.out_ports)
    if ins != list(range(p.dom_size)):
        raise NormalFormError(f"input ports {ins} do not partition 0..{p.dom_size - 1}")
    if outs != list(range(p.cod_size)):
        raise NormalFormError(f"output ports {outs} do not partition 0..{p.cod_size - 1}")
    if any(c.betti < 0 for c in p.open_components) or any(b < 0 for b in p.closed_components):
        raise NormalFormError("negative Betti number")
    if canonicalize(p) != p:
        raise NormalFormError("not in canonical order")


def normalize(f: GraphCospan) -> NormalCospan:
    labels = component_labels(f.apex)
    betti = betti_numbers(f.apex)
    ins: dict[int, list[int]] = {}
    outs: dict[int, list[int]] = {}
    for a, v in enumerate(f.leg_in):
        ins.setdefault(labels[v], []).append(a)
    for b, v in enumerate(f.leg_out):
        outs.setdefault(labels[v], []).append(b)
    opens = []
    closed = []
    for c, b in betti.items():
        if c in ins or c in outs:
            opens.append(OpenComponent(tuple(ins.get(c, ())), tuple(outs.get(c, ())), b))
        else:
            closed.append(b)
    return canonicalize(NormalCospan(f.dom.size, f.cod.size, tuple(opens), tuple(closed)))


def compose_normal(p: NormalCospan, q: NormalCospan) -> NormalCospan:
    """Compose normal forms directly, without building a graph apex.

    The gluing graph has a node per open component of ``p`` and of ``q``
    and an edge per middle port.  A merged component ``K`` has Betti number
    equal to the sum of its parts plus ``|E_K| - |V_K| + 1``.
    """
    if p.cod_size != q.dom_size:
        raise CompositionTypeError(
            f"cannot compose: first codomain has size {p.cod_size}, "
            f"second domain has size {q.dom_size}"
        )
    left, right = p.open_components, q.open_components
    nodes = list(left) + list(right)
    owner_out = {j: i for i, c in enumerate(left) for j in c.out_ports}
    owner_in = {a: len(left) + i for i, c in enumerate(right) for a in c.in_ports}
    uf = UnionFind(len(nodes))
    cables = [(owner_out[a], owner_in[a]) for a in range(p.cod_size)]
    for u, v in cables:
        uf.union(u, v)

    merged: dict[int, dict] = {}
    for i, c in enumerate(nodes):
        k = merged.setdefault(uf.find(i), {"in": [], "out": [], "betti": 1})
        k["betti"] += c.betti - 1
        if i < len(left):
            k["in"].extend(c.in_ports)
        else:
            k["out"].extend(c.out_ports)
    for u, _ in cables:
        merged[uf.find(u)]["betti"] += 1

    opens = []
    closed = list(p.closed_components) + list(q.closed_components)
    for k in merged.values():
        if k["in"] or k["out"]:
            opens.append(OpenComponent(tuple(k["in"]), tuple(k["out"]), k["betti"]))
        else:
            closed.append(k["betti"])
    return canonicalize(NormalCospan(p.dom_size, q.cod_size, tuple(opens), tuple(closed)))


def tensor_normal(p: NormalCospan, q: NormalCospan) -> NormalCospan:
    shifted = tuple(
        OpenComponent(
            tuple(a + p.dom_size for a in c.in_ports),
            tuple(b + p.cod_size for b in c.out_ports),
            c.betti,
        )
        for c in q.open_components
    )
    return canonicalize(
        NormalCospan(
            p.dom_size + q.dom_size,
            p.cod_size + q.cod_size,
            p.open_components + shifted,
            p.closed_components + q.closed_components,
        )
    )


def equal_normal(p: NormalCospan, q: NormalCospan) -> bool:
    return canonicalize(p) == canonicalize(q)


def identity_normal(n: int) -> NormalCospan:
    return NormalCospan(n, n, tuple(OpenComponent((i,), (i,), 0) for i in range(n)))


def _ports(ports) -> str:
    return "{" + ",".join(str(i) for i in ports) + "}"


def encode(p: NormalCospan) -> str:
    """Text form: one line per open component, then one per closed Betti value.

    >>> print(encode(NormalCospan(1, 1, (OpenComponent((0,), (0,), 1),), (0, 0))), end="")
    open in={0} out={0} b=1
    closed b=0 (x2)
    """
    p = canonicalize(p)
    lines = [f"open in={_ports(c.in_ports)} out={_ports(c.out_ports)} b={c.betti}" for c in p.open_components]
    for b, count in sorted(Counter(p.closed_components).items()):
        lines.append(f"closed b={b} (x{count})")
    return "".join(line + "\n" for line in lines)


def to_json(p: NormalCospan) -> str:
    p = canonicalize(p)
    data = {
        "dom": p.dom_size,
        "cod": p.cod_size,
        "open": [{"in": list(c.in_ports), "out": list(c.out_ports), "betti": c.betti} for c in p.open_components],
        "closed": list(p.closed_components),
    }
    return json.dumps(data, sort_keys=True)
