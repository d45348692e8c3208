"""Graphviz export of a cospan apex.

Apex vertices are nodes ``v<i>``; boundary points are plaintext nodes
``in<a>`` / ``out<b>`` joined to their image by a dashed, labeled leg.
Everything is emitted in index order, so output is deterministic.
"""

from __future__ import annotations

from hocospan.cospan import GraphCospan


def to_dot(f: GraphCospan, name: str = "cospan") -> str:
    lines = [f"graph {name} {{", "  rankdir=LR;", "  node [shape=circle, label=\"\", width=0.15];"]
    for v in range(f.apex.vertex_count):
        lines.append(f"  v{v};")
    for u, v in f.apex.edges:
        lines.append(f"  v{u} -- v{v};")
    for a, v in enumerate(f.leg_in):
        lines.append(f"  in{a} [shape=plaintext, label=\"in{a}\"];")
        lines.append(f"  in{a} -- v{v} [style=dashed, label=\"{a}\"];")
    for b, v in enumerate(f.leg_out):
        lines.append(f"  out{b} [shape=plaintext, label=\"out{b}\"];")
        lines.append(f"  v{v} -- out{b} [style=dashed, label=\"{b}\"];")
    lines.append("}")
    return "\n".join(lines) + "\n"
