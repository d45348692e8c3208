"""Cospans of finite sets with graph apexes, composed by homotopy pushout."""

from hocospan.graph import Graph, betti_numbers, components
from hocospan.cospan import (
    GraphCospan,
    compose_homotopy,
    compose_strict,
    generator_cospan,
    identity_cospan,
    mapping_cylinder,
    tensor_cospan,
)
from hocospan.normal import (
    NormalCospan,
    OpenComponent,
    compose_normal,
    equal_normal,
    normalize,
    tensor_normal,
)
from hocospan.termlang import compile_term, infer_arity, parse

__all__ = [
    "Graph",
    "GraphCospan",
    "NormalCospan",
    "OpenComponent",
    "betti_numbers",
    "compile_term",
    "components",
    "compose_homotopy",
    "compose_normal",
    "compose_strict",
    "equal_normal",
    "generator_cospan",
    "identity_cospan",
    "infer_arity",
    "mapping_cylinder",
    "normalize",
    "parse",
    "tensor_cospan",
    "tensor_normal",
]
