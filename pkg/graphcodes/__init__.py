"""Graph codes and stabilizer codes over prime fields."""

from graphcodes.convert import graph_to_stabilizer, reduce, roundtrip_check, stabilizer_to_graph
from graphcodes.field import FieldSpec, Scalar
from graphcodes.graph_code import GraphCode
from graphcodes.linalg import GFMatrix, Subspace
from graphcodes.stabilizer import StabilizerSpace, SymplecticVector

__all__ = [
    "FieldSpec",
    "GFMatrix",
    "GraphCode",
    "Scalar",
    "StabilizerSpace",
    "Subspace",
    "SymplecticVector",
    "graph_to_stabilizer",
    "reduce",
    "roundtrip_check",
    "stabilizer_to_graph",
]
