"""Exact general position numbers of graphs and their behaviour under vertex and edge deletion."""

from .errors import CapExceeded, GraphError, ParameterError
from .families import FamilySpec, family, generate
from .gp import (
    GpCertificate,
    brute_force_gp,
    check_characterization,
    gp_number,
    gp_number_forcing,
    in_some_gp_set,
    independence_number,
    is_general_position,
    leaves_count,
)
from .graph import (
    DistanceMatrix,
    Edge,
    Graph,
    all_pairs_distances,
    build_graph,
    connected_components,
    delete_edge,
    delete_vertex,
    diameter,
    is_on_geodesic,
)

__all__ = [
    "CapExceeded",
    "DistanceMatrix",
    "Edge",
    "FamilySpec",
    "GpCertificate",
    "Graph",
    "GraphError",
    "ParameterError",
    "all_pairs_distances",
    "brute_force_gp",
    "build_graph",
    "check_characterization",
    "connected_components",
    "delete_edge",
    "delete_vertex",
    "diameter",
    "family",
    "generate",
    "gp_number",
    "gp_number_forcing",
    "in_some_gp_set",
    "independence_number",
    "is_general_position",
    "is_on_geodesic",
    "leaves_count",
]
