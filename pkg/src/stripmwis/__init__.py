"""Exact maximum-weight independent set on subdivided-claw-free graphs via
extended strip decompositions, with brute-force oracles for validation."""

from .graph import Graph, parse_graph, serialize_graph
from .oracles import mwis_brute, mwm_brute, find_induced_sttt
from .esd import (ExtendedStripDecomposition, validate_esd, is_rigid,
                  particles, local_clean, parse_esdf, serialize_esdf)
from .separators import AlgoConfig, gyarfas_path, make_backend
from .ind import ind_solve, witness_by_self_reduction

__all__ = [
    "Graph", "parse_graph", "serialize_graph",
    "mwis_brute", "mwm_brute", "find_induced_sttt",
    "ExtendedStripDecomposition", "validate_esd", "is_rigid", "particles",
    "local_clean", "parse_esdf", "serialize_esdf",
    "AlgoConfig", "gyarfas_path", "make_backend",
    "ind_solve", "witness_by_self_reduction",
]

__version__ = "0.1.0"
