"""Exact toolkit for finite abstract simplicial complexes and Dehn-Sommerville calculus."""

from .core import (
    Complex,
    ComplexError,
    OpenSet,
    closure,
    euler_characteristic,
    f_vector,
    inclusion_graph,
    load_complex,
    skeleton_graph,
    stable_unstable,
    star,
    unit_sphere,
)
from .graph import Graph

__version__ = "0.1.0"

__all__ = [
    "Complex",
    "ComplexError",
    "Graph",
    "OpenSet",
    "closure",
    "euler_characteristic",
    "f_vector",
    "inclusion_graph",
    "load_complex",
    "skeleton_graph",
    "stable_unstable",
    "star",
    "unit_sphere",
]
