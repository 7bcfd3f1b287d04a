"""Acyclic graph colouring: palette bounds, a local-correction sampler and exact oracles."""

__version__ = "0.1.0"

from .colouring import Colouring, parse_colouring
from .constraints import ConstraintSet
from .cycles import CycleFamily, ImplicitCycles, enumerate_even_cycles
from .graph import Graph, load_graph

__all__ = [
    "Colouring",
    "ConstraintSet",
    "CycleFamily",
    "Graph",
    "ImplicitCycles",
    "enumerate_even_cycles",
    "load_graph",
    "parse_colouring",
]
