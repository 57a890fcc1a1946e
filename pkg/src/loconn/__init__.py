"""Local connectivity conditions and cycle structure of small graphs."""

from .catalog import PatternId, named_graph
from .cycles import (
    girth_circumference,
    hamiltonian_cycle,
    is_fully_cycle_extendable,
    is_weakly_pancyclic,
)
from .enumeration import canonical_certificate, enumerate_graphs
from .graph import Graph
from .graph6 import parse_graph6, write_graph6
from .induced import contains_induced, find_induced
from .kernels import BACKEND
from .local import (
    is_locally_connected,
    is_locally_dirac,
    is_locally_ore,
    satisfies_common_neighbor_condition,
)
from .theorems import TheoremId, verify_theorem

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Graph",
    "PatternId",
    "TheoremId",
    "canonical_certificate",
    "contains_induced",
    "enumerate_graphs",
    "find_induced",
    "girth_circumference",
    "hamiltonian_cycle",
    "is_fully_cycle_extendable",
    "is_locally_connected",
    "is_locally_dirac",
    "is_locally_ore",
    "is_weakly_pancyclic",
    "named_graph",
    "parse_graph6",
    "satisfies_common_neighbor_condition",
    "verify_theorem",
    "write_graph6",
]
