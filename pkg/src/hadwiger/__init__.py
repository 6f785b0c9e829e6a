"""Exact minors, colourings and Hadwiger-type statement checks for small graphs."""

from .canon import canonical_form, is_isomorphic
from .enumeration import enumerate_graphs
from .errors import CapacityError, ContractViolation, Graph6Error, SearchBudgetExceeded
from .graph import (
    Decomposition,
    Graph,
    complete_graph,
    connected_to_each_other,
    contract_edge,
    delete_edge,
    delete_vertex,
    disjoint_union_cliques,
    is_connected_subset,
    isolate_vertex,
    quotient,
    remove_isolated,
)
from .graph6 import from_graph6, to_graph6

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "ContractViolation",
    "Decomposition",
    "Graph",
    "Graph6Error",
    "SearchBudgetExceeded",
    "canonical_form",
    "complete_graph",
    "connected_to_each_other",
    "contract_edge",
    "delete_edge",
    "delete_vertex",
    "disjoint_union_cliques",
    "enumerate_graphs",
    "from_graph6",
    "is_connected_subset",
    "is_isomorphic",
    "isolate_vertex",
    "quotient",
    "remove_isolated",
    "to_graph6",
]
