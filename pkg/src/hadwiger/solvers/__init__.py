from .coloring import chromatic_number, dsatur_greedy, greedy_clique, is_k_colorable
from .homomorphism import has_homomorphism
from .minors import hadwiger_number, has_clique_minor, is_minor
from .oracles import chi_oracle, clique_minor_oracle
from ._budget import NodeBudget
from .witnesses import Coloring, CliqueMinorWitness, HomomorphismWitness, MinorWitness

__all__ = [
    "chromatic_number", "dsatur_greedy", "greedy_clique", "is_k_colorable",
    "has_homomorphism", "hadwiger_number", "has_clique_minor", "is_minor",
    "chi_oracle", "clique_minor_oracle", "NodeBudget",
    "Coloring", "CliqueMinorWitness", "HomomorphismWitness", "MinorWitness",
]
