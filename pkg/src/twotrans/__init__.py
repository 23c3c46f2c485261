"""Exact 2-transitivity of graphs: specialised solvers, an oracle, and hardness gadgets."""

from .bounds import certify, closed_form, delta_upper_bound
from .chain import max_biclique_params, tr2_chain
from .errors import BudgetExceeded, CertificateError, DomainError, ParseError, TwoTransError
from .graph import Graph, RootedTree, parse_edge_list, parse_graph6
from .oracle import VertexPartition, brute_tr, brute_tr2, canonicalize_partition, verify_2transitive
from .recognize import recognize
from .reduction import build_bipartite_gadget, build_chordal_gadget, coloring_to_partition, partition_to_coloring
from .solve import solve
from .split import maximize_clique, tr2_split
from .tree import mark_required, solve_tree, tr2_tree

__all__ = [
    "BudgetExceeded", "CertificateError", "DomainError", "Graph", "ParseError", "RootedTree",
    "TwoTransError", "VertexPartition", "brute_tr", "brute_tr2", "build_bipartite_gadget",
    "build_chordal_gadget", "canonicalize_partition", "certify", "closed_form", "coloring_to_partition",
    "delta_upper_bound", "mark_required", "max_biclique_params", "maximize_clique", "parse_edge_list",
    "parse_graph6", "partition_to_coloring", "recognize", "solve", "solve_tree", "tr2_chain", "tr2_split",
    "tr2_tree", "verify_2transitive",
]
