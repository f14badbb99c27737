"""Word-representability of co-bipartite graphs.

A co-bipartite graph is semi-transitive (equivalently word-representable)
exactly when its biadjacency matrix has circularly compatible ones.  The
package decides this, builds orientations and forbidden-subgraph
certificates, and ships exhaustive oracles used to cross-check the decision.
"""

from .binmatrix import BinaryMatrix, Biorder, CCOResult, is_cco, search_cco_biorder
from .errors import BudgetError, InputError, InternalError
from .graph import (CoBipartition, Graph, build_graph, cobipartite_partition, complement,
                    find_induced, generate_family, induced_subgraph, local_complement)
from .orientations import (Orientation, Violation, find_violation, is_semi_transitive,
                           search_semi_transitive)
from .recognizer import (Certificate, Verdict, biadjacency, cg, extract_certificate,
                         generate_gs, is_cobipartite_permutation, recognize,
                         validate_certificate, witness_orientation)
from .words import represents, search_representant

__version__ = "0.1.0"

__all__ = [
    "BinaryMatrix", "Biorder", "BudgetError", "CCOResult", "Certificate", "CoBipartition",
    "Graph", "InputError", "InternalError", "Orientation", "Verdict", "Violation",
    "biadjacency", "build_graph", "cg", "cobipartite_partition", "complement",
    "extract_certificate", "find_induced", "find_violation", "generate_family",
    "generate_gs", "induced_subgraph", "is_cco", "is_cobipartite_permutation",
    "is_semi_transitive", "local_complement", "recognize", "represents",
    "search_cco_biorder", "search_representant", "search_semi_transitive",
    "validate_certificate", "witness_orientation",
]
