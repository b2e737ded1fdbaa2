"""Ordered and convex-geometric graph toolkit.

Crossing structure, tree classification, extremal constructions, an exact
extremal-number solver, constructive dense embeddings, walk-free extraction
and an executable release gate. Graphs are immutable; vertices are 1-based
positions (ordered) or clockwise cyclic positions (cg).
"""

from .constructions import f_n, f_n0, fh_q, fh_r, gstar, pow2
from .containment import (
    Embedding,
    contains,
    find_embedding,
    iter_embeddings,
    validate_embedding,
)
from .errors import BudgetError, InputError, NotApplicableError
from .io import dumps_graph, graph_from_dict, graph_to_dict, load_graph, save_graph
from .order import (
    CgGraph,
    OrderedGraph,
    chi_cyclic,
    chi_interval,
    crosses,
    mirror,
    reflect,
    rotate,
)
from .solver import ExtremalResult, embed_dense, extremal_number
from .trees import (
    CgZDecomposition,
    ObstructionCatalog,
    Verdict,
    ZDecomposition,
    cg_z_decompose,
    classify_tree,
    derive_obstructions,
    detect_crossing_path4,
    detect_twin_crossing_paths,
    enumerate_trees,
    is_cg_z_tree,
    is_z_tree,
    is_zigzag,
    linearize,
    z_decompose,
)
from .verify import CheckResult, run_check, run_suite
from .walks import (
    ColoredBipartite,
    Extraction,
    Walk4,
    enumerate_all_walks,
    extract_walk_free,
    find_forbidden_walk,
    size_bound,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetError",
    "CgGraph",
    "CgZDecomposition",
    "CheckResult",
    "ColoredBipartite",
    "Embedding",
    "Extraction",
    "ExtremalResult",
    "InputError",
    "NotApplicableError",
    "ObstructionCatalog",
    "OrderedGraph",
    "Verdict",
    "Walk4",
    "ZDecomposition",
    "cg_z_decompose",
    "chi_cyclic",
    "chi_interval",
    "classify_tree",
    "contains",
    "crosses",
    "derive_obstructions",
    "detect_crossing_path4",
    "detect_twin_crossing_paths",
    "dumps_graph",
    "embed_dense",
    "enumerate_all_walks",
    "enumerate_trees",
    "extract_walk_free",
    "extremal_number",
    "f_n",
    "f_n0",
    "fh_q",
    "fh_r",
    "find_embedding",
    "find_forbidden_walk",
    "graph_from_dict",
    "graph_to_dict",
    "gstar",
    "is_cg_z_tree",
    "is_z_tree",
    "is_zigzag",
    "iter_embeddings",
    "linearize",
    "load_graph",
    "mirror",
    "pow2",
    "reflect",
    "rotate",
    "run_check",
    "run_suite",
    "save_graph",
    "size_bound",
    "validate_embedding",
    "z_decompose",
]
