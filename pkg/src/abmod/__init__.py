"""Error-tolerant graph modules and their decompositions.

A module tolerating alpha missing and beta extra edges per outside vertex
keeps enough algebraic structure (closure under intersection) to support
closures, minimal-module enumeration, coverings, primality tests, and
decomposition trees; bipartite graphs additionally get one-sided maximal
modules.  The hot counting kernel runs compiled when the extension is built
and falls back to pure Python otherwise (see ``abmod.kernels``).
"""

from .abmodule import (
    ClosureTrace,
    SplitterReport,
    alpha_neighbourhood,
    beta_non_neighbourhood,
    closure_naive,
    closure_refined,
    is_ab_module,
    is_trivial_module,
    splitter_set,
)
from .bipartite import (
    BipartiteGraph,
    OneSidedFamily,
    TwinClassification,
    is_false_ab_twin,
    maximal_one_sided_modules,
    one_sided_family_closure_props,
    one_sided_module_check,
    twin_classify,
)
from .decomposition import (
    CographResult,
    Connectivity,
    MatchingCut,
    ModularPartition,
    TreeNode,
    brittle_decomposition_check,
    classify_partition,
    decomposition_tree,
    is_ab_cograph,
    is_alpha_connected,
    is_beta_non_connected,
    matching_cut,
    maximal_nontrivial_module,
    tree_to_dot,
    tree_to_json_dict,
    validate_tree,
)
from .enumeration import (
    ModuleFamily,
    PrimalityReport,
    all_modules_oracle,
    covering,
    is_brittle,
    is_prime,
    minimal_nontrivial_modules,
    primality,
)
from .graph import (
    AbParams,
    Graph,
    VertexSet,
    complement,
    induced,
    neighbourhood_of_set,
    non_neighbourhood_of_set,
    twins,
)
from .io import GraphDocument, gen_pmg4, gen_random, parse_graph, serialize_graph
from .ksplitter import (
    KSplitterLawReport,
    KSplitterReport,
    k_splitter_laws_check,
    k_splitter_report,
    minimal_k_splitter_supersets,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
