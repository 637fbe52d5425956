"""Total weight choosability toolkit: the A_G / B_G edge-row matrices,
permanents and permanent indices, perfect-matching counts in line graphs,
orientation and reduction certificates, and proper-weighting search."""

from .certificate import Certificate
from .choosability import (
    FamilyVerdict,
    TotalListAssignment,
    TotalWeighting,
    check_12_certificate,
    classify_family,
    extend_weighting_clique,
    find_proper_weighting,
    random_lists,
)
from .errors import GraphError, ParseError, ResourceLimitError, VerificationError
from .graph import (
    CyclicClassification,
    Graph,
    OrientedGraph,
    build_graph,
    classify,
    edge_split,
    family,
    graph_operation,
    line_graph,
    orient,
    orient_arcs,
)
from .matchings import (
    count_perfect_matchings,
    count_pm_line_graph,
    dong_tree_formula,
    even_component_count,
    split_recursion,
)
from .matrices import IndexFunction, LabeledIntMatrix, assemble, build_A, build_B, clique_block_extend
from .permanent import (
    permanent,
    permanent_mod2,
    permanent_naive,
    permanent_with_multiplicities,
    sachs_permanent,
)
from .pind import (
    PindResult,
    certify_pindA,
    pind_exhaustive,
    proof_orientation,
    reduce_for_pindB,
    verify_certificate,
    verify_lemma31,
)

__version__ = "0.1.0"
