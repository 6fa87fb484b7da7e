"""Total domination combinatorics on trees and the attached monomial algebra.

The package covers: enumeration of minimal (S-)total dominating sets via
minimal hypergraph transversals, open-neighborhood ideals with their
irredundant prime decompositions, the polynomial-time characterization and
whisker-based generation of well totally dominated (unmixed) trees, explicit
shellings of stable complexes, and the Cohen-Macaulay type computed both by
counting and by an independent socle oracle.
"""

from .algebra import (
    ArtinianReduction,
    TypeReport,
    artinian_reduction,
    cm_type,
    minimal_v3_td_sets,
    odd_open_neighborhood_ideal,
    parametric_decomposition,
    socle_dimension,
)
from .complexes import (
    FacetLabeling,
    ShellingOrder,
    SimplicialComplex,
    brute_force_shellable,
    even_stable_complex,
    even_stable_shelling,
    facet_labeling,
    facet_vector,
    join,
    shelling_order,
    stable_complex,
    stable_shelling,
    stanley_reisner_complex,
    stanley_reisner_ideal,
    verify_shelling,
)
from .construct import (
    ConstructionTrace,
    TraceStep,
    apply_o,
    deconstruct,
    edge_subdivision,
    generate,
    leaf_normalize,
    replay,
    suspension,
)
from .domination import (
    DominationSelector,
    MinimalSetFamily,
    NeighborhoodHypergraph,
    domination_selector,
    is_minimal_set,
    is_s_td_set,
    is_td_set,
    is_unmixed_bruteforce,
    minimal_s_td_sets,
    minimal_td_sets,
    minimal_transversals,
    neighborhood_hypergraph,
    open_neighborhood,
)
from .errors import (
    AmbientMismatchError,
    EdgeListParseError,
    EnumerationCapExceeded,
    MixedTreeError,
    NotAForestError,
    NotATreeError,
    NotBalancedError,
    NotSquareFreeError,
    TheoremViolation,
    TotaldomError,
)
from .graphs import (
    Coloring,
    Forest,
    Graph,
    HeightMap,
    Tree,
    VertexSet,
    branch,
    canonical_form,
    classify_vertices,
    heights,
    is_isomorphic,
    parse_graph,
    path_graph,
    radar,
    render_edge_list,
    star_graph,
    two_coloring,
)
from .ideals import (
    Monomial,
    MonomialIdeal,
    PrimeDecomposition,
    decompose_squarefree,
    edge_ideal,
    minimalize,
    open_neighborhood_ideal,
)
from .treegen import Lcg64, all_trees, random_tree, trees_up_to
from .unmixed import (
    ComponentCheck,
    InteriorGraphs,
    UnmixedCertificate,
    characterize_balanced_unmixed,
    interior_graphs,
    is_balanced,
    is_unmixed_fast,
    minimal_bd_sets,
    minimal_rd_sets,
    mixedness_witness,
)

__version__ = "0.1.0"
