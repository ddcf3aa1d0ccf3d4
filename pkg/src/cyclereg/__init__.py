"""Cycle-regularity analysis and robust recognition of I-graphs, double
generalized Petersen graphs, and folded cubes."""

from .cycles import (
    NotCubicError,
    OctagonTriple,
    Path,
    PathTooLongError,
    RegularityReport,
    count_cycles,
    count_cycles_through_path,
    octagon_partition,
    octagon_value,
    regularity_scan,
)
from .families import (
    DPParams,
    FQParams,
    IParams,
    OddNError,
    ParamOutOfRangeError,
    canonical_i_params,
    dp_canonical_params,
    dp_even_twin,
    dp_gp_equivalent,
    dp_twin_map,
    generate_dp,
    generate_folded_cube,
    generate_gp,
    generate_hypercube,
    generate_i_graph,
)
from .formats import (
    ParseError,
    decode_graph6,
    emit_edge_list,
    encode_graph6,
    parse_edge_list,
)
from .graph import (
    DuplicateEdgeError,
    GraphError,
    LabeledGraph,
    SelfLoopError,
    UNREACHABLE,
    VertexOutOfRangeError,
    ball,
    bfs_distances,
    build_graph,
    connected_components,
    induced_subgraph,
    is_bipartite,
    is_regular,
)
from .recognition import (
    Certificate,
    DiagonalState,
    Rejection,
    determine_diagonals,
    extend_dp,
    extend_fq,
    extend_i,
    exact_dp_isomorphism,
    exact_i_isomorphism,
    find_isomorphism,
    recognize,
    recognize_dp,
    recognize_folded_cube,
    recognize_i_graph,
    verify_certificate,
)
from .tables import (
    CycleClass,
    CycleVariant,
    FqLambda,
    UnsupportedPatternError,
    dp_cycle_classes,
    fq_lambda,
    gamma_value,
    i_graph_cycle_classes,
    predict_dp_octagon,
    predict_i_octagon,
    published_fq_lambda,
)

__version__ = "0.1.0"
