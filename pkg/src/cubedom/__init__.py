"""Connected domination and leafy spanning trees in hypercubes."""

from .constructions import (
    ConstructionReport,
    StarForest,
    auto_construct,
    connect_stars,
    double_set,
    expand,
    expansion_tree,
    hamming_cds_for_code_dim,
    star_forest,
)
from .domination import (
    DominationBounds,
    ExactResult,
    exact_gamma,
    exact_gamma_c,
    greedy_dominating,
    is_connected_dominating,
    is_dominating,
    lower_bounds,
)
from .errors import (
    ExplicitSetTooLarge,
    FormatError,
    IntegrityError,
    ParameterError,
    PreconditionError,
)
from .hamming import HammingCode, StarPartition, build_hamming, codewords, is_codeword, star_partition
from .hypercube import (
    CubeEdge,
    SpanningTree,
    VertexSet,
    closed_neighborhood,
    gray_code_path,
    is_connected,
    neighbors,
)
from .trees import max_leaf_bruteforce, tree_from_cds, verify_tree

__version__ = "0.1.0"
