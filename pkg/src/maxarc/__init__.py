"""Maximal arcs in projective planes of even order and their resolvable Steiner designs."""

from .arcs import Arc, dual_arc, extract_design, load_arc, regular_hyperoval, validate_maximal_arc
from .design import (
    BitMatrix,
    Design,
    DesignParams,
    check_rank_conjecture,
    derive_params,
    incidence_matrix,
    rank2,
    validate_design,
)
from .errors import (
    MaxArcError,
    NotIrreducibleError,
    ParameterError,
    ParseError,
    ValidationError,
    ValidationReport,
)
from .geometry import ProjectivePlane, build_pg2, dual_plane, load_plane, validate_plane
from .gf import Field
from .resolve import (
    CompatibleSet,
    ParallelClass,
    Resolution,
    compatible,
    embed,
    max_compatible_sets,
    parallel_classes,
    resolutions,
)
from .search import BitGraph, count_cliques, enumerate_cliques, graph_from_relation

__version__ = "0.1.0"
