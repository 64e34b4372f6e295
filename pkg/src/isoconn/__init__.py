"""Spectral connectivity analysis for planar multi-agent communication graphs.

Builds distance-weighted Laplacians from agent positions, reports algebraic
connectivity and Fiedler vectors, generates isospectral topology families via
relabelings and ones-fixing similarity transforms, and analyzes moves of a
single mobile agent that preserve connectivity.
"""

from .errors import (
    AnalysisError,
    CoincidentAgentsError,
    ConvergenceError,
    DegenerateFiedlerError,
    EmptyGridError,
    InvalidTransformError,
    InvalidVariationError,
    NegativeDiscriminantError,
    NonFiniteError,
    NonPositiveParameterError,
    NonSymmetricError,
    NotBijectionError,
    NotLaplacianError,
    OrderMismatchError,
    OrderTooLargeError,
    OrderTooSmallError,
)
from .families import IsoFamilyEntry, permutation_family, relabel_configuration, similarity_transform
from .matrices import (
    SpectralDecomposition,
    SquareMatrix,
    TransformValidation,
    ones_axis_rotation,
    permutation_matrix,
    symmetric_eigendecomposition,
    validate_iso_transform,
)
from .mobility import (
    BlockDecomposition,
    Circle,
    MoveSolution,
    PathIntegralResult,
    block_decompose,
    connectivity_differential,
    integrate_connectivity_change,
    laplacian_motion_derivative,
    mirror_moves,
)
from .render import render_configuration_svg, render_graph_svg, render_matrix_svg
from .spectral import (
    ConnectivityReport,
    NullSpaceCheck,
    algebraic_connectivity,
    fiedler_null_space_check,
    is_isospectral,
)
from .topology import (
    Agent,
    AgentConfiguration,
    LaplacianValidation,
    adjacency_weight,
    build_adjacency,
    build_laplacian,
    is_connected,
    validate_laplacian,
)
from .zones import (
    GridSpec,
    ValidityCheck,
    ZonePoint,
    ZoneSample,
    dense_family_laplacian,
    dense_family_spectrum,
    dense_family_validity,
    iso_connectivity_zone,
)

__version__ = "0.1.0"

__all__ = [
    "Agent",
    "AgentConfiguration",
    "AnalysisError",
    "BlockDecomposition",
    "Circle",
    "CoincidentAgentsError",
    "ConnectivityReport",
    "ConvergenceError",
    "DegenerateFiedlerError",
    "EmptyGridError",
    "GridSpec",
    "InvalidTransformError",
    "InvalidVariationError",
    "IsoFamilyEntry",
    "LaplacianValidation",
    "MoveSolution",
    "NegativeDiscriminantError",
    "NonFiniteError",
    "NonPositiveParameterError",
    "NonSymmetricError",
    "NotBijectionError",
    "NotLaplacianError",
    "NullSpaceCheck",
    "OrderMismatchError",
    "OrderTooLargeError",
    "OrderTooSmallError",
    "PathIntegralResult",
    "SpectralDecomposition",
    "SquareMatrix",
    "TransformValidation",
    "ValidityCheck",
    "ZonePoint",
    "ZoneSample",
    "adjacency_weight",
    "algebraic_connectivity",
    "block_decompose",
    "build_adjacency",
    "build_laplacian",
    "connectivity_differential",
    "dense_family_laplacian",
    "dense_family_spectrum",
    "dense_family_validity",
    "fiedler_null_space_check",
    "integrate_connectivity_change",
    "is_connected",
    "is_isospectral",
    "iso_connectivity_zone",
    "laplacian_motion_derivative",
    "mirror_moves",
    "ones_axis_rotation",
    "permutation_family",
    "permutation_matrix",
    "relabel_configuration",
    "render_configuration_svg",
    "render_graph_svg",
    "render_matrix_svg",
    "similarity_transform",
    "symmetric_eigendecomposition",
    "validate_iso_transform",
    "validate_laplacian",
]
