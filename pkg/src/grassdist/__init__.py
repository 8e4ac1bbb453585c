"""Distances, metrics and Schubert-variety geometry for linear subspaces."""

from .distances import (
    DistanceKind,
    containment_gap,
    delta,
    distance,
    distance_from_angles,
    grassmann_distance,
    symmetric_directional,
)
from .errors import (
    AmbientMismatch,
    DimensionError,
    DimensionMismatch,
    GrassError,
    InsufficientAmbient,
    NotAProjection,
    RankDeficient,
    SingularPencil,
    VolumeOverflow,
)
from .geodesics import GeodesicPath, evaluate, geodesic, polyline_length
from .metrics import InftyMetricKind, epsilon_term, metric_constant, metric_infty
from .sampling import (
    SeededGenerator,
    random_contained,
    random_containing,
    random_orthogonal,
    random_subspace,
)
from .schubert import (
    Flavor,
    SchubertVariety,
    furthest_containing,
    grassmannian_volume,
    member,
    nearest_contained,
    nearest_containing,
    omega_minus,
    omega_plus,
    relative_volume,
    schubert_dimension,
    unit_ball_volume,
)
from .subspace import (
    PrincipalDecomposition,
    Subspace,
    contains,
    embed,
    intersection,
    orthogonal_complement,
    orthonormal_basis,
    principal_angles,
    principal_decomposition,
    projection_matrix,
    subspace_from_projection,
)

__version__ = "0.1.0"
