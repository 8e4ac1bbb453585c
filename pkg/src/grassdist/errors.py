"""Exception hierarchy shared by every grassdist module."""


class GrassError(ValueError):
    """Base class for precondition failures raised by grassdist."""


class DimensionError(GrassError):
    """Subspace dimensions violate an operation's precondition."""


class DimensionMismatch(DimensionError):
    """Two subspaces were required to have the same dimension."""


class AmbientMismatch(GrassError):
    """Two subspaces live in ambient spaces of different dimension."""


class RankDeficient(GrassError):
    """Input matrix does not have full column rank."""


class NotAProjection(GrassError):
    """Matrix is not a symmetric idempotent with integral trace."""


class SingularPencil(GrassError):
    """Cross-Gram matrix is (numerically) singular; no unique geodesic."""


class InsufficientAmbient(GrassError):
    """Ambient space too small for the requested construction."""


class VolumeOverflow(GrassError, OverflowError):
    """Volume requested outside the supported range."""
