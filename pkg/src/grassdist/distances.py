"""Distances between subspaces expressed through principal angles.

``distance`` covers equidimensional pairs. ``delta`` extends every kind to
subspaces of different dimensions by using the first ``min(k, l)`` principal
angles; it equals the distance from either subspace to the nearest point of
the Schubert variety attached to the other one.
"""

from __future__ import annotations

from enum import Enum

import numpy as np

from .errors import DimensionMismatch
from .subspace import Subspace, _check_ambient, principal_angles

__all__ = [
    "DistanceKind",
    "distance_from_angles",
    "grassmann_distance",
    "distance",
    "delta",
    "containment_gap",
    "symmetric_directional",
]

HALF_PI = np.pi / 2


class DistanceKind(str, Enum):
    GRASSMANN = "grassmann"
    ASIMOV = "asimov"
    BINET_CAUCHY = "binet_cauchy"
    CHORDAL = "chordal"
    FUBINI_STUDY = "fubini_study"
    MARTIN = "martin"
    PROCRUSTES = "procrustes"
    PROJECTION = "projection"
    SPECTRAL = "spectral"


def _log_cos_sum(theta):
    # sum of log cos over the last axis, -inf as soon as one angle is pi/2
    c = np.cos(theta)
    with np.errstate(divide="ignore"):
        logs = np.where(theta >= HALF_PI, -np.inf, np.log(np.maximum(c, 0.0)))
    return logs.sum(axis=-1)


def _grassmann(t):
    return np.sqrt(np.sum(t * t, axis=-1))


def _asimov(t):
    return t[..., -1]


def _binet_cauchy(t):
    # 1 - prod(cos)^2 without cancellation for small angles
    return np.sqrt(np.maximum(-np.expm1(2.0 * _log_cos_sum(t)), 0.0))


def _chordal(t):
    s = np.sin(t)
    return np.sqrt(np.sum(s * s, axis=-1))


def _fubini_study(t):
    return np.arccos(np.clip(np.exp(_log_cos_sum(t)), 0.0, 1.0))


def _martin(t):
    return np.sqrt(-2.0 * _log_cos_sum(t))


def _procrustes(t):
    s = np.sin(t / 2)
    return 2.0 * np.sqrt(np.sum(s * s, axis=-1))


def _projection(t):
    return np.sin(t[..., -1])


def _spectral(t):
    return 2.0 * np.sin(t[..., -1] / 2)


_FORMULAS = {
    DistanceKind.GRASSMANN: _grassmann,
    DistanceKind.ASIMOV: _asimov,
    DistanceKind.BINET_CAUCHY: _binet_cauchy,
    DistanceKind.CHORDAL: _chordal,
    DistanceKind.FUBINI_STUDY: _fubini_study,
    DistanceKind.MARTIN: _martin,
    DistanceKind.PROCRUSTES: _procrustes,
    DistanceKind.PROJECTION: _projection,
    DistanceKind.SPECTRAL: _spectral,
}


def distance_from_angles(kind, angles):
    """Evaluate a distance formula on ascending principal angles.

    ``angles`` may carry leading batch axes; the formula reduces over the
    last one. Returns a float for 1-D input.
    """
    kind = DistanceKind(kind)
    t = np.asarray(angles, dtype=float)
    if t.shape[-1] == 0:
        raise ValueError("at least one principal angle is required")
    out = _FORMULAS[kind](t)
    return float(out) if np.ndim(out) == 0 else out


def _require_equal_dims(A: Subspace, B: Subspace) -> None:
    _check_ambient(A, B)
    if A.dim != B.dim:
        raise DimensionMismatch(
            f"dimensions differ ({A.dim} vs {B.dim}); use delta() for k != l"
        )


def grassmann_distance(A: Subspace, B: Subspace) -> float:
    """Geodesic distance on Gr(k, n): the 2-norm of the principal angles."""
    _require_equal_dims(A, B)
    return distance_from_angles(DistanceKind.GRASSMANN, principal_angles(A, B))


def distance(kind, A: Subspace, B: Subspace) -> float:
    """Distance of the selected kind between two k-planes.

    The Martin distance is ``inf`` once any principal angle reaches pi/2.
    """
    _require_equal_dims(A, B)
    return distance_from_angles(kind, principal_angles(A, B))


def delta(kind, A: Subspace, B: Subspace) -> float:
    """Distance between subspaces of possibly different dimensions.

    Evaluates the same formula as :func:`distance` on the first
    ``min(k, l)`` principal angles. Zero exactly when one subspace contains
    the other, so this is not a metric once ``k != l``.
    """
    return distance_from_angles(kind, principal_angles(A, B))


def containment_gap(A: Subspace, B: Subspace) -> float:
    """Sine of the largest of the ``min(k, l)`` principal angles."""
    return delta(DistanceKind.PROJECTION, A, B)


def symmetric_directional(A: Subspace, B: Subspace) -> float:
    """``sqrt(max(k, l) - ||A^T B||_F^2)`` from the orthonormal frames."""
    _check_ambient(A, B)
    g = A.basis.T @ B.basis
    rad = max(A.dim, B.dim) - float(np.sum(g * g))
    # radicands at the roundoff floor belong to identical subspaces
    if rad <= 64 * np.finfo(float).eps * max(A.dim, B.dim):
        rad = 0.0
    return float(np.sqrt(rad))
