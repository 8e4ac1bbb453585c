"""Length-minimizing geodesics between two k-planes.

With ``M = (I - A A^T) B (A^T B)^{-1}`` and its thin SVD
``M = Q tan(Theta) U^T``, the curve

    gamma(t) = span(A U cos(t Theta) + Q sin(t Theta))

runs from span(A) at t = 0 to span(B) at t = 1 at constant speed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, SingularPencil
from .subspace import (
    Subspace,
    _angles_from_frames,
    _check_ambient,
    _frozen,
    orthonormal_basis,
)

__all__ = ["GeodesicPath", "geodesic", "evaluate", "polyline_length", "PENCIL_TOL"]

PENCIL_TOL = 1e-12
# tangents this small are pure roundoff: the direction column is arbitrary
_ZERO_TAN = 1e-13


@dataclass(frozen=True, eq=False)
class GeodesicPath:
    start_frame: np.ndarray
    direction_frame: np.ndarray
    angles: np.ndarray

    @property
    def ambient_dim(self) -> int:
        return self.start_frame.shape[0]

    @property
    def dim(self) -> int:
        return self.start_frame.shape[1]

    @property
    def length(self) -> float:
        return float(np.sqrt(np.sum(self.angles**2)))

    def __call__(self, t: float) -> Subspace:
        return evaluate(self, t)


def _fill_directions(AU: np.ndarray, Q: np.ndarray, bad: np.ndarray) -> np.ndarray:
    """Replace roundoff-only columns of Q by unit vectors orthogonal to A and Q.

    Those columns are multiplied by sin(0) so their choice never changes the
    curve. When the ambient space is too small (n < 2k) they are zeroed.
    """
    if not bad.any():
        return Q
    Q = Q.copy()
    good = Q[:, ~bad]
    S = np.hstack([AU, good])
    U, s, _ = np.linalg.svd(S, full_matrices=True)
    rank = int(np.count_nonzero(s > 1e-10 * s[0]))
    free = U[:, rank:]
    nbad = int(bad.sum())
    if free.shape[1] >= nbad:
        Q[:, bad] = free[:, :nbad]
    else:
        Q[:, bad] = 0.0
    return Q


def geodesic(A: Subspace, B: Subspace) -> GeodesicPath:
    """Minimizing geodesic from ``A`` to ``B`` (both k-planes).

    Raises
    ------
    SingularPencil
        If ``A^T B`` has a singular value below ``PENCIL_TOL``; then some
        principal angle is pi/2 and the minimizer is not unique.
    """
    _check_ambient(A, B)
    if A.dim != B.dim:
        raise DimensionMismatch(f"geodesics need equal dimensions, got {A.dim} and {B.dim}")
    a, b = A.basis, B.basis
    G = a.T @ b
    smin = np.linalg.svd(G, compute_uv=False)[-1]
    if smin < PENCIL_TOL:
        raise SingularPencil(
            f"sigma_min(A^T B) = {smin:.3e} < {PENCIL_TOL:.0e}: a principal angle is pi/2"
        )
    M = (b - a @ G) @ np.linalg.inv(G)
    Q, tan, Ut = np.linalg.svd(M, full_matrices=False)
    # svd orders tangents descending; flip to ascending angles
    Q, tan, U = Q[:, ::-1], tan[::-1], Ut.T[:, ::-1]
    AU = a @ U
    flat = tan <= _ZERO_TAN
    Q = _fill_directions(AU, Q, flat)
    theta = np.where(flat, 0.0, np.arctan(tan))
    return GeodesicPath(_frozen(AU), _frozen(Q), _frozen(theta))


def evaluate(path: GeodesicPath, t: float) -> Subspace:
    """The point ``gamma(t)``; values of t outside [0, 1] extend the curve."""
    th = t * path.angles
    F = path.start_frame * np.cos(th) + path.direction_frame * np.sin(th)
    return orthonormal_basis(F)


def polyline_length(path: GeodesicPath, segments: int) -> float:
    """Sum of Grassmann distances between ``gamma(i / segments)`` samples.

    Frames are evaluated and compared in batches; the result matches summing
    ``grassmann_distance(evaluate(path, t_i), evaluate(path, t_{i+1}))``.
    """
    if segments < 1:
        raise ValueError("segments must be at least 1")
    t = np.arange(segments + 1) / segments
    th = t[:, None] * path.angles[None, :]
    F = path.start_frame * np.cos(th)[:, None, :] + path.direction_frame * np.sin(th)[:, None, :]
    F = np.linalg.qr(F)[0]
    theta = _angles_from_frames(F[:-1], F[1:])
    return float(np.sum(np.sqrt(np.sum(theta * theta, axis=-1))))
