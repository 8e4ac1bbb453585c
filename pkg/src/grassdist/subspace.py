"""Subspaces, principal angles and the basic linear-algebra plumbing.

A :class:`Subspace` is an immutable wrapper around an ``n x k`` matrix with
orthonormal columns. Everything else in the package consumes subspaces and
the :class:`PrincipalDecomposition` computed between pairs of them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    AmbientMismatch,
    DimensionError,
    NotAProjection,
    RankDeficient,
)

__all__ = [
    "Subspace",
    "PrincipalDecomposition",
    "orthonormal_basis",
    "principal_decomposition",
    "principal_angles",
    "intersection",
    "orthogonal_complement",
    "embed",
    "projection_matrix",
    "subspace_from_projection",
    "contains",
    "ORTHO_TOL",
    "CONTAIN_TOL",
    "RANK_TOL",
]

ORTHO_TOL = 1e-10
CONTAIN_TOL = 1e-8
RANK_TOL = 1e-10

# Sines at this level are roundoff from a shared direction and count as an
# exact zero angle (this only affects angles below ~7e-15 rad).
_SIN_SNAP = 32 * np.finfo(float).eps


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=float, copy=True)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class Subspace:
    """A k-dimensional linear subspace of R^n stored by an orthonormal frame.

    Parameters
    ----------
    basis : array_like, shape (n, k)
        Column-orthonormal frame. Use :func:`orthonormal_basis` for
        arbitrary spanning sets.
    tol : float, optional
        Allowed Frobenius deviation of ``basis.T @ basis`` from the identity,
        scaled by ``sqrt(k)``.
    """

    basis: np.ndarray
    tol: float = field(default=ORTHO_TOL, repr=False)

    def __post_init__(self):
        b = np.asarray(self.basis, dtype=float)
        if b.ndim == 1:
            b = b.reshape(-1, 1)
        if b.ndim != 2 or b.shape[0] < 1 or b.shape[1] < 1:
            raise DimensionError(f"basis must be a non-empty n x k matrix, got shape {b.shape}")
        n, k = b.shape
        if k > n:
            raise DimensionError(f"dimension k={k} exceeds ambient dimension n={n}")
        if not np.all(np.isfinite(b)):
            raise ValueError("basis has non-finite entries")
        err = np.linalg.norm(b.T @ b - np.eye(k))
        if err > self.tol * math.sqrt(k):
            raise ValueError(
                f"basis is not column-orthonormal (||B^T B - I||_F = {err:.3e})"
            )
        object.__setattr__(self, "basis", _frozen(b))

    @property
    def ambient_dim(self) -> int:
        return self.basis.shape[0]

    @property
    def dim(self) -> int:
        return self.basis.shape[1]

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient_dim={self.ambient_dim})"

    def rotate(self, Q: np.ndarray) -> "Subspace":
        """Image of the subspace under an orthogonal n x n matrix."""
        return orthonormal_basis(np.asarray(Q) @ self.basis)


@dataclass(frozen=True, eq=False)
class PrincipalDecomposition:
    """Principal angles and vectors between an k-plane and an l-plane.

    ``left_vectors`` holds ``A @ U`` (n x k) and ``right_vectors`` holds
    ``B @ V`` (n x l) where ``A.T @ B = U diag(cos angles) V.T`` is a full SVD.
    Only the first ``r = min(k, l)`` columns of each are paired.
    """

    angles: np.ndarray
    left_vectors: np.ndarray
    right_vectors: np.ndarray

    @property
    def r(self) -> int:
        return self.angles.shape[0]

    @property
    def cosines(self) -> np.ndarray:
        return np.cos(self.angles)


def orthonormal_basis(M, rtol: float = RANK_TOL) -> Subspace:
    """Orthonormalize the columns of ``M`` and return the subspace they span.

    Raises
    ------
    DimensionError
        If ``M`` has more columns than rows.
    RankDeficient
        If the smallest singular value is below ``rtol`` times the largest.
    """
    M = np.asarray(M, dtype=float)
    if M.ndim == 1:
        M = M.reshape(-1, 1)
    if M.ndim != 2 or M.size == 0:
        raise DimensionError(f"expected a non-empty 2-D matrix, got shape {M.shape}")
    n, k = M.shape
    if k > n:
        raise DimensionError(f"{k} columns cannot be independent in R^{n}")
    if not np.all(np.isfinite(M)):
        raise ValueError("matrix has non-finite entries")
    s = np.linalg.svd(M, compute_uv=False)
    if s[0] == 0.0 or s[-1] <= rtol * s[0]:
        raise RankDeficient(
            f"matrix is rank deficient: sigma_min/sigma_max = "
            f"{(s[-1] / s[0]) if s[0] else 0.0:.3e} <= {rtol:.0e}"
        )
    Q, R = np.linalg.qr(M)
    # sign convention: positive diagonal of R, so already-orthonormal input is kept
    Q = Q * np.where(np.diag(R) < 0, -1.0, 1.0)
    return Subspace(Q)


def _check_ambient(A: Subspace, B: Subspace) -> None:
    if A.ambient_dim != B.ambient_dim:
        raise AmbientMismatch(
            f"ambient dimensions differ: {A.ambient_dim} vs {B.ambient_dim}"
        )


def _swap_order(a: np.ndarray, b: np.ndarray) -> bool:
    """Whether to put ``b`` first: smaller frames go on the left, and equal
    shapes are ordered by their bytes, so both argument orders give
    bit-identical results."""
    return (a.shape[1], a.shape[0]) > (b.shape[1], b.shape[0]) or (
        a.shape == b.shape and a.tobytes() > b.tobytes()
    )


def _cross_svd(A: Subspace, B: Subspace):
    """Full SVD ``(U, s, V)`` of ``A.T @ B``, independent of argument order."""
    a, b = A.basis, B.basis
    if _swap_order(a, b):
        U2, s, V2t = np.linalg.svd(b.T @ a, full_matrices=True)
        return V2t.T, s, U2
    U, s, Vt = np.linalg.svd(a.T @ b, full_matrices=True)
    return U, s, Vt.T


def _angles_from_frames(a: np.ndarray, b: np.ndarray, cosines=None) -> np.ndarray:
    """Ascending principal angles between (stacks of) frames, ``k <= l``.

    Cosines are the singular values of ``a.T @ b``; sines are the singular
    values of the residual ``a - b b.T a``. Small angles are taken from the
    sines and large ones from the cosines, since arccos cannot resolve
    angles below ~1e-8.
    """
    if cosines is None:
        cosines = np.linalg.svd(np.swapaxes(a, -1, -2) @ b, compute_uv=False)
    k = a.shape[-1]
    c = np.clip(cosines[..., :k], 0.0, 1.0)
    R = a - b @ (np.swapaxes(b, -1, -2) @ a)
    sn = np.linalg.svd(R, compute_uv=False)[..., ::-1]
    sn = np.where(sn <= _SIN_SNAP, 0.0, np.clip(sn, 0.0, 1.0))
    return np.where(c * c >= 0.5, np.arcsin(sn), np.arccos(c))


def _pair_angles(A: Subspace, B: Subspace, cosines=None) -> np.ndarray:
    a, b = A.basis, B.basis
    if _swap_order(a, b):
        a, b = b, a
    return _angles_from_frames(a, b, cosines)


def principal_decomposition(A: Subspace, B: Subspace) -> PrincipalDecomposition:
    """Principal angles (ascending) and principal vectors of ``A`` and ``B``."""
    _check_ambient(A, B)
    U, s, V = _cross_svd(A, B)
    angles = _pair_angles(A, B, s)
    return PrincipalDecomposition(
        angles=_frozen(angles),
        left_vectors=_frozen(A.basis @ U),
        right_vectors=_frozen(B.basis @ V),
    )


def principal_angles(A: Subspace, B: Subspace) -> np.ndarray:
    """The ``min(k, l)`` principal angles between ``A`` and ``B``, ascending."""
    _check_ambient(A, B)
    return _pair_angles(A, B)


def intersection(A: Subspace, B: Subspace, tau: float = 1e-12):
    """Dimension and orthonormal basis of ``A ∩ B``.

    A principal pair counts as shared when its cosine exceeds ``1 - tau``.
    The basis is an ``n x m`` array, with ``m = 0`` for a trivial intersection.
    """
    if not 0.0 < tau < 1.0:
        raise ValueError("tau must lie in (0, 1)")
    pd = principal_decomposition(A, B)
    m = int(np.count_nonzero(pd.cosines > 1.0 - tau))
    return m, np.array(pd.left_vectors[:, :m])


def orthogonal_complement(A: Subspace) -> Subspace:
    """The (n - k)-dimensional orthogonal complement of ``A``."""
    n, k = A.basis.shape
    if k == n:
        raise DimensionError("the complement of the whole space is {0}")
    Q, _ = np.linalg.qr(A.basis, mode="complete")
    C = Q[:, k:]
    # one projection sweep against A to push the residual to roundoff level
    C = C - A.basis @ (A.basis.T @ C)
    return Subspace(np.linalg.qr(C)[0])


def embed(A: Subspace, l: int, m: int) -> Subspace:
    """Embed ``A`` in Gr(l, m) as the span of ``[[A, 0], [0, 0], [0, I]]``.

    With ``l == k`` this is plain zero padding of the frame.
    """
    n, k = A.basis.shape
    if not (k <= l and n <= m and l - k <= m - n):
        raise DimensionError(
            f"cannot embed Gr({k},{n}) into Gr({l},{m}); need k<=l, n<=m, l-k<=m-n"
        )
    E = np.zeros((m, l))
    E[:n, :k] = A.basis
    E[m - (l - k):, k:] = np.eye(l - k)
    return Subspace(E)


def projection_matrix(A: Subspace) -> np.ndarray:
    """Orthogonal projector ``A A^T`` onto the subspace."""
    return A.basis @ A.basis.T


def subspace_from_projection(P, tol: float = 1e-8) -> Subspace:
    """Recover the subspace ``im(P)`` of an orthogonal projector.

    Raises
    ------
    NotAProjection
        If ``P`` is not symmetric, not idempotent, or its trace is not within
        ``tol`` of a positive integer.
    """
    P = np.asarray(P, dtype=float)
    if P.ndim != 2 or P.shape[0] != P.shape[1]:
        raise NotAProjection(f"projection must be square, got shape {P.shape}")
    if np.linalg.norm(P.T - P) > tol:
        raise NotAProjection("matrix is not symmetric")
    if np.linalg.norm(P @ P - P) > tol:
        raise NotAProjection("matrix is not idempotent")
    tr = float(np.trace(P))
    k = int(round(tr))
    if abs(tr - k) > tol or k < 1:
        raise NotAProjection(f"trace {tr!r} is not a positive integer")
    w, V = np.linalg.eigh((P + P.T) / 2)
    # eigh sorts ascending; the top k eigenvectors span the image
    return orthonormal_basis(V[:, -k:])


def contains(B: Subspace, A: Subspace, tol: float = CONTAIN_TOL) -> bool:
    """True when ``A ⊆ B`` up to ``tol`` in the Frobenius residual."""
    _check_ambient(A, B)
    resid = A.basis - B.basis @ (B.basis.T @ A.basis)
    return bool(np.linalg.norm(resid) <= tol)
