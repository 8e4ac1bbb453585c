"""Reproducible random subspaces, Schubert-variety members and rotations.

All draws go through :class:`SeededGenerator`, a thin wrapper over numpy's
``Generator`` with the PCG64 bit generator and its ziggurat standard-normal
transform. A given seed reproduces the same stream bit for bit for a fixed
numpy release.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionError
from .subspace import Subspace, orthogonal_complement, orthonormal_basis

__all__ = [
    "SeededGenerator",
    "random_orthogonal",
    "random_subspace",
    "random_contained",
    "random_containing",
]

ALGORITHM = "numpy.random.PCG64 + Generator.standard_normal"


class SeededGenerator:
    """Mutable random stream owned by one caller; not thread safe."""

    algorithm = ALGORITHM

    def __init__(self, seed: int = 0):
        seed = int(seed)
        if not 0 <= seed < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        self.seed = seed
        self._rng = np.random.Generator(np.random.PCG64(seed))

    def __repr__(self):
        return f"SeededGenerator(seed={self.seed})"

    def normal(self, *shape) -> np.ndarray:
        return self._rng.standard_normal(shape)


def _haar_frame(n: int, k: int, g: SeededGenerator) -> np.ndarray:
    # QR of a Gaussian matrix; flipping signs so diag(R) > 0 makes the law Haar
    Q, R = np.linalg.qr(g.normal(n, k))
    return Q * np.where(np.diag(R) < 0, -1.0, 1.0)


def random_orthogonal(n: int, g: SeededGenerator) -> np.ndarray:
    """Haar-distributed ``n x n`` orthogonal matrix."""
    if n < 1:
        raise DimensionError("n must be at least 1")
    return _haar_frame(n, n, g)


def random_subspace(k: int, n: int, g: SeededGenerator) -> Subspace:
    """Uniformly distributed element of Gr(k, n)."""
    if not 1 <= k <= n:
        raise DimensionError(f"need 1 <= k <= n, got k={k}, n={n}")
    return orthonormal_basis(g.normal(n, k))


def random_contained(B: Subspace, k: int, g: SeededGenerator) -> Subspace:
    """Uniform random k-plane inside ``B``."""
    if not 1 <= k <= B.dim:
        raise DimensionError(f"need 1 <= k <= dim B = {B.dim}, got k={k}")
    if k == B.dim:
        return B
    return Subspace(B.basis @ _haar_frame(B.dim, k, g))


def random_containing(A: Subspace, l: int, g: SeededGenerator) -> Subspace:
    """Random l-plane containing ``A``: A plus a random (l-k)-plane of A-perp."""
    k, n = A.dim, A.ambient_dim
    if not k <= l <= n:
        raise DimensionError(f"need dim A = {k} <= l <= n = {n}, got l={l}")
    if l == k:
        return A
    C = orthogonal_complement(A).basis
    W = C @ _haar_frame(n - k, l - k, g)
    return orthonormal_basis(np.hstack([A.basis, W]))
