"""Schubert varieties of planes containing, or contained in, a fixed subspace.

For a k-plane A and an l-plane B in R^n (k <= l):

* ``Omega+(A)``: the l-planes that contain A, a copy of Gr(l-k, n-k);
* ``Omega-(B)``: the k-planes inside B, a copy of Gr(k, l).

The module provides membership tests, the explicit nearest points realizing
``delta``, the furthest l-plane through A, dimension counts, and the volume
formulas for Grassmannians and for these varieties.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import (
    AmbientMismatch,
    DimensionError,
    DimensionMismatch,
    InsufficientAmbient,
    VolumeOverflow,
)
from .subspace import (
    CONTAIN_TOL,
    Subspace,
    _check_ambient,
    contains,
    orthonormal_basis,
    principal_decomposition,
)

__all__ = [
    "Flavor",
    "SchubertVariety",
    "omega_plus",
    "omega_minus",
    "member",
    "nearest_containing",
    "nearest_contained",
    "furthest_containing",
    "schubert_dimension",
    "unit_ball_volume",
    "log_unit_ball_volume",
    "grassmannian_volume",
    "log_grassmannian_volume",
    "relative_volume",
    "log_relative_volume",
    "MAX_VOLUME_N",
]

MAX_VOLUME_N = 170


class Flavor(str, Enum):
    CONTAINS_ANCHOR = "contains_anchor"
    CONTAINED_IN_ANCHOR = "contained_in_anchor"


@dataclass(frozen=True)
class SchubertVariety:
    flavor: Flavor
    anchor: Subspace
    target_dim: int

    def __post_init__(self):
        object.__setattr__(self, "flavor", Flavor(self.flavor))
        k, n = self.anchor.dim, self.anchor.ambient_dim
        if self.flavor is Flavor.CONTAINS_ANCHOR:
            ok = k <= self.target_dim <= n
        else:
            ok = 1 <= self.target_dim <= k
        if not ok:
            raise DimensionError(
                f"target dimension {self.target_dim} invalid for {self.flavor.value} "
                f"with anchor in Gr({k},{n})"
            )

    @property
    def ambient_dim(self) -> int:
        return self.anchor.ambient_dim


def omega_plus(A: Subspace, l: int) -> SchubertVariety:
    """The l-planes containing ``A``."""
    return SchubertVariety(Flavor.CONTAINS_ANCHOR, A, l)


def omega_minus(B: Subspace, k: int) -> SchubertVariety:
    """The k-planes contained in ``B``."""
    return SchubertVariety(Flavor.CONTAINED_IN_ANCHOR, B, k)


def member(V: SchubertVariety, X: Subspace, tol: float = CONTAIN_TOL) -> bool:
    if X.ambient_dim != V.ambient_dim:
        raise AmbientMismatch(
            f"ambient dimensions differ: {X.ambient_dim} vs {V.ambient_dim}"
        )
    if X.dim != V.target_dim:
        raise DimensionMismatch(f"expected a {V.target_dim}-plane, got dim {X.dim}")
    if V.flavor is Flavor.CONTAINS_ANCHOR:
        return contains(X, V.anchor, tol)
    return contains(V.anchor, X, tol)


def nearest_containing(A: Subspace, B: Subspace, l: int | None = None) -> Subspace:
    """Point of ``Omega+(A)`` in Gr(l, n) closest to ``B``.

    Spanned by the k principal vectors on the A side together with the
    unpaired principal vectors ``q_{k+1}, ..., q_l`` of B. For every
    distance kind its distance to B equals ``delta(kind, A, B)``.
    """
    _check_ambient(A, B)
    k, n = A.dim, A.ambient_dim
    if l is None:
        l = B.dim
    if l != B.dim:
        raise DimensionError(f"l must equal dim B = {B.dim} to compare with B, got {l}")
    if not k <= l <= n:
        raise DimensionError(f"need dim A = {k} <= l <= n = {n}, got l={l}")
    pd = principal_decomposition(A, B)
    X = np.hstack([pd.left_vectors[:, :k], pd.right_vectors[:, k:l]])
    return orthonormal_basis(X)


def nearest_contained(A: Subspace, B: Subspace) -> Subspace:
    """Point of ``Omega-(B)`` in Gr(k, n) closest to ``A``: the span of q_1..q_k."""
    _check_ambient(A, B)
    k, l = A.dim, B.dim
    if k > l:
        raise DimensionError(f"dim A = {k} exceeds dim B = {l}")
    pd = principal_decomposition(A, B)
    return orthonormal_basis(pd.right_vectors[:, :k])


def furthest_containing(A: Subspace, B: Subspace, l: int) -> Subspace:
    """An l-plane through ``A`` as far from ``B`` as possible.

    Adds to A the first ``l - k`` vectors of an orthonormal basis of
    ``(A + B)^perp``. Its Grassmann distance to B is
    ``sqrt(delta(A, B)^2 + (l - k) pi^2 / 4)``.
    """
    _check_ambient(A, B)
    k, n = A.dim, A.ambient_dim
    if not k <= l <= n:
        raise DimensionError(f"need dim A = {k} <= l <= n = {n}, got l={l}")
    if l != B.dim:
        raise DimensionError(f"l must equal dim B = {B.dim} to compare with B, got {l}")
    if l == k:
        return A
    S = np.hstack([A.basis, B.basis])
    U, s, _ = np.linalg.svd(S, full_matrices=True)
    rank = int(np.count_nonzero(s > 1e-10 * s[0]))
    if n - rank < l - k:
        raise InsufficientAmbient(
            f"need {l - k} directions orthogonal to A + B but only {n - rank} exist "
            f"(n={n}, dim(A+B)={rank})"
        )
    C = U[:, rank:rank + (l - k)]
    return orthonormal_basis(np.hstack([A.basis, C]))


def schubert_dimension(V: SchubertVariety) -> int:
    """Dimension of the variety as a manifold."""
    n = V.ambient_dim
    if V.flavor is Flavor.CONTAINS_ANCHOR:
        k, l = V.anchor.dim, V.target_dim
        return (n - l) * (l - k)
    k, l = V.target_dim, V.anchor.dim
    return k * (l - k)


# volumes, all in log space

def log_unit_ball_volume(m: int) -> float:
    if m < 0:
        raise DimensionError("m must be nonnegative")
    return 0.5 * m * math.log(math.pi) - math.lgamma(1 + 0.5 * m)


def unit_ball_volume(m: int) -> float:
    """Volume ``pi^(m/2) / Gamma(1 + m/2)`` of the unit ball in R^m."""
    return math.exp(log_unit_ball_volume(m))


def _log_omega_prod(lo: int, hi: int) -> float:
    # log of prod_{j=lo}^{hi} omega_j; empty product when hi < lo
    return math.fsum(log_unit_ball_volume(j) for j in range(lo, hi + 1))


def _log_binom(n: int, k: int) -> float:
    return math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1)


def log_grassmannian_volume(k: int, n: int) -> float:
    if not 1 <= k <= n:
        raise DimensionError(f"need 1 <= k <= n, got k={k}, n={n}")
    if n > MAX_VOLUME_N:
        raise VolumeOverflow(f"n={n} exceeds the supported maximum {MAX_VOLUME_N}")
    return (
        _log_binom(n, k)
        + _log_omega_prod(1, n)
        - _log_omega_prod(1, k)
        - _log_omega_prod(1, n - k)
    )


def grassmannian_volume(k: int, n: int) -> float:
    """Riemannian volume of Gr(k, n) for the metric of the Grassmann distance."""
    return math.exp(log_grassmannian_volume(k, n))


def log_relative_volume(k: int, l: int, n: int) -> float:
    if not 1 <= k <= l <= n:
        raise DimensionError(f"need 1 <= k <= l <= n, got k={k}, l={l}, n={n}")
    return (
        math.lgamma(l + 1)
        + math.lgamma(n - k + 1)
        + _log_omega_prod(l - k + 1, l)
        - math.lgamma(n + 1)
        - math.lgamma(l - k + 1)
        - _log_omega_prod(n - k + 1, n)
    )


def relative_volume(k: int, l: int, n: int) -> float:
    """Share of Gr(l, n) taken by Omega+(A), equal to the share of Gr(k, n)
    taken by Omega-(B), for any k-plane A and l-plane B."""
    return math.exp(log_relative_volume(k, l, n))
