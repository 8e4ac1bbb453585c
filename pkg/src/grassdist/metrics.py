"""Metrics on the set of subspaces of all dimensions.

Two families:

* root-mean-square (grassmann, chordal, procrustes): the distance ``delta``
  combined with the dimension gap, ``sqrt(delta^2 + c^2 |k - l|)``;
* indicator (the remaining kinds): the usual distance when ``k == l`` and a
  constant ``c`` otherwise.
"""

from __future__ import annotations

import math
from enum import Enum

from .distances import DistanceKind, delta, distance_from_angles
from .subspace import Subspace, _check_ambient, principal_angles

__all__ = [
    "InftyMetricKind",
    "RMS_KINDS",
    "INDICATOR_KINDS",
    "metric_constant",
    "epsilon_term",
    "metric_infty",
]


class InftyMetricKind(str, Enum):
    GRASSMANN = "grassmann"
    CHORDAL = "chordal"
    PROCRUSTES = "procrustes"
    ASIMOV = "asimov"
    BINET_CAUCHY = "binet_cauchy"
    FUBINI_STUDY = "fubini_study"
    MARTIN = "martin"
    PROJECTION = "projection"
    SPECTRAL = "spectral"

    @property
    def distance_kind(self) -> DistanceKind:
        return DistanceKind(self.value)


RMS_KINDS = frozenset(
    {InftyMetricKind.GRASSMANN, InftyMetricKind.CHORDAL, InftyMetricKind.PROCRUSTES}
)
INDICATOR_KINDS = frozenset(InftyMetricKind) - RMS_KINDS

# Procrustes uses sqrt(2): with the 2*sqrt(sum sin^2(theta/2)) normalization
# each padded right angle adds 2 to the squared distance.
_CONSTANTS = {
    InftyMetricKind.GRASSMANN: math.pi / 2,
    InftyMetricKind.CHORDAL: 1.0,
    InftyMetricKind.PROCRUSTES: math.sqrt(2.0),
    InftyMetricKind.ASIMOV: math.pi / 2,
    InftyMetricKind.BINET_CAUCHY: 1.0,
    InftyMetricKind.FUBINI_STUDY: 1.0,
    InftyMetricKind.MARTIN: math.inf,
    InftyMetricKind.PROJECTION: 1.0,
    InftyMetricKind.SPECTRAL: math.sqrt(2.0),
}


def metric_constant(kind) -> float:
    """The constant ``c`` attached to a metric kind."""
    return _CONSTANTS[InftyMetricKind(kind)]


def epsilon_term(A: Subspace, B: Subspace) -> float:
    """Square root of the dimension gap, ``|k - l|^(1/2)``."""
    return math.sqrt(abs(A.dim - B.dim))


def metric_infty(kind, A: Subspace, B: Subspace) -> float:
    """Metric between subspaces of arbitrary dimension in a common ambient space.

    Subspaces from different ambient spaces must be embedded first (see
    :func:`grassdist.subspace.embed`); the value does not depend on the
    ambient dimension.
    """
    kind = InftyMetricKind(kind)
    c = _CONSTANTS[kind]
    if kind in RMS_KINDS:
        d = delta(kind.distance_kind, A, B)
        gap = abs(A.dim - B.dim)
        return math.sqrt(d * d + c * c * gap)
    _check_ambient(A, B)
    if A.dim != B.dim:
        return c
    return distance_from_angles(kind.distance_kind, principal_angles(A, B))
