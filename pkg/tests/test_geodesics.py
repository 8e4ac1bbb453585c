import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import e, span
from grassdist import (
    DimensionMismatch,
    SeededGenerator,
    SingularPencil,
    embed,
    evaluate,
    geodesic,
    grassmann_distance,
    polyline_length,
    principal_angles,
    random_subspace,
)


def rotated_line(alpha):
    return span(np.array([np.cos(alpha), np.sin(alpha)]))


def random_pair(g, k, n, smin=0.05):
    while True:
        A, B = random_subspace(k, n, g), random_subspace(k, n, g)
        if np.linalg.svd(A.basis.T @ B.basis, compute_uv=False)[-1] >= smin:
            return A, B


class TestGeodesic:
    def test_constant_path(self, gen):
        A = random_subspace(2, 5, gen)
        path = geodesic(A, A)
        np.testing.assert_array_equal(path.angles, [0.0, 0.0])
        for t in (0.0, 0.3, 1.0):
            assert np.all(principal_angles(evaluate(path, t), A) <= 1e-12)
        assert polyline_length(path, 10) == 0.0

    def test_planar_rotation(self):
        a = 1.0
        path = geodesic(rotated_line(0.0), rotated_line(a))
        np.testing.assert_allclose(path.angles, [a])
        mid = evaluate(path, 0.5)
        # the geodesic in Gr(1, 2) is rotation at constant speed
        assert principal_angles(mid, rotated_line(a / 2))[0] < 1e-12
        for t in np.linspace(0, 1, 7):
            assert principal_angles(evaluate(path, t), rotated_line(a * t))[0] < 1e-12

    def test_planar_rotation_length(self):
        path = geodesic(rotated_line(0.0), rotated_line(1.0))
        assert polyline_length(path, 1000) == pytest.approx(1.0, abs=1e-6)
        assert polyline_length(path, 1) == pytest.approx(1.0, abs=1e-14)

    def test_singular_pencil(self):
        with pytest.raises(SingularPencil):
            geodesic(span(e(1, 2)), span(e(2, 2)))

    def test_dims_must_match(self):
        with pytest.raises(DimensionMismatch):
            geodesic(span(e(1, 3)), span(e(1, 3), e(2, 3)))

    def test_bad_segments(self, gen):
        A = random_subspace(1, 3, gen)
        with pytest.raises(ValueError):
            polyline_length(geodesic(A, A), 0)

    @pytest.mark.parametrize("k,n", [(1, 3), (2, 4), (3, 8), (2, 3)])
    def test_frame_invariants(self, k, n):
        g = SeededGenerator(k * 10 + n)
        A, B = random_pair(g, k, n)
        path = geodesic(A, B)
        S, Q = path.start_frame, path.direction_frame
        np.testing.assert_allclose(S.T @ S, np.eye(k), atol=1e-10)
        assert np.linalg.norm(Q.T @ S) <= 1e-8
        assert np.all(np.diff(path.angles) >= 0)
        assert np.all(path.angles < np.pi / 2)
        if n >= 2 * k:
            np.testing.assert_allclose(Q.T @ Q, np.eye(k), atol=1e-10)

    def test_shared_direction_gets_orthogonal_filler(self):
        a = 0.6
        A = span(e(1, 4), e(2, 4))
        B = span(e(1, 4), np.cos(a) * e(2, 4) + np.sin(a) * e(3, 4))
        path = geodesic(A, B)
        np.testing.assert_allclose(path.angles, [0.0, a], atol=1e-12)
        Q = path.direction_frame
        np.testing.assert_allclose(Q.T @ Q, np.eye(2), atol=1e-12)
        np.testing.assert_allclose(Q.T @ A.basis, 0.0, atol=1e-12)

    @given(seed=st.integers(0, 2**32 - 1), n=st.integers(1, 8), data=st.data())
    @settings(max_examples=60, deadline=None)
    def test_endpoints_and_speed(self, seed, n, data):
        k = data.draw(st.integers(1, min(n, 4)))
        g = SeededGenerator(seed)
        A, B = random_pair(g, k, n)
        path = geodesic(A, B)
        assert np.all(principal_angles(evaluate(path, 0.0), A) <= 1e-8)
        assert np.all(principal_angles(evaluate(path, 1.0), B) <= 1e-8)
        d = grassmann_distance(A, B)
        for t in np.arange(1, 10) / 10:
            assert abs(grassmann_distance(A, evaluate(path, t)) - t * d) <= 1e-6

    @given(seed=st.integers(0, 2**32 - 1), n=st.integers(1, 6), data=st.data())
    @settings(max_examples=40, deadline=None)
    def test_embedding_keeps_geodesics(self, seed, n, data):
        k = data.draw(st.integers(1, n))
        m = data.draw(st.integers(n + 1, n + 3))
        g = SeededGenerator(seed)
        A, B = random_pair(g, k, n)
        p = geodesic(A, B)
        pe = geodesic(embed(A, k, m), embed(B, k, m))
        for t in (0.25, 0.5, 0.9):
            got = evaluate(pe, t)
            want = embed(evaluate(p, t), k, m)
            assert np.all(principal_angles(got, want) <= 1e-8)

    def test_polyline_matches_pointwise_sum(self):
        g = SeededGenerator(4)
        A, B = random_pair(g, 3, 6)
        path = geodesic(A, B)
        pts = [evaluate(path, i / 7) for i in range(8)]
        slow = sum(grassmann_distance(p, q) for p, q in zip(pts, pts[1:]))
        assert polyline_length(path, 7) == pytest.approx(slow, abs=1e-12)
        assert polyline_length(path, 7) == pytest.approx(grassmann_distance(A, B), rel=1e-10)

    def test_callable_and_length(self, gen):
        A, B = random_pair(gen, 2, 5)
        path = geodesic(A, B)
        assert path.length == pytest.approx(grassmann_distance(A, B), abs=1e-12)
        assert np.all(principal_angles(path(1.0), B) <= 1e-8)
