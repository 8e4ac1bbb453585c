import numpy as np
import pytest
from scipy import stats

from conftest import e, span
from grassdist import (
    DimensionError,
    SeededGenerator,
    contains,
    principal_angles,
    projection_matrix,
    random_contained,
    random_containing,
    random_orthogonal,
    random_subspace,
)


def same_span(X, Y, tol=1e-8):
    return X.dim == Y.dim and np.all(principal_angles(X, Y) <= tol)


class TestRandomSubspace:
    def test_full_space(self, gen):
        S = random_subspace(4, 4, gen)
        np.testing.assert_allclose(S.basis @ S.basis.T, np.eye(4), atol=1e-12)

    def test_deterministic(self):
        a = random_subspace(2, 4, SeededGenerator(123)).basis
        b = random_subspace(2, 4, SeededGenerator(123)).basis
        np.testing.assert_array_equal(a, b)

    def test_different_seeds_differ(self):
        a = random_subspace(2, 4, SeededGenerator(1)).basis
        b = random_subspace(2, 4, SeededGenerator(2)).basis
        assert not np.array_equal(a, b)

    def test_mean_projection(self):
        # E[P] = (k/n) I by rotation invariance
        g = SeededGenerator(99)
        P = sum(projection_matrix(random_subspace(1, 3, g)) for _ in range(100_000)) / 100_000
        np.testing.assert_allclose(P, np.eye(3) / 3, atol=0.01)

    @pytest.mark.parametrize("k,n", [(0, 3), (4, 3)])
    def test_bad_dims(self, gen, k, n):
        with pytest.raises(DimensionError):
            random_subspace(k, n, gen)

    def test_seed_range(self):
        with pytest.raises(ValueError):
            SeededGenerator(-1)
        SeededGenerator(2**64 - 1)

    def test_haar_invariance(self):
        g = SeededGenerator(2024)
        ref = random_subspace(2, 5, g)
        Q = random_orthogonal(5, g)
        plain = [principal_angles(random_subspace(2, 5, g), ref)[0] for _ in range(10_000)]
        moved = [principal_angles(random_subspace(2, 5, g).rotate(Q), ref)[0] for _ in range(10_000)]
        assert stats.ks_2samp(plain, moved).pvalue > 1e-3


class TestRandomContained:
    def test_full_dimension_is_b(self, gen):
        B = random_subspace(3, 5, gen)
        assert random_contained(B, 3, gen) is B

    def test_inside(self, gen):
        B = random_subspace(4, 7, gen)
        for k in range(1, 5):
            assert contains(B, random_contained(B, k, gen), tol=1e-10)

    def test_whole_space_matches_uniform(self):
        g = SeededGenerator(5)
        ref = random_subspace(2, 4, g)
        R4 = span(*[e(i, 4) for i in range(1, 5)])
        a = [principal_angles(random_contained(R4, 2, g), ref).sum() for _ in range(5000)]
        b = [principal_angles(random_subspace(2, 4, g), ref).sum() for _ in range(5000)]
        assert stats.ks_2samp(a, b).pvalue > 1e-3

    def test_too_big(self, gen):
        with pytest.raises(DimensionError):
            random_contained(random_subspace(2, 4, gen), 3, gen)


class TestRandomContaining:
    def test_same_dimension_is_a(self, gen):
        A = random_subspace(2, 5, gen)
        assert random_containing(A, 2, gen) is A

    def test_whole_space(self, gen):
        A = random_subspace(2, 5, gen)
        X = random_containing(A, 5, gen)
        np.testing.assert_allclose(X.basis @ X.basis.T, np.eye(5), atol=1e-12)

    def test_contains_anchor(self, gen):
        A = random_subspace(2, 7, gen)
        for l in range(2, 8):
            X = random_containing(A, l, gen)
            assert X.dim == l and contains(X, A, tol=1e-10)

    def test_too_small(self, gen):
        with pytest.raises(DimensionError):
            random_containing(random_subspace(3, 5, gen), 2, gen)


class TestRandomOrthogonal:
    def test_one_by_one(self, gen):
        assert abs(random_orthogonal(1, gen)[0, 0]) == 1.0

    @pytest.mark.parametrize("n", [2, 5, 12])
    def test_orthogonal(self, gen, n):
        Q = random_orthogonal(n, gen)
        assert np.linalg.norm(Q.T @ Q - np.eye(n)) <= 1e-10

    def test_first_column_moments(self):
        # coordinates of a uniform point on S^{n-1}: E x = 0, E x^2 = 1/n,
        # E x^4 = 3 / (n (n + 2))
        n, N = 4, 100_000
        g = SeededGenerator(17)
        cols = np.array([random_orthogonal(n, g)[:, 0] for _ in range(N)])
        np.testing.assert_allclose(cols.mean(0), 0.0, atol=0.01)
        np.testing.assert_allclose((cols**2).mean(0), 1 / n, atol=0.005)
        np.testing.assert_allclose((cols**4).mean(0), 3 / (n * (n + 2)), atol=0.005)

    def test_deterministic(self):
        np.testing.assert_array_equal(
            random_orthogonal(6, SeededGenerator(8)), random_orthogonal(6, SeededGenerator(8))
        )
