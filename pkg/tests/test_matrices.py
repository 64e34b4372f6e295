import math

import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from isoconn import (
    ConvergenceError,
    NonFiniteError,
    NonSymmetricError,
    NotBijectionError,
    OrderTooSmallError,
    SquareMatrix,
    ones_axis_rotation,
    permutation_matrix,
    symmetric_eigendecomposition,
    validate_iso_transform,
)
from conftest import L1_ROWS, L1_SPECTRUM, L4P_ROWS, L4P_SPECTRUM, PATH4_ROWS


def random_symmetric(seed, n, lo=-10.0, hi=10.0):
    rng = np.random.default_rng(seed)
    m = rng.uniform(lo, hi, size=(n, n))
    return SquareMatrix(0.5 * (m + m.T))


def charpoly_roots(rows):
    """Independent oracle: exact symbolic eigenvalues via the characteristic polynomial."""
    lam = sympy.symbols("lam")
    eigs = sympy.Matrix(rows).eigenvals()
    out = []
    for value, mult in eigs.items():
        out.extend([float(value)] * mult)
    return sorted(out)


class TestSquareMatrix:
    def test_rejects_non_square(self):
        with pytest.raises(ValueError):
            SquareMatrix.from_rows([[1.0, 2.0]])

    def test_rejects_non_finite(self):
        with pytest.raises(NonFiniteError):
            SquareMatrix.from_rows([[1.0, np.nan], [0.0, 1.0]])
        with pytest.raises(NonFiniteError):
            SquareMatrix.from_rows([[np.inf, 0.0], [0.0, 1.0]])

    def test_entries_are_immutable(self, l1):
        with pytest.raises(ValueError):
            l1.entries[0, 0] = 99.0

    def test_tolerance_vs_exact_equality(self, l1):
        nudged = SquareMatrix(l1.entries + 1e-12)
        assert l1.isclose(nudged, 1e-10)
        assert not l1.isclose(nudged, 1e-14)
        assert not l1.equals(nudged)
        assert l1.equals(SquareMatrix.from_rows(L1_ROWS))

    def test_json_round_trip(self, l4p):
        again = SquareMatrix.from_json_dict(l4p.to_json_dict())
        assert l4p.equals(again)

    def test_json_order_mismatch(self):
        with pytest.raises(ValueError):
            SquareMatrix.from_json_dict({"order": 3, "rows": [[1.0]]})


class TestEigendecomposition:
    def test_diagonal_matrix(self):
        d = symmetric_eigendecomposition(SquareMatrix.from_rows(np.diag([3.0, 1.0, 2.0])))
        assert np.array_equal(d.eigenvalues, [1.0, 2.0, 3.0])
        expected = np.array([[0.0, 0.0, 1.0], [1.0, 0.0, 0.0], [0.0, 1.0, 0.0]])
        assert np.array_equal(d.eigenvectors, expected)
        assert d.residual == 0.0

    def test_zero_matrix(self):
        d = symmetric_eigendecomposition(SquareMatrix(np.zeros((4, 4))))
        assert np.array_equal(d.eigenvalues, np.zeros(4))

    def test_order_one(self):
        d = symmetric_eigendecomposition(SquareMatrix.from_rows([[5.0]]))
        assert d.eigenvalues[0] == 5.0
        assert d.eigenvectors[0, 0] == 1.0

    def test_reference_values(self, l4p):
        d = symmetric_eigendecomposition(l4p)
        assert np.abs(d.eigenvalues - np.array(L4P_SPECTRUM)).max() < 1e-3

    def test_matches_charpoly_oracle(self, l1, path4):
        for matrix, rows in ((l1, L1_ROWS), (path4, PATH4_ROWS)):
            w = symmetric_eigendecomposition(matrix).eigenvalues
            assert np.abs(w - np.array(charpoly_roots(rows))).max() < 1e-12
        assert charpoly_roots(L1_ROWS) == list(L1_SPECTRUM)

    def test_rejects_asymmetric(self):
        with pytest.raises(NonSymmetricError):
            symmetric_eigendecomposition(SquareMatrix.from_rows([[1.0, 2.0], [0.0, 1.0]]))

    def test_deterministic_bit_identical(self):
        m = random_symmetric(7, 9)
        first = symmetric_eigendecomposition(m)
        second = symmetric_eigendecomposition(SquareMatrix(m.entries.copy()))
        assert first.eigenvalues.tobytes() == second.eigenvalues.tobytes()
        assert first.eigenvectors.tobytes() == second.eigenvectors.tobytes()

    @given(seed=st.integers(0, 2**32 - 1), n=st.integers(1, 12))
    @settings(max_examples=60, deadline=None)
    def test_reconstruction_and_orthonormality(self, seed, n):
        m = random_symmetric(seed, n)
        d = symmetric_eigendecomposition(m)
        scale = max(1.0, float(np.abs(m.entries).max()))
        v = d.eigenvectors
        assert np.abs(v.T @ v - np.eye(n)).max() <= 1e-9
        recon = v @ np.diag(d.eigenvalues) @ v.T
        assert np.abs(recon - m.entries).max() <= 1e-9 * scale
        assert (np.diff(d.eigenvalues) >= -1e-12).all()

    @given(seed=st.integers(0, 2**32 - 1), n=st.integers(2, 10))
    @settings(max_examples=40, deadline=None)
    def test_conjugation_invariance(self, seed, n):
        m = random_symmetric(seed, n)
        rng = np.random.default_rng(seed + 1)
        p = permutation_matrix(rng.permutation(n))
        conj = SquareMatrix(p.entries.T @ m.entries @ p.entries)
        wa = symmetric_eigendecomposition(m).eigenvalues
        wb = symmetric_eigendecomposition(conj).eigenvalues
        assert np.abs(wa - wb).max() <= 1e-9

    def test_convergence_error_is_exported(self):
        assert issubclass(ConvergenceError, Exception)


class TestPermutationMatrix:
    def test_reversal_matches_reference(self):
        j1 = permutation_matrix((3, 2, 1, 0))
        expected = [[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0]]
        assert np.array_equal(j1.entries, np.array(expected, dtype=float))

    def test_middle_swap_matches_reference(self):
        j2 = permutation_matrix((0, 2, 1, 3))
        expected = [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]]
        assert np.array_equal(j2.entries, np.array(expected, dtype=float))

    def test_identity(self):
        assert permutation_matrix(range(5)).equals(SquareMatrix.identity(5))

    def test_not_bijection(self):
        with pytest.raises(NotBijectionError):
            permutation_matrix((0, 0, 1))
        with pytest.raises(NotBijectionError):
            permutation_matrix((0, 2, 3))

    @given(seed=st.integers(0, 2**32 - 1), n=st.integers(1, 8))
    @settings(max_examples=40, deadline=None)
    def test_transpose_is_inverse_permutation(self, seed, n):
        rng = np.random.default_rng(seed)
        p = rng.permutation(n)
        inv = np.argsort(p)
        assert np.array_equal(permutation_matrix(p).entries.T, permutation_matrix(inv).entries)


class TestTransformValidation:
    def test_permutation_passes(self):
        verdict = validate_iso_transform(permutation_matrix((3, 2, 1, 0)), 1e-9)
        assert verdict.passed and verdict.is_permutation and not verdict.is_identity

    def test_identity_passes(self):
        verdict = validate_iso_transform(SquareMatrix.identity(4), 1e-9)
        assert verdict.passed and verdict.is_identity and verdict.is_permutation

    def test_plane_rotation_fails_ones_test(self):
        c = math.sqrt(2.0) / 2.0
        verdict = validate_iso_transform(SquareMatrix.from_rows([[c, -c], [c, c]]), 1e-9)
        assert verdict.orthonormal
        assert not verdict.fixes_ones  # row sums are 0 and 2c, not 1
        assert not verdict.passed

    def test_requires_positive_tol(self):
        with pytest.raises(ValueError):
            validate_iso_transform(SquareMatrix.identity(2), 0.0)


class TestOnesAxisRotation:
    def test_zero_angle_is_identity(self):
        assert ones_axis_rotation(3, 0.0).equals(SquareMatrix.identity(3))

    def test_full_turn_is_identity(self):
        q = ones_axis_rotation(3, 2.0 * math.pi)
        assert q.isclose(SquareMatrix.identity(3), 1e-12)

    def test_direct_multiplication_oracle(self):
        q = ones_axis_rotation(3, math.pi / 4).entries
        assert np.abs(q @ np.ones(3) - 1.0).max() <= 1e-12
        assert np.abs(q.T @ q - np.eye(3)).max() <= 1e-12

    def test_too_small(self):
        with pytest.raises(OrderTooSmallError):
            ones_axis_rotation(2, 0.3)

    @given(n=st.integers(3, 9), k=st.integers(-12, 12))
    @settings(max_examples=40, deadline=None)
    def test_always_validates(self, n, k):
        q = ones_axis_rotation(n, k * math.pi / 7.0)
        assert validate_iso_transform(q, 1e-12).passed
