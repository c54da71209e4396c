"""Unit tests for factorizations, determinants and root tables."""

import numpy as np
import pytest

from permlab.config import Settings, SvdConfig, configure
from permlab.errors import ConvergenceError, ParameterError, ShapeError, UnsupportedInputError
from permlab.linalg.cofactor import cofactor_determinant
from permlab.linalg.lup import batch_determinant, determinant, lup_decompose
from permlab.linalg.roots import phases, root_table
from permlab.linalg.svd import svd_decompose
from permlab.models.matrix import Matrix


class TestLup:
    """Tests for LUP factorization."""

    def test_identity(self) -> None:
        """Test that the identity factors trivially."""
        factors = lup_decompose(Matrix.identity(3))
        assert np.array_equal(factors.lower, np.eye(3))
        assert np.array_equal(factors.upper, np.eye(3))
        assert factors.perm == (0, 1, 2)
        assert factors.swap_parity == 1

    def test_forced_swap(self) -> None:
        """Test one pivot swap on the exchange matrix."""
        factors = lup_decompose(Matrix.from_rows([[0, 1], [1, 0]]))
        assert factors.perm == (1, 0)
        assert factors.swap_parity == -1
        assert np.array_equal(factors.lower, np.eye(2))
        assert np.array_equal(factors.upper, np.eye(2))

    def test_reconstruction(self, rng: np.random.Generator) -> None:
        """Test P·A = L·U on random matrices."""
        for n in range(1, 9):
            matrix = Matrix(rng.uniform(-1, 1, size=(n, n)))
            assert lup_decompose(matrix).reconstruction_error(matrix) < 1e-12

    def test_singular_keeps_zero_pivot(self) -> None:
        """Test that a singular matrix still factors."""
        factors = lup_decompose(Matrix.ones(2))
        assert factors.upper[1, 1] == 0

    def test_non_square(self) -> None:
        """Test that a rectangular matrix is a shape error."""
        with pytest.raises(ShapeError):
            lup_decompose(Matrix.from_rows([[1, 2, 3], [4, 5, 6]]))


class TestDeterminant:
    """Tests for scaled determinants."""

    def test_examples(self) -> None:
        """Test small known determinants."""
        assert determinant(Matrix.identity(4)).to_complex() == 1
        assert determinant(Matrix.ones(2)).to_complex() == 0
        assert determinant(Matrix.from_rows([[1, 2], [3, 4]])).to_complex() == pytest.approx(-2)

    def test_matches_cofactor_expansion(self, rng: np.random.Generator) -> None:
        """Test LUP determinants against Laplace expansion."""
        for _ in range(200):
            n = int(rng.integers(2, 7))
            matrix = Matrix(rng.uniform(-1, 1, size=(n, n)))
            expected = cofactor_determinant(matrix)
            value = determinant(matrix).to_complex()
            assert abs(value - expected) <= 1e-9 * max(abs(expected), 1e-2)

    def test_no_overflow(self) -> None:
        """Test a determinant far beyond the double range."""
        matrix = Matrix(np.eye(40) * 1e10)
        assert determinant(matrix).log2_abs == pytest.approx(400 * np.log2(10))

    def test_batch_matches_single(self, rng: np.random.Generator) -> None:
        """Test the batched determinant against the scalar one."""
        stack = rng.uniform(-1, 1, size=(20, 4, 4)) + 1j * rng.uniform(-1, 1, size=(20, 4, 4))
        batch = batch_determinant(stack)
        for k in range(20):
            expected = determinant(Matrix(stack[k])).to_complex()
            assert batch[k] == pytest.approx(expected, rel=1e-10)

    def test_batch_shape_checked(self) -> None:
        """Test that non-square stacks are refused."""
        with pytest.raises(ValueError, match="stack"):
            batch_determinant(np.zeros((3, 2, 4)))


class TestSvd:
    """Tests for the one-sided Jacobi SVD."""

    def test_identity(self) -> None:
        """Test singular values of the identity."""
        factors = svd_decompose(Matrix.identity(3))
        assert np.allclose(factors.sigma, [1, 1, 1])
        assert factors.rank == 3

    def test_all_ones_has_rank_one(self) -> None:
        """Test J₃ has the single singular value 3."""
        factors = svd_decompose(Matrix.ones(3))
        assert factors.sigma[0] == pytest.approx(3.0)
        assert factors.sigma[1] == 0.0
        assert factors.sigma[2] == 0.0
        assert factors.rank == 1

    def test_diagonal(self) -> None:
        """Test diag(2, 1) keeps its order."""
        factors = svd_decompose(Matrix.from_rows([[2, 0], [0, 1]]))
        assert np.allclose(factors.sigma, [2, 1])
        assert np.allclose(np.abs(factors.left), np.eye(2))
        assert np.allclose(np.abs(factors.right), np.eye(2))

    def test_reconstruction_and_orthogonality(self, rng: np.random.Generator) -> None:
        """Test U Σ Vᵀ = A with orthogonal U and V."""
        for n in range(2, 9):
            matrix = Matrix(rng.uniform(-1, 1, size=(n, n)))
            factors = svd_decompose(matrix)
            assert np.abs(factors.reconstruct() - matrix.real).max() < 1e-9
            assert np.abs(factors.left.T @ factors.left - np.eye(n)).max() < 1e-9
            assert np.abs(factors.right.T @ factors.right - np.eye(n)).max() < 1e-9
            assert np.all(np.diff(factors.sigma) <= 0)

    def test_low_rank_orthogonal_completion(self) -> None:
        """Test U stays orthogonal for a rank-1 input."""
        factors = svd_decompose(Matrix(np.outer([1, 2, 3], [1, -1, 2])))
        assert factors.rank == 1
        assert np.abs(factors.left.T @ factors.left - np.eye(3)).max() < 1e-9

    def test_complex_input_unsupported(self) -> None:
        """Test that complex matrices are refused."""
        with pytest.raises(UnsupportedInputError, match="real matrices only"):
            svd_decompose(Matrix.from_rows([[1j, 0], [0, 1]]))

    def test_sweep_cap(self, rng: np.random.Generator) -> None:
        """Test that running out of sweeps reports the residual."""
        configure(Settings(svd=SvdConfig(tolerance=1e-12, max_sweeps=1)))
        matrix = Matrix(rng.uniform(-1, 1, size=(6, 6)))
        with pytest.raises(ConvergenceError, match="did not converge") as info:
            svd_decompose(matrix)
        assert info.value.residual > 0
        assert info.value.exit_code == 6


class TestRoots:
    """Tests for the root-of-unity table."""

    @pytest.mark.parametrize("p", [2, 3, 4, 5, 6, 8])
    def test_last_root_is_one(self, p: int) -> None:
        """Test ω**p = 1 and unit modulus."""
        table = root_table(p)
        assert table[-1] == 1
        assert np.allclose(np.abs(table), 1.0, rtol=0, atol=1e-15)

    def test_quarter_turns_exact(self) -> None:
        """Test ω = i for p = 4 and ω = -1 for p = 2."""
        assert root_table(4)[0] == 1j
        assert root_table(2)[0] == -1

    def test_sum_vanishes(self) -> None:
        """Test Σ_q ω**q = 0."""
        for p in range(2, 9):
            assert abs(root_table(p).sum()) < 1e-14

    def test_phases_map_digits(self) -> None:
        """Test that digit v maps to ω**(v + 1)."""
        assert np.array_equal(phases(np.array([0, 1]), 2), np.array([-1, 1]))

    def test_invalid_order(self) -> None:
        """Test p < 2."""
        with pytest.raises(ParameterError, match="p must be >= 2"):
            root_table(1)
