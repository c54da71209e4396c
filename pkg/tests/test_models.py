"""Unit tests for matrices, scaled values, schemes and matrix loading."""

import json

import numpy as np
import pytest

from permlab.errors import ConfigurationError, NonFiniteError, ParseError, ShapeError
from permlab.linalg.io import load_matrix, parse_json_matrix, parse_text_matrix, read_matrix
from permlab.models.matrix import Matrix, nonzeros
from permlab.models.results import Configuration, EnumerationResult, EstimatorSample
from permlab.models.scaled import ScaledValue
from permlab.models.scheme import Channel, DecouplingScheme, parse_scheme, scheme_to_document


class TestMatrix:
    """Tests for the Matrix model."""

    def test_entries_are_read_only(self) -> None:
        """Test that stored entries cannot be modified."""
        matrix = Matrix.ones(2)
        with pytest.raises(ValueError):
            matrix.data[0, 0] = 5

    def test_non_finite_rejected(self) -> None:
        """Test that NaN entries are rejected."""
        with pytest.raises(NonFiniteError, match="finite"):
            Matrix(np.array([[1.0, np.nan], [0.0, 1.0]]))

    def test_ragged_rows_rejected(self) -> None:
        """Test that rows of different lengths are a shape error."""
        with pytest.raises(ShapeError, match="ragged"):
            Matrix.from_rows([[1, 2], [3]])

    def test_require_square(self) -> None:
        """Test that a non-square matrix is refused by name."""
        matrix = Matrix.from_rows([[1, 2, 3], [4, 5, 6]])
        with pytest.raises(ShapeError, match="per requires a square matrix, got 2x3"):
            matrix.require_square("per")

    def test_is_real_and_negative_detection(self) -> None:
        """Test real and sign classification."""
        assert Matrix.ones(2).is_real
        assert not Matrix.ones(2).has_negative_or_complex()
        assert Matrix.from_rows([[-1, 1], [1, 1]]).has_negative_or_complex()
        assert not Matrix.from_rows([[1j, 0], [0, 1]]).is_real


class TestNonzeros:
    """Tests for nonzero patterns."""

    def test_all_ones_pattern(self, ones2: Matrix) -> None:
        """Test row-major triples of the 2×2 all-ones matrix."""
        pattern = nonzeros(ones2)
        assert pattern.m == 4
        assert pattern.triples == ((0, 0, 1), (0, 1, 1), (1, 0, 1), (1, 1, 1))

    def test_identity_pattern(self) -> None:
        """Test that the identity has n nonzeros."""
        assert nonzeros(Matrix.identity(3)).m == 3

    def test_single_entry(self) -> None:
        """Test a matrix with one nonzero."""
        pattern = nonzeros(Matrix.from_rows([[0, 5], [0, 0]]))
        assert pattern.m == 1
        assert pattern.triples == ((0, 1, 5),)

    def test_ordering_is_stable(self, rng: np.random.Generator) -> None:
        """Test that two calls produce identical sequences."""
        matrix = Matrix(rng.integers(0, 2, size=(5, 5)).astype(float))
        assert nonzeros(matrix).triples == nonzeros(matrix).triples


class TestScaledValue:
    """Tests for the overflow-safe scaled representation."""

    def test_zero_representation(self) -> None:
        """Test that zero has mantissa 0 and exponent 0."""
        zero = ScaledValue.from_complex(0)
        assert zero.mantissa == 0
        assert zero.exponent == 0

    @pytest.mark.parametrize("value", [1.0, -3.5, 1e-300, 7.25e200, 2 + 3j, -0.5j])
    def test_round_trip(self, value: complex) -> None:
        """Test exact conversion to and from plain complex."""
        scaled = ScaledValue.from_complex(value)
        assert 1.0 <= abs(scaled.mantissa) < 2.0
        assert scaled.to_complex() == complex(value)

    def test_product_beyond_double_range(self) -> None:
        """Test that products keep their exponent when a double would overflow."""
        big = ScaledValue.from_complex(1e200)
        product = big * big
        assert product.log2_abs == pytest.approx(2 * np.log2(1e200))
        assert product.to_complex().real == float("inf")

    def test_denormalized_mantissa_rejected(self) -> None:
        """Test mantissa range validation."""
        with pytest.raises(ValueError, match="outside"):
            ScaledValue(4.0, 0)

    def test_scale_pow2_is_exact(self) -> None:
        """Test scaling by powers of two."""
        assert ScaledValue.from_complex(3.0).scale_pow2(-1).to_complex() == 1.5


class TestResults:
    """Tests for result value objects."""

    def test_configuration_range_checked(self) -> None:
        """Test configuration digits must lie below their radix."""
        with pytest.raises(ValueError, match="outside"):
            Configuration(values=(0, 3), radices=(2, 3))

    def test_configuration_space_size(self) -> None:
        """Test the product of radices."""
        assert Configuration(values=(0, 2, 1), radices=(2, 3, 2)).config_space_size == 12

    def test_sample_must_be_finite(self) -> None:
        """Test that infinite samples are rejected."""
        with pytest.raises(ValueError, match="finite"):
            EstimatorSample(value=complex(float("inf"), 0))

    @pytest.mark.parametrize("value", [-1.0 + 0j, 2 + 1e-3j])
    def test_nonnegative_sample_checked(self, value: complex) -> None:
        """Test a |·|² sample must be a nonnegative real."""
        with pytest.raises(ValueError, match="nonnegative real"):
            EstimatorSample(value=value, nonnegative=True)
        assert EstimatorSample(value=value).value == value

    def test_enumeration_variance(self) -> None:
        """Test E|X|² - |EX|²."""
        result = EnumerationResult("gg", mean=2 + 0j, second_moment=8.0, config_space_size=16)
        assert result.variance == 4.0


class TestMatrixLoading:
    """Tests for the text and JSON matrix formats."""

    def test_text_all_ones(self) -> None:
        """Test a plain 2×2 text matrix."""
        assert parse_text_matrix("1 1\n1 1") == Matrix.ones(2)

    def test_text_identity_with_comments(self) -> None:
        """Test that comment and blank lines are skipped."""
        text = "# identity\n1 0 0\n\n0 1 0\n0 0 1\n"
        assert parse_text_matrix(text) == Matrix.identity(3)

    def test_text_ragged_row_names_line(self) -> None:
        """Test ragged rows report their line number."""
        with pytest.raises(ParseError, match="line 2: ragged row"):
            parse_text_matrix("1 2\n3\n")

    def test_text_non_numeric(self) -> None:
        """Test a non-numeric token."""
        with pytest.raises(ParseError, match="non-numeric"):
            parse_text_matrix("1 x\n1 1")

    def test_text_empty(self) -> None:
        """Test empty input."""
        with pytest.raises(ParseError, match="empty"):
            parse_text_matrix("# nothing here\n")

    def test_json_with_zero_imaginary_part(self) -> None:
        """Test the JSON format with an explicit imaginary part."""
        matrix = parse_json_matrix('{"re": [[1,2],[3,4]], "im": [[0,0],[0,0]]}')
        assert matrix == Matrix.from_rows([[1, 2], [3, 4]])
        assert matrix.is_real

    def test_json_complex(self) -> None:
        """Test the imaginary part is applied."""
        matrix = parse_json_matrix({"re": [[1, 0], [0, 1]], "im": [[0, 2], [0, 0]]})
        assert matrix.data[0, 1] == 2j

    def test_json_shape_mismatch(self) -> None:
        """Test that im must match re."""
        with pytest.raises(ParseError, match="same shape"):
            parse_json_matrix({"re": [[1, 0], [0, 1]], "im": [[0, 0]]})

    def test_load_matrix_detects_format(self) -> None:
        """Test format detection from the first character."""
        assert load_matrix('{"re": [[1,1],[1,1]]}') == load_matrix("1 1\n1 1")

    def test_read_missing_file(self, tmp_path) -> None:
        """Test a missing file is a parse error."""
        with pytest.raises(ParseError, match="cannot read"):
            read_matrix(tmp_path / "missing.txt")


class TestSchemes:
    """Tests for decoupling schemes."""

    @pytest.fixture
    def pattern(self, ones2: Matrix):
        """Nonzero pattern of the 2×2 all-ones matrix."""
        return nonzeros(ones2)

    def test_parse_with_fixed_multiplier(self, pattern) -> None:
        """Test a sign scheme with an i multiplier on entry (0, 1)."""
        document = json.dumps(
            [
                {"row": 0, "col": 0, "channel": "sign"},
                {"row": 0, "col": 1, "channel": "sign", "fixed": {"re": 0, "im": 1}},
                {"row": 1, "col": 0, "channel": "sign"},
                {"row": 1, "col": 1, "channel": "sign"},
            ]
        )
        scheme = parse_scheme(document, pattern)
        assert scheme.m == 4
        assert scheme.entries[1].fixed == 1j
        assert scheme.config_space_size == 16

    def test_entries_matched_by_position(self, pattern) -> None:
        """Test that entry order in the document does not matter."""
        positions = [(1, 1), (0, 0), (1, 0), (0, 1)]
        entries = [{"row": r, "col": c, "channel": "phase", "p": 3} for r, c in positions]
        scheme = parse_scheme(json.dumps(entries), pattern)
        assert [(e.row, e.col) for e in scheme.entries] == [(0, 0), (0, 1), (1, 0), (1, 1)]
        assert scheme.radices == (3, 3, 3, 3)

    def test_missing_entry(self, pattern) -> None:
        """Test a scheme that does not cover every nonzero."""
        with pytest.raises(ConfigurationError, match="no entry for nonzero"):
            parse_scheme(json.dumps([{"row": 0, "col": 0}]), pattern)

    def test_non_unit_fixed_multiplier(self, pattern) -> None:
        """Test fixed multipliers must be unit-modulus."""
        entries = [{"row": r, "col": c} for r, c in [(0, 0), (0, 1), (1, 0)]]
        entries.append({"row": 1, "col": 1, "fixed": {"re": 2, "im": 0}})
        with pytest.raises(ConfigurationError, match="unit-modulus"):
            parse_scheme(json.dumps(entries), pattern)

    def test_phase_without_order(self, pattern) -> None:
        """Test that the phase channel needs p."""
        with pytest.raises(ParseError, match="invalid scheme entry"):
            parse_scheme(json.dumps([{"row": 0, "col": 0, "channel": "phase"}]), pattern)

    def test_invalid_json(self, pattern) -> None:
        """Test malformed scheme documents."""
        with pytest.raises(ParseError, match="not valid JSON"):
            parse_scheme("[{", pattern)

    def test_document_round_trip(self, pattern) -> None:
        """Test that a serialized scheme parses back to itself."""
        scheme = DecouplingScheme.uniform(pattern, Channel.PHASE, p=4, fixed={(1, 1): -1j})
        parsed = parse_scheme(json.dumps(scheme_to_document(scheme)), pattern)
        assert parsed == scheme
