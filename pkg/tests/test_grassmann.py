"""Unit tests for the zeon and single-mode Grassmann algebras."""

import numpy as np
import pytest

from permlab.config import configure, get_settings
from permlab.errors import ParameterError, SizeGuardError
from permlab.exact import per_naive
from permlab.grassmann import (
    HsChannel,
    Pair,
    SingleModeGrassmann,
    ZeonElement,
    berezin_top_coefficient,
    integrate_pair,
    verify_hs_identity,
    zeon_exp_quadratic,
    zeon_product_form,
)
from permlab.grassmann.single_mode import ETA, ETA_STAR, XI, XI_STAR
from permlab.models.matrix import Matrix


class TestZeon:
    """Tests for the commuting nilpotent algebra."""

    def test_single_mode_exponential(self) -> None:
        """Test exp(a φ*φ) = 1 + a φ*φ."""
        element = zeon_exp_quadratic(Matrix.from_rows([[2.5]]))
        assert element.coefficient(0, 0) == 1
        assert element.coefficient(1, 1) == 2.5
        assert len(element.coefficients) == 2

    @pytest.mark.parametrize(
        ("rows", "expected"),
        [
            ([[1, 1], [1, 1]], 2),
            ([[1, 2], [3, 4]], 10),
            ([[1, 0], [0, 1]], 1),
        ],
    )
    def test_top_coefficient_is_permanent(self, rows: list, expected: float) -> None:
        """Test the Berezin integral of small Gaussians."""
        top = berezin_top_coefficient(zeon_exp_quadratic(Matrix.from_rows(rows)))
        assert top == pytest.approx(expected)

    def test_all_ones_four(self) -> None:
        """Test per J₄ = 24 symbolically."""
        assert berezin_top_coefficient(zeon_exp_quadratic(Matrix.ones(4))) == pytest.approx(24)

    def test_random_against_permutation_sum(self, rng: np.random.Generator) -> None:
        """Test random 3×3 matrices against per_naive."""
        for _ in range(5):
            matrix = Matrix(rng.uniform(-1, 1, size=(3, 3)))
            top = berezin_top_coefficient(zeon_exp_quadratic(matrix))
            assert top == pytest.approx(per_naive(matrix).complex_value, abs=1e-12)

    def test_product_form(self, rng: np.random.Generator) -> None:
        """Test Π_i (1 + φ*_i Σ_j A_ij φ_j) equals the exponential."""
        matrix = Matrix(rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3)))
        difference = zeon_exp_quadratic(matrix).max_difference(zeon_product_form(matrix))
        assert difference < 1e-12

    def test_commutative_and_associative(self) -> None:
        """Test generators commute and products associate."""
        x = ZeonElement.star(2, 0) + ZeonElement.plain(2, 1).scale(2)
        y = ZeonElement.plain(2, 0) + ZeonElement.scalar(2, 3)
        z = ZeonElement.star(2, 1)
        assert (x * y).max_difference(y * x) == 0
        assert ((x * y) * z).max_difference(x * (y * z)) == 0

    def test_generators_square_to_zero(self) -> None:
        """Test nilpotency."""
        star = ZeonElement.star(2, 1)
        assert (star * star).is_zero()

    def test_mode_count_mismatch(self) -> None:
        """Test elements on different mode counts do not combine."""
        with pytest.raises(ValueError, match="modes"):
            ZeonElement.scalar(1, 1) + ZeonElement.scalar(2, 1)

    def test_size_guard(self) -> None:
        """Test n = 5 is refused unless overridden."""
        with pytest.raises(SizeGuardError, match="zeon n 5"):
            zeon_exp_quadratic(Matrix.identity(5))
        configure(get_settings().with_guard_override(True))
        top = berezin_top_coefficient(zeon_product_form(Matrix.identity(5)))
        assert top == pytest.approx(1)


class TestSingleMode:
    """Tests for the one-mode Grassmann algebra."""

    def test_generators_anticommute(self) -> None:
        """Test ξ*ξ = -ξξ*."""
        xi_star = SingleModeGrassmann.generator(XI_STAR)
        xi = SingleModeGrassmann.generator(XI)
        assert (xi_star * xi + xi * xi_star).max_difference(SingleModeGrassmann.scalar(0)) == 0

    def test_generators_square_to_zero(self) -> None:
        """Test η² = 0."""
        eta = SingleModeGrassmann.generator(ETA)
        assert not np.any((eta * eta).coefficients)

    def test_composite_pair(self) -> None:
        """Test φ*φ is the canonical top monomial with sign +1."""
        product = SingleModeGrassmann.phi_star() * SingleModeGrassmann.phi()
        assert product.coefficient(0b1111) == 1
        assert not np.any(product.coefficients[:15])

    def test_composite_is_even(self) -> None:
        """Test φ commutes with an odd generator."""
        phi = SingleModeGrassmann.phi()
        eta_star = SingleModeGrassmann.generator(ETA_STAR)
        assert (phi * eta_star).max_difference(eta_star * phi) == 0

    def test_exponential_truncates(self) -> None:
        """Test exp(ξ*ξ + η*η) = 1 + ξ*ξ + η*η + ξ*ξη*η."""
        value = (
            SingleModeGrassmann.bilinear(Pair.XI) + SingleModeGrassmann.bilinear(Pair.ETA)
        ).exp()
        assert value.coefficient(0) == 1
        assert value.coefficient(0b0011) == 1
        assert value.coefficient(0b1100) == 1
        assert value.coefficient(0b1111) == 1

    def test_exp_of_odd_element(self) -> None:
        """Test exp refuses odd elements."""
        with pytest.raises(ValueError, match="even"):
            SingleModeGrassmann.generator(XI).exp()

    def test_integrate_pair_normalization(self) -> None:
        """Test ∫ χχ* = 1 and ∫ χ*χ = -1."""
        xi_star = SingleModeGrassmann.generator(XI_STAR)
        xi = SingleModeGrassmann.generator(XI)
        assert integrate_pair(xi * xi_star, Pair.XI).coefficient(0) == 1
        assert integrate_pair(xi_star * xi, Pair.XI).coefficient(0) == -1

    def test_integrate_pair_drops_missing(self) -> None:
        """Test monomials without the pair integrate to zero."""
        element = SingleModeGrassmann.bilinear(Pair.ETA) + SingleModeGrassmann.scalar(3)
        assert not np.any(integrate_pair(element, Pair.XI).coefficients)

    def test_iterated_integral(self) -> None:
        """Test ∫∫ exp(a φ*φ) = a."""
        a = 1.5 - 0.5j
        lhs = (SingleModeGrassmann.phi_star() * SingleModeGrassmann.phi() * a).exp()
        value = integrate_pair(integrate_pair(lhs, Pair.ETA), Pair.XI)
        assert value.coefficient(0) == pytest.approx(a)


class TestHsIdentities:
    """Tests for the coefficient-wise identity checks."""

    @pytest.mark.parametrize("branch", [1, -1])
    @pytest.mark.parametrize("a", [0.0, 2.5, -1.0, 3 - 4j])
    def test_density_z2(self, a: complex, branch: int) -> None:
        """Test the sign decoupling for both square-root branches."""
        assert verify_hs_identity("density-z2", a, branch=branch).holds

    @pytest.mark.parametrize("p", [2, 3, 4, 5])
    @pytest.mark.parametrize("branch", [1, -1])
    def test_phase_channels(self, p: int, branch: int) -> None:
        """Test the ℤₚ and pairing ℤₚ decouplings."""
        for channel in (HsChannel.ZP, HsChannel.PAIRING_ZP):
            check = verify_hs_identity(channel, 2.5 + 1j, p=p, branch=branch)
            assert check.holds, check

    def test_zeon_composite(self) -> None:
        """Test decoupling a composite zeon pair."""
        check = verify_hs_identity(HsChannel.ZEON_COMPOSITE_Z2, -7.0, branch=-1)
        assert check.holds
        assert check.residual < 1e-12 * 7

    def test_measure_factorization(self) -> None:
        """Test the iterated integral against the zeon integral."""
        assert verify_hs_identity(HsChannel.MEASURE_FACTORIZATION, 4j).holds

    def test_wrong_measure_fails(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """Test that a broken phase table makes the ℤₚ check fail."""
        monkeypatch.setattr(
            "permlab.grassmann.identities.root_table", lambda p: np.ones(p, complex)
        )
        assert not verify_hs_identity(HsChannel.ZP, 2.0, p=3).holds

    def test_unknown_channel(self) -> None:
        """Test an unknown channel name."""
        with pytest.raises(ParameterError, match="unknown HS channel"):
            verify_hs_identity("bogus", 1.0)

    def test_small_phase_order(self) -> None:
        """Test p < 2 for a phase channel."""
        with pytest.raises(ParameterError, match="p must be >= 2"):
            verify_hs_identity(HsChannel.ZP, 1.0, p=1)

    def test_bad_branch(self) -> None:
        """Test the branch must be ±1."""
        with pytest.raises(ParameterError, match="branch"):
            verify_hs_identity(HsChannel.DENSITY_Z2, 1.0, branch=0)
