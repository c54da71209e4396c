"""Coefficient-wise checks of the discrete Hubbard-Stratonovich identities.

Every left-hand side is e**(a φ*φ) = 1 + a φ*φ. Right-hand sides average
products of linear exponentials over signs or p-th roots of unity and are
expanded exactly in the single-mode Grassmann algebra (or, for the composite
zeon decoupling, in the two-mode zeon algebra).
"""

import cmath
from dataclasses import dataclass
from enum import Enum

from permlab.errors import ParameterError
from permlab.grassmann.single_mode import Pair, SingleModeGrassmann, integrate_pair
from permlab.grassmann.zeon import ZeonElement, berezin_top_coefficient
from permlab.linalg.roots import root_table

IDENTITY_TOLERANCE = 1e-12


class HsChannel(str, Enum):
    """Decoupling identities that can be verified."""

    DENSITY_Z2 = "density-z2"
    ZP = "zp"
    PAIRING_ZP = "pairing-zp"
    ZEON_COMPOSITE_Z2 = "zeon-composite-z2"
    MEASURE_FACTORIZATION = "measure-factorization"


@dataclass(frozen=True)
class IdentityCheck:
    """Outcome of one identity check."""

    channel: HsChannel
    a: complex
    p: int
    holds: bool
    residual: float


def _root(a: complex, branch: int) -> complex:
    if branch not in (1, -1):
        raise ParameterError(f"branch must be +1 or -1, got {branch}")
    return branch * cmath.sqrt(a)


def _phi_star_phi() -> SingleModeGrassmann:
    return SingleModeGrassmann.phi_star() * SingleModeGrassmann.phi()


def _lhs(a: complex) -> SingleModeGrassmann:
    return (_phi_star_phi() * complex(a)).exp()


def _density_z2(a: complex, branch: int) -> SingleModeGrassmann:
    root = _root(a, branch)
    xi = SingleModeGrassmann.bilinear(Pair.XI)
    eta = SingleModeGrassmann.bilinear(Pair.ETA)
    total = SingleModeGrassmann.scalar(0)
    for s in (1, -1):
        total = total + (xi * (s * root)).exp() * (eta * (s * root)).exp()
    return total.scale(0.5)


def _zp(a: complex, p: int, branch: int) -> SingleModeGrassmann:
    root = _root(a, branch)
    xi = SingleModeGrassmann.bilinear(Pair.XI)
    eta = SingleModeGrassmann.bilinear(Pair.ETA)
    total = SingleModeGrassmann.scalar(0)
    for omega in root_table(p):
        total = total + (xi * (omega * root) + eta * (omega.conjugate() * root)).exp()
    return total.scale(1 / p)


def _pairing_zp(a: complex, p: int, branch: int) -> SingleModeGrassmann:
    root = _root(a, branch)
    one = SingleModeGrassmann.scalar(1)
    phi_star = SingleModeGrassmann.phi_star()
    phi = SingleModeGrassmann.phi()
    total = SingleModeGrassmann.scalar(0)
    for omega in root_table(p):
        # φ and φ* are even and square to zero: e**(cφ) = 1 + cφ
        total = total + (one + phi_star * (omega * root)) * (
            one + phi * (omega.conjugate() * root)
        )
    return total.scale(1 / p)


def _zeon_composite(a: complex, branch: int) -> float:
    """φ = μν with even μ (mode 0) and ν (mode 1); returns the residual."""
    root = _root(a, branch)
    mu = ZeonElement.star(2, 0) * ZeonElement.plain(2, 0)
    nu = ZeonElement.star(2, 1) * ZeonElement.plain(2, 1)
    lhs = (ZeonElement(2, {(0b11, 0b11): a})).exp()
    rhs = ZeonElement.scalar(2, 0)
    for s in (1, -1):
        rhs = rhs + (mu * (s * root)).exp() * (nu * (s * root)).exp()
    return lhs.max_difference(rhs.scale(0.5))


def _measure_factorization(a: complex) -> float:
    """∫[dφ*dφ] f against ∫[dξ*dξ]∫[dη*dη] f for f = e**(a φ*φ)."""
    zeon_side = berezin_top_coefficient(ZeonElement(1, {(0, 0): 1, (1, 1): a}))
    iterated = integrate_pair(integrate_pair(_lhs(a), Pair.ETA), Pair.XI)
    residual = abs(iterated.coefficient(0) - zeon_side)
    nonscalar = max((abs(iterated.coefficient(m)) for m in range(1, 16)), default=0.0)
    return max(residual, nonscalar)


def verify_hs_identity(
    channel: HsChannel | str, a: complex, p: int = 2, branch: int = 1
) -> IdentityCheck:
    """Expand both sides of one identity and compare every coefficient.

    Args:
        channel: Which identity to check
        a: The coupling; any real or complex value
        p: Root-of-unity order for the ℤₚ channels
        branch: +1 for the principal square root of a, -1 for the other one

    Returns:
        IdentityCheck with ``holds`` true when the largest coefficient
        difference is within 1e-12 · max(1, |a|)

    Raises:
        ParameterError: Unknown channel, p < 2 or invalid branch
    """
    try:
        tag = HsChannel(channel)
    except ValueError as e:
        raise ParameterError(f"unknown HS channel {channel!r}") from e
    if tag in (HsChannel.ZP, HsChannel.PAIRING_ZP) and p < 2:
        raise ParameterError(f"phase order p must be >= 2, got {p}")
    a = complex(a)

    if tag is HsChannel.DENSITY_Z2:
        residual = _lhs(a).max_difference(_density_z2(a, branch))
    elif tag is HsChannel.ZP:
        residual = _lhs(a).max_difference(_zp(a, p, branch))
    elif tag is HsChannel.PAIRING_ZP:
        residual = _lhs(a).max_difference(_pairing_zp(a, p, branch))
    elif tag is HsChannel.ZEON_COMPOSITE_Z2:
        residual = _zeon_composite(a, branch)
    else:
        _root(a, branch)
        residual = _measure_factorization(a)

    tolerance = IDENTITY_TOLERANCE * max(1.0, abs(a))
    return IdentityCheck(channel=tag, a=a, p=p, holds=residual <= tolerance, residual=residual)

