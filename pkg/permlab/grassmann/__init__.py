"""Symbolic Grassmann and zeon algebra for identity checks at tiny sizes."""

from permlab.grassmann.identities import HsChannel, IdentityCheck, verify_hs_identity
from permlab.grassmann.single_mode import Pair, SingleModeGrassmann, integrate_pair
from permlab.grassmann.zeon import (
    ZeonElement,
    berezin_top_coefficient,
    quadratic_form,
    zeon_exp_quadratic,
    zeon_product_form,
)

__all__ = [
    "HsChannel",
    "IdentityCheck",
    "Pair",
    "SingleModeGrassmann",
    "ZeonElement",
    "berezin_top_coefficient",
    "integrate_pair",
    "quadratic_form",
    "verify_hs_identity",
    "zeon_exp_quadratic",
    "zeon_product_form",
]
