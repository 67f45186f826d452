"""Additive substitution tilings over Z/m.

Decorated triangles, segments and squares carry values at their corners; a
substitution splits each tile and the new corner values are sums of the
old ones.  The package generates the resulting patches, gives random
access into them through small matrix automata, verifies the structural
claims behind their aperiodicity, and renders them.
"""

from .errors import SternTilesError
from .lattice import (
    DOWN,
    UP,
    SegPatch,
    SegTile,
    SquarePatch,
    TriPatch,
    TriTile,
    tile_at,
)
from .sigma import sigma_children, supertile, tile_at_word, variant_rule
from .tau import fusc, tau_children, tau_word
from .tilings import h_patch, s_patch

__all__ = [
    "DOWN",
    "SegPatch",
    "SegTile",
    "SquarePatch",
    "SternTilesError",
    "TriPatch",
    "TriTile",
    "UP",
    "fusc",
    "h_patch",
    "s_patch",
    "sigma_children",
    "supertile",
    "tau_children",
    "tau_word",
    "tile_at",
    "tile_at_word",
    "variant_rule",
]

__version__ = "0.1.0"
