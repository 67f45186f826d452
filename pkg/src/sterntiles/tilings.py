"""Finite realizations of the tiling families and nesting helpers.

The infinite tilings are never materialized.  Each family is accessed as a
growing sequence of nested patches; agreement between these patches and
the automata decoders is the correctness criterion for both.
"""

from __future__ import annotations

from .errors import InvalidCenter, InvalidSector, SearchExhausted
from .lattice import (
    DOWN,
    UP,
    TriPatch,
    TriTile,
    flip,
    freeze,
    hex_rows,
)
from .ring import RingSpec
from .sigma import (
    alpha_inverse_power,
    refine_midpoint,
    supertile,
    word_to_cell,
)


def s_patch(t: TriTile, k: int) -> TriPatch:
    """The k-th nested supertile around t.

    Grown by pulling t back k times through the central-child map and
    substituting k times, so the central cell always carries t itself.
    """
    RingSpec(t.modulus).require_odd_prime("nested supertiles")
    return supertile(alpha_inverse_power(t, k), k)


def hex_seed(b: int, c: int, modulus: int) -> TriPatch:
    """Side-1 hexagonal patch: center c surrounded by six b's."""
    RingSpec(modulus).require_odd_prime("hexagonal patches")
    if c % modulus == 0:
        raise InvalidCenter("central value must be nonzero")
    rows = hex_rows(1, b % modulus)
    patch = TriPatch("hex", None, 0, 1, modulus, freeze(rows))
    rows = [list(r) for r in patch.rows]
    rows[1][1] = c % modulus  # centered coords (0, 0)
    return TriPatch("hex", None, 0, 1, modulus, freeze(rows))


def h_patch(b: int, c: int, k: int, modulus: int) -> TriPatch:
    """k rounds of p substitution steps on the hexagonal seed (side 2^{kp}).

    Blocks of p steps keep the seed centrally nested, because the three
    orientation-preserving letter matrices have order p.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    patch = hex_seed(b, c, modulus)
    for _ in range(k * modulus):
        patch = refine_midpoint(patch)
    return patch


def crop_up_region(patch: TriPatch, i0: int, j0: int, side: int) -> TriPatch:
    """Up-oriented triangular subregion with origin corner (i0, j0)."""
    rows = [[patch.get(i0 + i, j0 + j) for i in range(side - j + 1)]
            for j in range(side + 1)]
    orientation = patch.orientation if patch.shape == "triangle" else UP
    return TriPatch("triangle", orientation, 0, side, patch.modulus,
                    freeze(rows))


def crop_alpha_center(patch: TriPatch) -> TriPatch:
    """The central child region of a triangular patch of even side.

    Physically this region has the opposite orientation; it is stored
    half-turned, so the read order reverses.
    """
    n = patch.side
    if patch.shape != "triangle" or n % 2 != 0:
        raise ValueError("central region needs a triangular patch of even side")
    s = n // 2
    rows = [[patch.get(s - i, s - j) for i in range(s - j + 1)]
            for j in range(s + 1)]
    return TriPatch("triangle", flip(patch.orientation), 0, s, patch.modulus,
                    freeze(rows))


def crop_hex_center(patch: TriPatch, side: int) -> TriPatch:
    """Central hexagonal subpatch of a hexagonal patch."""
    if patch.shape != "hex" or side > patch.side:
        raise ValueError("need a hexagonal patch at least as large as the crop")
    rows = []
    for j in range(-side, side + 1):
        imin = max(-side, -side - j)
        imax = min(side, side - j)
        rows.append([patch.get(i, j) for i in range(imin, imax + 1)])
    return TriPatch("hex", None, 0, side, patch.modulus, freeze(rows))


_ROT60 = lambda i, j: (-j, i + j)  # noqa: E731


def tile_from_points(patch: TriPatch, pts) -> TriTile:
    """Read the tile spanned by three lattice points, ordering corners by
    the geometric convention (up: bottom-left, bottom-right, top; down:
    top-right, top-left, bottom)."""
    by_j: dict[int, list[tuple[int, int]]] = {}
    for i, j in pts:
        by_j.setdefault(j, []).append((i, j))
    (ja, pa), (jb, pb) = sorted(by_j.items())
    if len(pa) == 2:
        # two corners on the lower row: up tile
        (i1, _), (i2, _) = sorted(pa)
        order = [(i1, ja), (i2, ja), pb[0]]
        orientation = UP
    else:
        (i1, _), (i2, _) = sorted(pb)
        order = [(i2, jb), (i1, jb), pa[0]]
        orientation = DOWN
    corners = tuple(patch.get(i, j) for i, j in order)
    return TriTile(orientation, corners, patch.modulus)


def sector_tile(patch: TriPatch, sector: int, word: str) -> TriTile:
    """Look up the tile of a hexagonal patch addressed by (sector, word).

    Sector 0 is the up-oriented triangular region with origin at the
    center; sector r is its rotation by r steps of 60 degrees.  The tile
    is read geometrically, independent of any matrix decoding.
    """
    if patch.shape != "hex":
        raise ValueError("sector lookup needs a hexagonal patch")
    if not 0 <= sector <= 5:
        raise InvalidSector(f"sector must be 0..5, got {sector}")
    if 2 ** len(word) != patch.side:
        raise ValueError("word length must match the patch order")
    i, j, cell = word_to_cell(word)
    if cell == UP:
        pts = [(i, j), (i + 1, j), (i, j + 1)]
    else:
        pts = [(i + 1, j + 1), (i, j + 1), (i + 1, j)]
    for _ in range(sector):
        pts = [_ROT60(i, j) for i, j in pts]
    return tile_from_points(patch, pts)


_HEX_NEIGHBORS = ((1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1))


def hex_seed_reachability(b: int, c: int, modulus: int,
                          k_bound: int = 8) -> int:
    """Least k such that the hexagonal seed (center c, ring of b) occurs
    inside the k-th substitution of the all-but-one-ones seed tile.

    Direct scan; raises SearchExhausted past k_bound.
    """
    RingSpec(modulus).require_odd_prime("hexagonal seed search")
    b %= modulus
    c %= modulus
    patch = supertile(TriTile(UP, (1, 1, 0), modulus), 0)
    for k in range(k_bound + 1):
        n = patch.side
        rows = patch.rows
        for j in range(1, n):
            row = rows[j]
            for i in range(1, n - j):
                if row[i] != c:
                    continue
                if all(rows[j + dj][i + di] == b for di, dj in _HEX_NEIGHBORS):
                    return k
        patch = refine_midpoint(patch)
    raise SearchExhausted(
        f"no hexagonal seed ({b}, {c}) within {k_bound} substitution steps"
    )
